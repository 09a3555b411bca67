#include "coxfs/classalg.hpp"

#include "coxfs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace coxfs {

namespace {

template <class Mul, class Inv, class ClassOf>
std::vector<long> structure_constants(std::size_t n, int r, const std::vector<std::size_t>& reps, Mul mul, Inv inv,
                                      ClassOf class_of)
{
    std::vector<long> a(static_cast<std::size_t>(r) * r * r, 0);
    std::vector<int> cls(n);
    for (std::size_t x = 0; x < n; ++x) cls[x] = class_of(x);
    for (int k = 0; k < r; ++k)
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t y = mul(inv(x), reps[k]);
            ++a[(static_cast<std::size_t>(cls[x]) * r + cls[y]) * r + k];
        }
    return a;
}

// ---- arithmetic modulo a prime ----

using i64 = long long;

i64 md(i64 a, i64 p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

i64 powmod(i64 b, i64 e, i64 p)
{
    i64 r = 1;
    b = md(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 p) { return powmod(md(a, p), p - 2, p); }

bool is_prime(i64 n)
{
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 primitive_root(i64 p)
{
    std::vector<i64> fac;
    i64 m = p - 1;
    for (i64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fac.push_back(m);
    for (i64 g = 2;; ++g) {
        bool ok = true;
        for (i64 q : fac)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

using ModMat = std::vector<std::vector<i64>>;

// Row-reduce in place; returns pivot columns.
std::vector<int> rref(ModMat& m, i64 p)
{
    std::vector<int> piv;
    if (m.empty()) return piv;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        i64 iv = invmod(m[r][c], p);
        for (auto& x : m[r]) x = x * iv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            i64 f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = md(m[i][j] - f * m[r][j], p);
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return piv;
}

// Basis of {x : m x = 0}.
ModMat nullspace(ModMat m, i64 p, std::size_t cols)
{
    auto piv = rref(m, p);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    ModMat out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<i64> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = md(-m[r][f], p);
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_mod(ModMat m, i64 p) { return rref(m, p).size(); }

} // namespace

ClassAlgebra class_algebra(const CoxeterGroup& g)
{
    ClassAlgebra ca;
    ca.order = g.size();
    int r = g.num_classes();
    std::vector<std::size_t> reps;
    for (int c = 0; c < r; ++c) {
        ca.class_size.push_back(g.class_size(c));
        ca.elem_order.push_back(g.class_order(c));
        ca.inverse.push_back(g.inverse_class(c));
        std::vector<int> pw;
        for (int e = 0; e < ca.elem_order.back(); ++e) pw.push_back(g.power_class(c, e));
        ca.power.push_back(std::move(pw));
        reps.push_back(g.class_rep(c));
    }
    ca.structure = structure_constants(
        g.size(), r, reps,
        [&](std::size_t a, std::size_t b) {
            return static_cast<std::size_t>(g.multiply(static_cast<ElementId>(a), static_cast<ElementId>(b)));
        },
        [&](std::size_t a) { return static_cast<std::size_t>(g.inverse(static_cast<ElementId>(a))); },
        [&](std::size_t a) { return g.class_of(static_cast<ElementId>(a)); });
    return ca;
}

std::vector<ClassFunction> dixon_characters(const ClassAlgebra& ca)
{
    const int r = ca.num_classes();
    if (r == 0 || ca.class_size[0] != 1) throw std::invalid_argument("dixon: class 0 must be the identity");
    i64 exponent = 1;
    for (int o : ca.elem_order) exponent = std::lcm(exponent, static_cast<i64>(o));
    i64 bound = std::max<i64>(1000, 4 * static_cast<i64>(std::sqrt(static_cast<double>(ca.order))) + 4);
    i64 p = (bound / exponent + 1) * exponent + 1;
    while (!is_prime(p)) p += exponent;
    i64 ze = powmod(primitive_root(p), (p - 1) / exponent, p);

    // A_i acts on column vectors: (A_i v)_j = sum_k a(i,j,k) v_k; omega is a common eigenvector.
    auto apply = [&](int i, const std::vector<i64>& v) {
        std::vector<i64> u(r, 0);
        for (int j = 0; j < r; ++j) {
            i64 s = 0;
            for (int k = 0; k < r; ++k)
                if (v[k]) s = (s + (ca.a(i, j, k) % p) * v[k]) % p;
            u[j] = s;
        }
        return u;
    };

    std::vector<std::vector<i64>> found;
    ModMat full(r, std::vector<i64>(r, 0));
    for (int i = 0; i < r; ++i) full[i][i] = 1;
    std::deque<ModMat> work{full};
    while (!work.empty()) {
        ModMat basis = std::move(work.front());
        work.pop_front();
        auto piv = rref(basis, p);
        std::size_t d = basis.size();
        if (d == 1) {
            found.push_back(basis[0]);
            continue;
        }
        bool split = false;
        for (int i = 1; i < r && !split; ++i) {
            // restricted matrix in the reduced basis: column t holds the coordinates of A_i b_t
            ModMat b(d, std::vector<i64>(d, 0));
            for (std::size_t t = 0; t < d; ++t) {
                auto u = apply(i, basis[t]);
                for (std::size_t s = 0; s < d; ++s) b[s][t] = u[piv[s]];
            }
            std::vector<ModMat> pieces;
            std::size_t total = 0;
            for (i64 lam = 0; lam < p && total < d; ++lam) {
                ModMat shifted = b;
                for (std::size_t s = 0; s < d; ++s) shifted[s][s] = md(shifted[s][s] - lam, p);
                if (rank_mod(shifted, p) == d) continue;
                ModMat ns = nullspace(shifted, p, d);
                ModMat vecs;
                for (const auto& c : ns) {
                    std::vector<i64> v(r, 0);
                    for (std::size_t t = 0; t < d; ++t)
                        for (int j = 0; j < r; ++j) v[j] = (v[j] + c[t] * basis[t][j]) % p;
                    vecs.push_back(std::move(v));
                }
                total += vecs.size();
                pieces.push_back(std::move(vecs));
            }
            if (total != d) throw CheckFailed("dixon: class matrix not diagonalizable modulo p");
            if (pieces.size() > 1) {
                split = true;
                for (auto& pc : pieces) work.push_back(std::move(pc));
            }
        }
        if (!split) throw CheckFailed("dixon: common eigenspace does not split");
    }
    if (static_cast<int>(found.size()) != r) throw CheckFailed("dixon: wrong number of characters");

    std::vector<ClassFunction> out;
    const i64 sq = static_cast<i64>(std::sqrt(static_cast<double>(ca.order))) + 1;
    for (auto v : found) {
        i64 n0 = invmod(v[0], p);
        for (auto& x : v) x = x * n0 % p;
        i64 s = 0;
        for (int j = 0; j < r; ++j)
            s = (s + v[j] * v[ca.inverse[j]] % p * invmod(static_cast<i64>(ca.class_size[j] % p), p)) % p;
        i64 d2 = static_cast<i64>(ca.order % p) * invmod(s, p) % p;
        i64 deg = 0;
        for (i64 d = 1; d <= sq; ++d)
            if (d * d % p == d2) {
                deg = d;
                break;
            }
        if (deg == 0) throw CheckFailed("dixon: no degree found");
        std::vector<i64> chi(r);
        for (int j = 0; j < r; ++j) chi[j] = v[j] * deg % p * invmod(static_cast<i64>(ca.class_size[j] % p), p) % p;
        ClassFunction f(r);
        for (int j = 0; j < r; ++j) {
            int o = ca.elem_order[j];
            i64 zo = powmod(ze, exponent / o, p);
            i64 oinv = invmod(o, p);
            std::vector<Rational> mult(o);
            i64 check = 0;
            for (int k = 0; k < o; ++k) {
                i64 acc = 0;
                for (int l = 0; l < o; ++l)
                    acc = (acc + chi[ca.power[j][l]] * powmod(zo, md(-static_cast<i64>(k) * l, o), p)) % p;
                acc = acc * oinv % p;
                if (acc > deg) throw CheckFailed("dixon: eigenvalue multiplicity out of range");
                mult[k] = Rational(static_cast<long>(acc));
                check += acc;
            }
            if (check != deg) throw CheckFailed("dixon: multiplicities do not sum to the degree");
            f[j] = Cyclo::from_exponents(o, mult);
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const ClassFunction& a, const ClassFunction& b) {
        Rational da = a[0].to_rational(), db = b[0].to_rational();
        if (da != db) return da < db;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a[j] == b[j])) return a[j].str() < b[j].str();
        return false;
    });
    return out;
}

PermGroup PermGroup::generate(const std::vector<Perm>& gens, std::size_t degree)
{
    PermGroup g;
    g.degree_ = degree;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    g.elems_.push_back(id);
    g.index_[id] = 0;
    for (std::size_t i = 0; i < g.elems_.size(); ++i)
        for (const auto& s : gens) {
            Perm q(degree);
            for (std::size_t x = 0; x < degree; ++x) q[x] = s[g.elems_[i][x]];
            if (g.index_.emplace(q, g.elems_.size()).second) g.elems_.push_back(q);
        }
    std::size_t n = g.elems_.size();
    g.inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Perm q(degree);
        for (std::size_t x = 0; x < degree; ++x) q[g.elems_[i][x]] = static_cast<std::uint16_t>(x);
        g.inv_[i] = g.index(q);
    }
    g.class_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (g.class_[i] >= 0) continue;
        int c = static_cast<int>(g.reps_.size());
        g.reps_.push_back(i);
        std::size_t cnt = 0;
        for (std::size_t h = 0; h < n; ++h) {
            std::size_t conj = g.multiply(g.multiply(h, i), g.inv_[h]);
            if (g.class_[conj] < 0) {
                g.class_[conj] = c;
                ++cnt;
            }
        }
        g.sizes_.push_back(cnt);
    }
    return g;
}

std::size_t PermGroup::index(const Perm& p) const
{
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("PermGroup: element not in group");
    return it->second;
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const
{
    Perm q(degree_);
    for (std::size_t x = 0; x < degree_; ++x) q[x] = elems_[a][elems_[b][x]];
    return index(q);
}

int PermGroup::order(std::size_t a) const
{
    int o = 1;
    std::size_t x = a;
    while (x != 0) {
        x = multiply(x, a);
        ++o;
    }
    return o;
}

std::size_t PermGroup::power(std::size_t a, long k) const
{
    int o = order(a);
    k = ((k % o) + o) % o;
    std::size_t x = 0;
    for (long i = 0; i < k; ++i) x = multiply(x, a);
    return x;
}

ClassAlgebra PermGroup::class_algebra() const
{
    ClassAlgebra ca;
    ca.order = size();
    int r = num_classes();
    for (int c = 0; c < r; ++c) {
        ca.class_size.push_back(sizes_[c]);
        int o = order(reps_[c]);
        ca.elem_order.push_back(o);
        ca.inverse.push_back(class_[inv_[reps_[c]]]);
        std::vector<int> pw;
        for (int e = 0; e < o; ++e) pw.push_back(class_[power(reps_[c], e)]);
        ca.power.push_back(std::move(pw));
    }
    ca.structure = structure_constants(
        size(), r, reps_, [&](std::size_t a, std::size_t b) { return multiply(a, b); },
        [&](std::size_t a) { return inv_[a]; }, [&](std::size_t a) { return class_[a]; });
    return ca;
}

} // namespace coxfs
