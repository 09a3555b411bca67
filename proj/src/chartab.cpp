#include "coxfs/chartab.hpp"

#include "coxfs/errors.hpp"
#include "coxfs/invmod.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <set>
#include <stdexcept>

namespace coxfs {

int CharacterTable::index(const std::string& label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InvalidInput("unknown character label '" + label + "' for " + type.name());
    return static_cast<int>(it - labels.begin());
}

long CharacterTable::degree(int i) const { return chars[i][0].to_rational().to_long(); }

// ---------------------------------------------------------------- symmetric groups

namespace {

Partition from_beta(std::vector<int> beta)
{
    std::sort(beta.rbegin(), beta.rend());
    int len = static_cast<int>(beta.size());
    Partition p;
    for (int i = 0; i < len; ++i) {
        int part_i = beta[i] - (len - 1 - i);
        if (part_i > 0) p.push_back(part_i);
    }
    return p;
}

long mn_rec(const Partition& lambda, const Partition& mu, std::size_t from, std::map<std::pair<Partition, std::size_t>, long>& memo)
{
    if (from == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, from);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int k = mu[from];
    int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    std::set<int> bset(beta.begin(), beta.end());
    long total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[i], nb = b - k;
        if (nb < 0 || bset.count(nb)) continue;
        int between = 0;
        for (int x : beta)
            if (x > nb && x < b) ++between;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        long v = mn_rec(from_beta(nbeta), mu, from + 1, memo);
        total += (between % 2 ? -v : v);
    }
    memo[key] = total;
    return total;
}

} // namespace

long mn_character(const Partition& lambda, const Partition& mu)
{
    if (size(lambda) != size(mu)) throw std::invalid_argument("mn_character: sizes differ");
    Partition sorted = mu;
    std::sort(sorted.rbegin(), sorted.rend());
    std::map<std::pair<Partition, std::size_t>, long> memo;
    return mn_rec(lambda, sorted, 0, memo);
}

long bc_character(const Partition& alpha, const Partition& beta, const Partition& pos, const Partition& neg)
{
    // Induced from W_|alpha| x W_|beta|: sum over ways to distribute the cycles.
    std::map<int, int> a, b;
    for (int k : pos) ++a[k];
    for (int k : neg) ++b[k];
    std::vector<std::pair<int, bool>> kinds; // (length, negative) with multiplicity
    std::vector<int> count;
    for (auto [k, c] : a) kinds.push_back({k, false}), count.push_back(c);
    for (auto [k, c] : b) kinds.push_back({k, true}), count.push_back(c);
    const int target = size(alpha);
    long total = 0;
    std::vector<int> take(kinds.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int used) {
        if (idx == kinds.size()) {
            if (used != target) return;
            Partition ta, tb;
            long coef = 1;
            int negb = 0;
            for (std::size_t t = 0; t < kinds.size(); ++t) {
                coef *= binomial(count[t], take[t]).get_si();
                for (int c = 0; c < take[t]; ++c) ta.push_back(kinds[t].first);
                for (int c = take[t]; c < count[t]; ++c) tb.push_back(kinds[t].first);
                if (kinds[t].second) negb += count[t] - take[t];
            }
            long v = coef * mn_character(alpha, ta) * mn_character(beta, tb);
            total += (negb % 2 ? -v : v);
            return;
        }
        for (int c = 0; c <= count[idx]; ++c) {
            int u = used + c * kinds[idx].first;
            if (u > target) break;
            take[idx] = c;
            rec(idx + 1, u);
        }
        take[idx] = 0;
    };
    rec(0, 0);
    return total;
}

// ---------------------------------------------------------------- generic helpers

ClassFunction trivial_character(const CoxeterGroup& g) { return ClassFunction(g.num_classes(), Cyclo(1)); }

ClassFunction sign_character(const CoxeterGroup& g)
{
    ClassFunction f(g.num_classes());
    for (int c = 0; c < g.num_classes(); ++c) f[c] = Cyclo(g.length(g.class_rep(c)) % 2 ? -1 : 1);
    return f;
}

ClassFunction regular_character(const CoxeterGroup& g)
{
    ClassFunction f(g.num_classes(), Cyclo(0));
    f[0] = Cyclo(static_cast<long>(g.size()));
    return f;
}

Cyclo inner_product(const CoxeterGroup& g, const ClassFunction& f, const ClassFunction& h)
{
    if (f.size() != static_cast<std::size_t>(g.num_classes()) || h.size() != f.size())
        throw std::invalid_argument("inner_product: class function does not belong to this group");
    Cyclo s(0);
    for (int c = 0; c < g.num_classes(); ++c)
        s += Cyclo(static_cast<long>(g.class_size(c))) * f[c] * h[c].conj();
    return s / Cyclo(static_cast<long>(g.size()));
}

std::vector<long> decompose(const CoxeterGroup& g, const ClassFunction& f, const CharacterTable& t)
{
    std::vector<long> m;
    for (const auto& chi : t.chars) {
        Cyclo ip = inner_product(g, f, chi);
        if (!ip.is_integer() || ip.to_rational().sign() < 0)
            throw CheckFailed("decompose: multiplicity " + ip.str() + " is not a nonnegative integer");
        m.push_back(ip.to_rational().to_long());
    }
    if (!(combine(t, m) == f)) throw CheckFailed("decompose: class function is not a character");
    return m;
}

ClassFunction combine(const CharacterTable& t, const std::vector<long>& mult)
{
    std::size_t r = t.chars.empty() ? 0 : t.chars[0].size();
    ClassFunction f(r, Cyclo(0));
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        if (mult[i] == 0) continue;
        for (std::size_t c = 0; c < r; ++c) f[c] += Cyclo(mult[i]) * t.chars[i][c];
    }
    return f;
}

std::vector<CycloPoly> fake_degree_kernels(const CoxeterGroup& g)
{
    CycloPoly p(Cyclo(1));
    for (int d : g.degrees()) p *= CycloPoly::monomial(Cyclo(1), 0) - CycloPoly::monomial(Cyclo(1), d);
    std::vector<CycloPoly> out;
    for (int c = 0; c < g.num_classes(); ++c) out.push_back(exact_div(p, g.det_one_minus_xw(g.class_rep(c))));
    return out;
}

RatPoly fake_degree(const CoxeterGroup& g, const ClassFunction& f, const std::vector<CycloPoly>& kernels)
{
    CycloPoly acc;
    for (int c = 0; c < g.num_classes(); ++c) {
        if (f[c].is_zero()) continue;
        acc += kernels[c] * (Cyclo(static_cast<long>(g.class_size(c))) * f[c]);
    }
    acc *= Cyclo(Rational(1)) / Cyclo(static_cast<long>(g.size()));
    std::vector<Rational> co;
    for (const auto& x : acc.coeffs()) {
        if (!x.is_integer() || x.to_rational().sign() < 0)
            throw CheckFailed("fake degree coefficient " + x.str() + " is not a nonnegative integer");
        co.push_back(x.to_rational());
    }
    return RatPoly(std::move(co));
}

bool check_orthogonality(const CoxeterGroup& g, const CharacterTable& t)
{
    const int r = g.num_classes();
    if (static_cast<int>(t.size()) != r) return false;
    Rational sq(0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        sq += pow(t.chars[i][0].to_rational(), 2);
        for (std::size_t j = i; j < t.size(); ++j) {
            Cyclo ip = inner_product(g, t.chars[i], t.chars[j]);
            if (!(ip == Cyclo(i == j ? 1 : 0))) return false;
        }
    }
    if (sq != Rational(static_cast<long>(g.size()))) return false;
    for (int a = 0; a < r; ++a)
        for (int b = a; b < r; ++b) {
            Cyclo s(0);
            for (const auto& chi : t.chars) s += chi[a] * chi[b].conj();
            Cyclo want = a == b ? Cyclo(static_cast<long>(g.centralizer_order(a))) : Cyclo(0);
            if (!(s == want)) return false;
        }
    return true;
}

std::vector<std::string> phi_labels(const std::vector<long>& degrees, const std::vector<RatPoly>& fake)
{
    std::vector<std::string> base;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        base.push_back("phi" + std::to_string(degrees[i]) + "," + std::to_string(fake[i].valuation()));
    std::vector<std::string> out = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (std::count(base.begin(), base.end(), base[i]) == 1) continue;
        const auto& p = fake[i];
        int b = p.valuation(), f = b;
        if (p.coeff(b) == Rational(1)) {
            f = b + 1;
            while (p.coeff(f).is_zero()) ++f;
        }
        out[i] += "," + std::to_string(f);
    }
    return out;
}

// ---------------------------------------------------------------- per-type tables

namespace {

void split_cycle_type(const CoxeterGroup& g, ElementId w, Partition& pos, Partition& neg)
{
    pos.clear();
    neg.clear();
    for (auto [len, negative] : g.signed_cycle_type(w)) (negative ? neg : pos).push_back(len);
}

void table_a(const CoxeterGroup& g, CharacterTable& t)
{
    for (const auto& lam : partitions(g.type().n + 1)) {
        ClassFunction f;
        for (int c = 0; c < g.num_classes(); ++c) {
            Partition mu;
            for (auto [len, neg] : g.signed_cycle_type(g.class_rep(c))) mu.push_back(len);
            f.push_back(Cyclo(mn_character(lam, mu)));
        }
        t.labels.push_back(to_string(lam));
        t.alpha.push_back(lam);
        t.beta.push_back({});
        t.chars.push_back(std::move(f));
    }
}

void table_bc(const CoxeterGroup& g, CharacterTable& t)
{
    std::vector<std::pair<Partition, Partition>> types;
    for (int c = 0; c < g.num_classes(); ++c) {
        Partition pos, neg;
        split_cycle_type(g, g.class_rep(c), pos, neg);
        types.push_back({pos, neg});
    }
    for (const auto& b : bipartitions(g.type().n)) {
        ClassFunction f;
        for (const auto& [pos, neg] : types) f.push_back(Cyclo(bc_character(b.alpha, b.beta, pos, neg)));
        t.labels.push_back(to_string(b));
        t.alpha.push_back(b.alpha);
        t.beta.push_back(b.beta);
        t.chars.push_back(std::move(f));
    }
}

void table_d(const CoxeterGroup& g, CharacterTable& t)
{
    const int n = g.type().n;
    std::vector<std::pair<Partition, Partition>> types;
    for (int c = 0; c < g.num_classes(); ++c) {
        Partition pos, neg;
        split_cycle_type(g, g.class_rep(c), pos, neg);
        types.push_back({pos, neg});
    }
    auto restrict_bc = [&](const Partition& a, const Partition& b) {
        ClassFunction f;
        for (const auto& [pos, neg] : types) f.push_back(Cyclo(bc_character(a, b, pos, neg)));
        return f;
    };
    std::vector<ClassFunction> generic;
    if (n % 2 == 0) generic = dixon_characters(class_algebra(g));
    std::set<std::pair<Partition, Partition>> seen;
    for (const auto& bp : bipartitions(n)) {
        if (bp.alpha == bp.beta) {
            ClassFunction sum = restrict_bc(bp.alpha, bp.beta);
            // the two constituents are the generic characters of half the degree summing to it
            std::vector<int> cand;
            for (std::size_t i = 0; i < generic.size(); ++i)
                if (generic[i][0] * Cyclo(2) == sum[0]) cand.push_back(static_cast<int>(i));
            bool done = false;
            for (std::size_t x = 0; x < cand.size() && !done; ++x)
                for (std::size_t y = x + 1; y < cand.size() && !done; ++y) {
                    bool ok = true;
                    for (std::size_t c = 0; c < sum.size() && ok; ++c)
                        ok = generic[cand[x]][c] + generic[cand[y]][c] == sum[c];
                    if (!ok) continue;
                    for (int s = 1; s <= 2; ++s) {
                        t.labels.push_back("{" + to_string(bp.alpha) + "}," + std::to_string(s));
                        t.alpha.push_back(bp.alpha);
                        t.beta.push_back(bp.beta);
                        t.split.push_back(s);
                        t.chars.push_back(generic[s == 1 ? cand[x] : cand[y]]);
                    }
                    done = true;
                }
            if (!done) throw CheckFailed("type D: split characters not found for " + to_string(bp.alpha));
            continue;
        }
        auto key = bp.alpha > bp.beta ? std::make_pair(bp.alpha, bp.beta) : std::make_pair(bp.beta, bp.alpha);
        if (!seen.insert(key).second) continue;
        t.labels.push_back("{" + to_string(bp.alpha) + "," + to_string(bp.beta) + "}");
        t.alpha.push_back(bp.alpha);
        t.beta.push_back(bp.beta);
        t.split.push_back(0);
        t.chars.push_back(restrict_bc(bp.alpha, bp.beta));
    }
    if (n % 2 == 0) {
        // chi^{{alpha},1} is the constituent occurring in chi_{W,sigma_{0,0,n/2}}
        ClassFunction inv = class_character(g, sigma_klm(g, 0, 0, n / 2));
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t.split[i] != 1) continue;
            Cyclo m1 = inner_product(g, inv, t.chars[i]);
            Cyclo m2 = inner_product(g, inv, t.chars[i + 1]);
            if (m1.is_zero() && !m2.is_zero()) std::swap(t.chars[i], t.chars[i + 1]);
            else if (m1.is_zero() || !m2.is_zero())
                throw CheckFailed("type D: split labels not separated by sigma_{0,0,n/2}");
        }
    }
}

void table_i2(const CoxeterGroup& g, CharacterTable& t)
{
    const int m = g.type().n;
    const int r = g.num_classes();
    std::vector<DihedralElem> reps;
    std::vector<ElementId> ids;
    for (int c = 0; c < r; ++c) {
        ids.push_back(g.class_rep(c));
        reps.push_back(std::get<DihedralElem>(g.element(g.class_rep(c))));
    }
    auto add = [&](const std::string& label, auto value) {
        ClassFunction f;
        for (int c = 0; c < r; ++c) f.push_back(value(c));
        t.labels.push_back(label);
        t.chars.push_back(std::move(f));
    };
    add("phi1,0", [](int) { return Cyclo(1); });
    add("phi1," + std::to_string(m), [&](int c) { return Cyclo(reps[c].reflection ? -1 : 1); });
    if (m % 2 == 0) {
        add("phi'1," + std::to_string(m / 2), [&](int c) { return Cyclo(g.generator_parity(ids[c], 1) ? -1 : 1); });
        add("phi''1," + std::to_string(m / 2), [&](int c) { return Cyclo(g.generator_parity(ids[c], 0) ? -1 : 1); });
    }
    for (int k = 1; 2 * k < m; ++k)
        add("phi2," + std::to_string(k), [&](int c) {
            if (reps[c].reflection) return Cyclo(0);
            long j = reps[c].rotation;
            return Cyclo::zeta(m, j * k) + Cyclo::zeta(m, -j * k);
        });
}

void table_h(const CoxeterGroup& g, CharacterTable& t, const std::vector<CycloPoly>& kernels)
{
    auto chars = dixon_characters(class_algebra(g));
    std::vector<long> deg;
    std::vector<RatPoly> fd;
    for (const auto& chi : chars) {
        deg.push_back(chi[0].to_rational().to_long());
        fd.push_back(fake_degree(g, chi, kernels));
    }
    auto labels = phi_labels(deg, fd);
    std::vector<std::size_t> order(chars.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (deg[a] != deg[b]) return deg[a] < deg[b];
        if (fd[a].valuation() != fd[b].valuation()) return fd[a].valuation() < fd[b].valuation();
        return labels[a] < labels[b];
    });
    for (std::size_t i : order) {
        t.labels.push_back(labels[i]);
        t.chars.push_back(chars[i]);
        t.fake_degrees.push_back(fd[i]);
    }
}

} // namespace

CharacterTable char_table(const CoxeterGroup& g)
{
    CharacterTable t;
    t.type = g.type();
    auto kernels = fake_degree_kernels(g);
    switch (g.type().family) {
    case Family::A: table_a(g, t); break;
    case Family::BC: table_bc(g, t); break;
    case Family::D: table_d(g, t); break;
    case Family::I2: table_i2(g, t); break;
    case Family::H3:
    case Family::H4: table_h(g, t, kernels); break;
    }
    if (t.fake_degrees.empty())
        for (const auto& chi : t.chars) t.fake_degrees.push_back(fake_degree(g, chi, kernels));
    return t;
}

} // namespace coxfs
