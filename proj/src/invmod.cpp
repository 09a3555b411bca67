#include "coxfs/invmod.hpp"

#include "coxfs/combinat.hpp"
#include "coxfs/errors.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace coxfs {

InvolutionModule::InvolutionModule(const CoxeterGroup& g, const Rational& k) : g_(&g), k_(k)
{
    basis_ = g.involutions();
    pos_.assign(g.size(), -1);
    for (std::size_t i = 0; i < basis_.size(); ++i) pos_[basis_[i]] = static_cast<int>(i);
    const int r = g.rank();
    act_.resize(static_cast<std::size_t>(r) * basis_.size());
    for (int s = 0; s < r; ++s)
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            ElementId w = basis_[b];
            ElementId sw = g.lmul(s, w), ws = g.rmul(w, s);
            auto& out = act_[static_cast<std::size_t>(s) * basis_.size() + b];
            if (sw == ws) {
                if (g.length(ws) < g.length(w)) {
                    out.push_back({static_cast<int>(b), Rational(-1)});
                } else {
                    out.push_back({static_cast<int>(b), Rational(1)});
                    if (!k.is_zero()) out.push_back({pos_[sw], k});
                }
            } else {
                out.push_back({pos_[g.rmul(sw, s)], Rational(1)});
            }
        }
}

int InvolutionModule::index_of(ElementId w) const { return w < pos_.size() ? pos_[w] : -1; }

SparseVec InvolutionModule::apply(int s, const SparseVec& v) const
{
    SparseVec out;
    for (const auto& [b, c] : v)
        for (const auto& t : action(s, b)) {
            auto& slot = out[t.index];
            slot += c * t.coeff;
            if (slot.is_zero()) out.erase(t.index);
        }
    return out;
}

SparseVec InvolutionModule::apply_word(const std::vector<int>& word, SparseVec v) const
{
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
    return v;
}

RelationReport verify_representation(const InvolutionModule& m)
{
    const CoxeterGroup& g = m.group();
    const int r = g.rank();
    for (std::size_t b = 0; b < m.dim(); ++b) {
        SparseVec e{{static_cast<int>(b), Rational(1)}};
        for (int s = 0; s < r; ++s)
            if (m.apply(s, m.apply(s, e)) != e)
                return {false, "rho(" + g.generator_name(s) + ")^2 != 1 on a_" + g.word_string(m.basis()[b])};
        for (int s = 0; s < r; ++s)
            for (int t = s + 1; t < r; ++t) {
                SparseVec v = e;
                for (int i = 0; i < g.coxeter_m(s, t); ++i) v = m.apply(s, m.apply(t, v));
                if (v != e)
                    return {false, "(rho(" + g.generator_name(s) + ")rho(" + g.generator_name(t) + "))^" +
                                       std::to_string(g.coxeter_m(s, t)) + " != 1 on a_" + g.word_string(m.basis()[b])};
            }
    }
    return {};
}

ClassFunction module_character(const InvolutionModule& m)
{
    const CoxeterGroup& g = m.group();
    ClassFunction f;
    for (int c = 0; c < g.num_classes(); ++c) {
        const auto& word = g.word(g.class_rep(c));
        Rational tr(0);
        for (std::size_t b = 0; b < m.dim(); ++b) {
            SparseVec v = m.apply_word(word, {{static_cast<int>(b), Rational(1)}});
            if (auto it = v.find(static_cast<int>(b)); it != v.end()) tr += it->second;
        }
        f.push_back(Cyclo(tr));
    }
    return f;
}

ClassFunction class_character(const CoxeterGroup& g, ElementId sigma)
{
    if (!g.is_involution(sigma)) throw InvalidInput("class_character: element is not an involution");
    InvolutionModule m(g, Rational(0));
    int target = g.class_of(sigma);
    ClassFunction f;
    for (int c = 0; c < g.num_classes(); ++c) {
        const auto& word = g.word(g.class_rep(c));
        long tr = 0;
        for (std::size_t b = 0; b < m.dim(); ++b) {
            if (g.class_of(m.basis()[b]) != target) continue;
            SparseVec v = m.apply_word(word, {{static_cast<int>(b), Rational(1)}});
            if (auto it = v.find(static_cast<int>(b)); it != v.end()) tr += it->second.to_long();
        }
        f.push_back(Cyclo(tr));
    }
    return f;
}

// ---------------------------------------------------------------- named involutions

namespace {

ElementId from_signed(const CoxeterGroup& g, const std::vector<int>& image)
{
    // image[i] = +-(j+1): e_i maps to sign * e_j
    const int n = static_cast<int>(image.size());
    Perm p(2 * n);
    for (int i = 0; i < n; ++i) {
        int j = std::abs(image[i]) - 1;
        bool neg = image[i] < 0;
        p[i] = static_cast<std::uint16_t>(neg ? n + j : j);
        p[n + i] = static_cast<std::uint16_t>(neg ? j : n + j);
    }
    auto id = g.from_points(p);
    if (!id) throw InvalidInput("signed permutation is not in " + g.type().name());
    return *id;
}

std::vector<int> sigma_image(int n, int k, int l, int m)
{
    if (k < 0 || l < 0 || m < 0 || 2 * m + k + l != n) throw InvalidInput("sigma_{k,l,m} needs 2m+k+l = n");
    std::vector<int> img(n);
    for (int i = 0; i < m; ++i) {
        img[i] = i + m + 1;
        img[i + m] = i + 1;
    }
    for (int i = 2 * m; i < 2 * m + k; ++i) img[i] = i + 1;
    for (int i = 2 * m + k; i < n; ++i) img[i] = -(i + 1);
    return img;
}

} // namespace

ElementId sigma_m(const CoxeterGroup& g, int m)
{
    if (g.type().family != Family::A) throw InvalidInput("sigma_m is defined in type A");
    int pts = g.type().n + 1;
    if (m < 0 || 2 * m > pts) throw InvalidInput("sigma_m needs 2m <= n+1");
    Perm p(pts);
    for (int i = 0; i < pts; ++i) p[i] = static_cast<std::uint16_t>(i);
    for (int i = 0; i < m; ++i) {
        p[i] = static_cast<std::uint16_t>(i + m);
        p[i + m] = static_cast<std::uint16_t>(i);
    }
    return *g.from_points(p);
}

ElementId sigma_klm(const CoxeterGroup& g, int k, int l, int m)
{
    if (g.type().family != Family::BC && g.type().family != Family::D)
        throw InvalidInput("sigma_{k,l,m} is defined in types BC and D");
    if (g.type().family == Family::D && l % 2) throw InvalidInput("sigma_{k,l,m} in type D needs l even");
    return from_signed(g, sigma_image(g.type().n, k, l, m));
}

ElementId sigma_prime(const CoxeterGroup& g)
{
    int n = g.type().n;
    if (g.type().family != Family::D || n % 2) throw InvalidInput("sigma' is defined in type D_n with n even");
    auto img = sigma_image(n, 0, 0, n / 2);
    // conjugate by t_n: the pair n/2 <-> n picks up two signs
    img[n / 2 - 1] = -n;
    img[n - 1] = -(n / 2);
    return from_signed(g, img);
}

std::vector<std::pair<std::string, ElementId>> named_involutions(const CoxeterGroup& g)
{
    std::vector<std::pair<std::string, ElementId>> out;
    const int n = g.type().n;
    auto klm = [](int k, int l, int m) {
        return "sigma_{" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + "}";
    };
    switch (g.type().family) {
    case Family::A:
        for (int m = 0; 2 * m <= n + 1; ++m) out.push_back({"sigma_" + std::to_string(m), sigma_m(g, m)});
        break;
    case Family::BC:
        for (int m = 0; 2 * m <= n; ++m)
            for (int k = n - 2 * m; k >= 0; --k) out.push_back({klm(k, n - 2 * m - k, m), sigma_klm(g, k, n - 2 * m - k, m)});
        break;
    case Family::D:
        for (int m = 0; 2 * m <= n; ++m)
            for (int k = n - 2 * m; k >= 0; --k) {
                int l = n - 2 * m - k;
                if (l % 2) continue;
                out.push_back({klm(k, l, m), sigma_klm(g, k, l, m)});
            }
        if (n % 2 == 0) out.push_back({"sigma'", sigma_prime(g)});
        break;
    case Family::I2:
        out.push_back({"1", g.identity()});
        out.push_back({"r", g.from_word_string("r")});
        if (n % 2 == 0) {
            out.push_back({"s", g.from_word_string("s")});
            out.push_back({"w0", g.longest()});
        }
        break;
    case Family::H3:
        for (const char* w : {"1", "a", "ac", "(abc)^5"}) out.push_back({w, g.from_word_string(w)});
        break;
    case Family::H4:
        for (const char* w : {"1", "a", "ac", "(abc)^5", "(abcd)^15"}) out.push_back({w, g.from_word_string(w)});
        break;
    }
    return out;
}

// ---------------------------------------------------------------- structure checks

bool check_block_triangular(const InvolutionModule& m, const InvolutionModule& m0)
{
    const CoxeterGroup& g = m.group();
    if (m.dim() != m0.dim()) return false;
    std::vector<int> level(m.dim());
    for (std::size_t b = 0; b < m.dim(); ++b) level[b] = g.neg_eigen_dim(m.basis()[b]);
    for (int s = 0; s < g.rank(); ++s)
        for (std::size_t b = 0; b < m.dim(); ++b) {
            SparseVec diag, diag0;
            for (const auto& t : m.action(s, static_cast<int>(b))) {
                if (level[t.index] < level[b]) return false;
                if (level[t.index] == level[b]) diag[t.index] += t.coeff;
            }
            for (const auto& t : m0.action(s, static_cast<int>(b)))
                if (level[t.index] == level[b]) diag0[t.index] += t.coeff;
            if (diag != diag0) return false;
        }
    return true;
}

namespace {

using QVec = std::map<int, RatPoly>;

struct HeckeAction {
    const CoxeterGroup& g;
    std::vector<ElementId> basis;
    std::vector<int> pos;

    explicit HeckeAction(const CoxeterGroup& grp) : g(grp), basis(grp.involutions()), pos(grp.size(), -1)
    {
        for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
    }

    static RatPoly q(std::vector<long> c)
    {
        std::vector<Rational> r;
        for (long x : c) r.push_back(Rational(x));
        return RatPoly(std::move(r));
    }

    std::vector<std::pair<int, RatPoly>> column(int s, int b) const
    {
        ElementId w = basis[b];
        ElementId sw = g.lmul(s, w), ws = g.rmul(w, s);
        bool descent = g.length(ws) < g.length(w);
        if (sw == ws) {
            if (!descent) return {{b, q({0, 1})}, {pos[sw], q({1, 1})}};
            return {{b, q({-1, -1, 1})}, {pos[sw], q({0, -1, 1})}};
        }
        int sws = pos[g.rmul(sw, s)];
        if (!descent) return {{sws, q({1})}};
        return {{b, q({-1, 0, 1})}, {sws, q({0, 0, 1})}};
    }

    QVec apply(int s, const QVec& v) const
    {
        QVec out;
        for (const auto& [b, c] : v)
            for (const auto& [i, p] : column(s, b)) {
                auto& slot = out[i];
                slot += c * p;
                if (slot.is_zero()) out.erase(i);
            }
        return out;
    }
};

} // namespace

RelationReport hecke_relations_check(const CoxeterGroup& g)
{
    HeckeAction h(g);
    RatPoly q2 = HeckeAction::q({0, 0, 1});
    for (std::size_t b = 0; b < h.basis.size(); ++b) {
        QVec e{{static_cast<int>(b), RatPoly(Rational(1))}};
        for (int s = 0; s < g.rank(); ++s) {
            // T^2 + (1 - q^2) T - q^2 = 0
            QVec t1 = h.apply(s, e), t2 = h.apply(s, t1);
            QVec sum = t2;
            for (const auto& [i, p] : t1) sum[i] += p * (RatPoly(Rational(1)) - q2);
            sum[static_cast<int>(b)] -= q2;
            bool zero = true;
            for (const auto& [i, p] : sum) zero = zero && p.is_zero();
            if (!zero)
                return {false, "(T_" + g.generator_name(s) + "+1)(T_" + g.generator_name(s) + "-q^2) != 0 on a_" +
                                   g.word_string(h.basis[b])};
        }
        for (int s = 0; s < g.rank(); ++s)
            for (int t = s + 1; t < g.rank(); ++t) {
                QVec x = e, y = e;
                for (int i = 0; i < g.coxeter_m(s, t); ++i) {
                    x = h.apply(i % 2 ? s : t, x);
                    y = h.apply(i % 2 ? t : s, y);
                }
                if (x != y)
                    return {false, "braid relation for T_" + g.generator_name(s) + ", T_" + g.generator_name(t) +
                                       " fails on a_" + g.word_string(h.basis[b])};
            }
    }
    return {};
}

bool hecke_specializes_to_k2(const CoxeterGroup& g)
{
    HeckeAction h(g);
    InvolutionModule m(g, Rational(2));
    for (int s = 0; s < g.rank(); ++s)
        for (std::size_t b = 0; b < h.basis.size(); ++b) {
            SparseVec a, c;
            for (const auto& [i, p] : h.column(s, static_cast<int>(b))) {
                Rational v = p.eval(Rational(1));
                if (!v.is_zero()) a[i] += v;
            }
            for (const auto& t : m.action(s, static_cast<int>(b))) c[t.index] += t.coeff;
            if (a != c) return false;
        }
    return true;
}

// ---------------------------------------------------------------- classical closed forms

long kottwitz_multiplicity(const CoxeterType& t, const std::string& label, const CharacterTable& table, int irr)
{
    static const std::regex re_m(R"(sigma_(\d+))"), re_klm(R"(sigma_\{(\d+),(\d+),(\d+)\})");
    std::smatch mt;
    const int n = t.n;
    switch (t.family) {
    case Family::A: {
        if (!std::regex_match(label, mt, re_m)) throw InvalidInput("type A involution label must be sigma_m");
        int m = std::stoi(mt[1]);
        return odd_columns(table.alpha[irr]) == n + 1 - 2 * m ? 1 : 0;
    }
    case Family::BC: {
        if (!std::regex_match(label, mt, re_klm)) throw InvalidInput("type BC involution label must be sigma_{k,l,m}");
        int k = std::stoi(mt[1]), l = std::stoi(mt[2]), m = std::stoi(mt[3]);
        const auto& a = table.alpha[irr];
        const auto& b = table.beta[irr];
        if (!special_bc(a, b) || size(a) != k + m || size(b) != l + m) return 0;
        return binomial(d_stat(a, b), size(intersect(a, b)) - m).get_si();
    }
    case Family::D: {
        if (label == "sigma'") return table.split[irr] == 2 ? 1 : 0;
        if (!std::regex_match(label, mt, re_klm)) throw InvalidInput("type D involution label must be sigma_{k,l,m} or sigma'");
        int k = std::stoi(mt[1]), l = std::stoi(mt[2]), m = std::stoi(mt[3]);
        if (k + l == 0) return table.split[irr] == 1 ? 1 : 0;
        if (table.split[irr] != 0) return 0;
        const auto& a = table.alpha[irr];
        const auto& b = table.beta[irr];
        const Partition* small = nullptr;
        const Partition* big = nullptr;
        if (contained(a, b)) small = &a, big = &b;
        else if (contained(b, a)) small = &b, big = &a;
        else return 0;
        if (!special_d(*small, *big) || size(*small) != m || size(*big) != k + l + m) return 0;
        return binomial(skew_components(*small, *big), f_stat(*small, *big) - l).get_si();
    }
    default: throw InvalidInput("closed-form multiplicities exist only for classical types");
    }
}

bool is_gelfand_model(const std::vector<long>& mult)
{
    return std::all_of(mult.begin(), mult.end(), [](long m) { return m == 1; });
}

} // namespace coxfs
