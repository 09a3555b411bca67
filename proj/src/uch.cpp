#include "coxfs/uch.hpp"

#include "coxfs/combinat.hpp"
#include "coxfs/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>

namespace coxfs {

int UchSet::index(const std::string& label) const
{
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].label == label) return static_cast<int>(i);
    throw InvalidInput("no unipotent character labelled " + label + " in " + type.name());
}

namespace {

CycloPoly linear(const Cyclo& root) { return CycloPoly(std::vector<Cyclo>{-root, Cyclo(1)}); }

CycloPoly x_pow(int e) { return CycloPoly::monomial(Cyclo(1), e); }

int add_family(UchSet& u, std::vector<int> members, int special, std::string gamma, int rank, bool exceptional)
{
    int f = static_cast<int>(u.families.size());
    for (int m : members) u.members[m].family = f;
    u.members[special].special = true;
    u.families.push_back({std::move(members), special, std::move(gamma), rank, exceptional, 0});
    u.families.back().full_size = static_cast<int>(u.families.back().members.size());
    return f;
}

int push(UchSet& u, UnipotentChar c)
{
    u.members.push_back(std::move(c));
    return static_cast<int>(u.members.size()) - 1;
}

UnipotentChar irr_member(const CharacterTable& t, const std::string& label, std::string param = "")
{
    UnipotentChar c;
    c.label = label;
    c.param = std::move(param);
    c.irr = t.index(label);
    c.fake_degree = t.fake_degrees[c.irr];
    return c;
}

} // namespace

UchSet build_uch_i2(int m, const CharacterTable& t)
{
    if (m < 3) throw InvalidInput("Uch(I2(m)) needs m >= 3");
    if (t.type != CoxeterType::I2(m)) throw InvalidInput("character table does not belong to I2(" + std::to_string(m) + ")");
    UchSet u;
    u.type = t.type;
    auto xi_pow = [&](long e) { return Cyclo::zeta(m, ((e % m) + m) % m); };
    const CycloPoly xm1 = x_pow(m) - CycloPoly(Cyclo(1));       // prod_{k in [m]} (x - xi^k)
    const CycloPoly x2m1 = x_pow(2) - CycloPoly(Cyclo(1));      // (x - 1)(x + 1)
    const std::string ms = std::to_string(m);

    auto deg_ij = [&](int i, int j) {
        Cyclo c = (xi_pow(i) + xi_pow(-i) - xi_pow(j) - xi_pow(-j)) / Cyclo(m);
        CycloPoly den = linear(xi_pow(i)) * linear(xi_pow(-i)) * linear(xi_pow(j)) * linear(xi_pow(-j));
        CycloPoly q;
        try {
            q = exact_div(x2m1 * xm1, den);
        } catch (const std::domain_error&) {
            throw CheckFailed("Deg(Phi(" + std::to_string(i) + "," + std::to_string(j) + ")) is not a polynomial");
        }
        return x_pow(1) * q * c;
    };

    UnipotentChar one = irr_member(t, "phi1,0");
    one.degree = CycloPoly(Cyclo(1));
    UnipotentChar sgn = irr_member(t, "phi1," + ms);
    sgn.degree = x_pow(m);
    int i_one = push(u, one), i_sgn = push(u, sgn);
    add_family(u, {i_one}, i_one, "1", 0, false);
    add_family(u, {i_sgn}, i_sgn, "1", 0, false);

    std::vector<int> big;
    for (int j = 1; 2 * j < m; ++j) {
        UnipotentChar c = irr_member(t, "phi2," + std::to_string(j), "(0," + std::to_string(j) + ")");
        c.degree = deg_ij(0, j);
        big.push_back(push(u, c));
    }
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; i + j < m; ++j) {
            UnipotentChar c;
            c.param = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            c.label = "Phi" + c.param;
            c.degree = deg_ij(i, j);
            c.eig = xi_pow(-static_cast<long>(i) * j);
            big.push_back(push(u, c));
        }
    if (m % 2 == 0) {
        CycloPoly d = x_pow(1) * Cyclo(Rational(2, m));
        for (int k = 1; 2 * k < m; ++k) d = d * linear(xi_pow(k)) * linear(xi_pow(-k));
        std::string h = std::to_string(m / 2);
        for (const char* prime : {"'", "''"}) {
            UnipotentChar c = irr_member(t, std::string("phi") + prime + "1," + h, "(0," + h + ")" + prime);
            c.degree = d;
            big.push_back(push(u, c));
        }
    }
    add_family(u, big, big.front(), "dihedral(" + ms + ")", 0, false);
    return u;
}

UchSet build_uch_h3(const CharacterTable& t)
{
    if (t.type != CoxeterType::H3()) throw InvalidInput("character table does not belong to H3");
    UchSet u;
    u.type = t.type;
    for (const char* l : {"phi1,0", "phi1,15", "phi5,2", "phi5,5"}) {
        int i = push(u, irr_member(t, l));
        add_family(u, {i}, i, "1", 0, false);
    }
    const Cyclo z5_2 = Cyclo::zeta(5, 2), z5_3 = Cyclo::zeta(5, 3);
    for (auto [a, b] : {std::pair{"phi3,1", "phi3,3"}, std::pair{"phi3,6", "phi3,8"}}) {
        int p = push(u, irr_member(t, a, "(0,1)"));
        int q = push(u, irr_member(t, b, "(0,2)"));
        UnipotentChar f12, f13;
        f12.param = "(1,2)";
        f12.label = std::string("Phi(1,2)/") + a;
        f12.eig = z5_3;
        f13.param = "(1,3)";
        f13.label = std::string("Phi(1,3)/") + a;
        f13.eig = z5_2;
        int r = push(u, f12), s = push(u, f13);
        add_family(u, {p, q, r, s}, p, "dihedral(5)", 0, false);
    }
    int p = push(u, irr_member(t, "phi4,3", "(1,1)"));
    int q = push(u, irr_member(t, "phi4,4", "(1,sgn)"));
    UnipotentChar s1, ss;
    s1.param = "(s,1)";
    s1.label = "Phi(s,1)";
    s1.eig = Cyclo::zeta(4, 1);
    ss.param = "(s,sgn)";
    ss.label = "Phi(s,sgn)";
    ss.eig = Cyclo::zeta(4, 3);
    int r = push(u, s1), s = push(u, ss);
    add_family(u, {p, q, r, s}, p, "S2", 1, true);
    return u;
}

UchSet classical_families(const CharacterTable& t)
{
    if (!t.type.classical()) throw InvalidInput("symbol families exist only for classical types");
    UchSet u;
    u.type = t.type;
    const int n = t.type.n;
    std::map<std::vector<int>, std::vector<int>> groups;
    std::map<std::vector<int>, int> ranks;
    std::vector<std::vector<int>> order;
    for (std::size_t i = 0; i < t.size(); ++i) {
        UnipotentChar c;
        c.label = t.labels[i];
        c.irr = static_cast<int>(i);
        c.fake_degree = t.fake_degrees[i];
        int idx = push(u, c);
        std::vector<int> key;
        int rank = 0;
        switch (t.type.family) {
        case Family::A: key = {idx}; break;
        case Family::BC: {
            Symbol s = symbol_bc(t.alpha[i], t.beta[i], n);
            key = symbol_entries(s);
            rank = family_gamma_rank(SymbolKind::BC, symbol_singles(s));
            break;
        }
        default:
            if (t.split[i]) {
                key = {-1 - idx};
            } else {
                Symbol s = symbol_d(t.alpha[i], t.beta[i], n);
                key = symbol_entries(s);
                rank = family_gamma_rank(SymbolKind::D, symbol_singles(s));
            }
        }
        if (!groups.count(key)) order.push_back(key);
        groups[key].push_back(idx);
        ranks[key] = rank;
    }
    for (const auto& key : order) {
        const auto& members = groups[key];
        int special = -1;
        for (int m : members) {
            int i = u.members[m].irr;
            bool sp = t.type.family == Family::A ||
                      (t.type.family == Family::BC ? special_bc(t.alpha[i], t.beta[i])
                                                   : (t.split[i] != 0 || special_d(t.alpha[i], t.beta[i])));
            if (!sp) continue;
            if (special >= 0) throw CheckFailed("family of " + u.members[m].label + " has two special members");
            special = m;
        }
        if (special < 0) throw CheckFailed("family of " + u.members[members.front()].label + " has no special member");
        int k = ranks[key];
        int f = add_family(u, members, special, k ? "Z2^" + std::to_string(k) : "1", k, false);
        u.families[f].full_size = 1 << (2 * k);
    }
    return u;
}

UchSet build_uch(const CharacterTable& t)
{
    switch (t.type.family) {
    case Family::I2: return build_uch_i2(t.type.n, t);
    case Family::H3: return build_uch_h3(t);
    case Family::H4: throw InvalidInput("Uch(H4) is not built in; supply the large family as a data file");
    default: return classical_families(t);
    }
}

std::vector<int> delta_involution(const UchSet& u)
{
    std::vector<int> d(u.size());
    std::iota(d.begin(), d.end(), 0);
    for (std::size_t a = 0; a < u.size(); ++a) {
        const auto& x = u.members[a];
        const auto& fam = u.families[x.family];
        int i = 0, j = 0;
        if (fam.gamma.rfind("dihedral(", 0) == 0 && std::sscanf(x.param.c_str(), "(%d,%d)", &i, &j) == 2 && i > 0 &&
            x.param.back() != '\'') {
            int m = std::stoi(fam.gamma.substr(9));
            std::string target = "(" + std::to_string(i) + "," + std::to_string(m - j) + ")";
            for (int b : fam.members)
                if (u.members[b].param == target) d[a] = b;
            if (u.members[d[a]].param != target) throw CheckFailed("no member " + target + " for " + x.label);
            continue;
        }
        if ((x.eig * x.eig).is_one()) continue;
        int found = -1;
        for (int b : u.families[x.family].members) {
            const auto& y = u.members[b];
            if (!(x.eig * y.eig).is_one()) continue;
            if (x.degree && y.degree && *x.degree != *y.degree) continue;
            if (found >= 0) throw CheckFailed("complex conjugate of " + x.label + " is ambiguous");
            found = b;
        }
        if (found < 0) throw CheckFailed("no complex conjugate for " + x.label);
        d[a] = found;
    }
    return d;
}

std::vector<Rational> n_phi(const CoxeterGroup& g, const UchSet& u, const CharacterTable& t)
{
    std::vector<long> refl(g.num_classes(), 0);
    for (ElementId r : g.reflections()) ++refl[g.class_of(r)];
    std::vector<Rational> out;
    for (const auto& x : u.members) {
        if (x.irr < 0) {
            out.push_back(Rational(0));
            continue;
        }
        Cyclo s(0);
        for (int c = 0; c < g.num_classes(); ++c)
            if (refl[c]) s += Cyclo(refl[c]) * t.chars[x.irr][c];
        if (!s.is_rational()) throw CheckFailed("N_Phi is not rational for " + x.label);
        out.push_back(s.to_rational() / Rational(t.degree(x.irr)));
    }
    return out;
}

bool is_palindromic(const RatPoly& p)
{
    if (p.is_zero()) return true;
    return reverse(p, p.degree() + p.valuation()) == p;
}

std::vector<int> j_involution(const CoxeterGroup& g, const UchSet& u, const CharacterTable& t)
{
    const int N = g.num_reflections();
    auto np = n_phi(g, u, t);
    std::vector<int> j(u.size());
    std::iota(j.begin(), j.end(), 0);
    for (std::size_t a = 0; a < u.size(); ++a) {
        const auto& x = u.members[a];
        if (x.irr < 0) continue;
        if (!np[a].is_integer()) throw CheckFailed("N_Phi is not an integer for " + x.label);
        RatPoly target = reverse(x.fake_degree, N - static_cast<int>(np[a].to_long()));
        if (target == x.fake_degree) continue;
        int found = -1;
        for (int b : u.families[x.family].members)
            if (u.members[b].irr >= 0 && u.members[b].fake_degree == target) found = b;
        if (found < 0) throw CheckFailed("no member of the family of " + x.label + " has the reflected fake degree");
        j[a] = found;
    }
    return j;
}

// ---------------------------------------------------------------- M(Gamma)

Cyclo MGamma::value(int e, std::size_t h) const
{
    const auto& c = centralizers[elems[e].centralizer];
    return elems[e].sigma[c.class_of(c.index(gamma.element(h)))];
}

namespace {

MGamma build_mgamma(std::string name, PermGroup gamma, const std::function<std::string(const Perm&)>& xlabel)
{
    MGamma out;
    out.name = std::move(name);
    out.gamma = std::move(gamma);
    const auto& G = out.gamma;
    for (int c = 0; c < G.num_classes(); ++c) {
        std::size_t x = G.class_rep(c);
        std::vector<Perm> gens;
        for (std::size_t h = 0; h < G.size(); ++h)
            if (G.multiply(h, x) == G.multiply(x, h)) gens.push_back(G.element(h));
        out.centralizers.push_back(PermGroup::generate(gens, G.degree()));
        const PermGroup& C = out.centralizers.back();
        auto chars = dixon_characters(C.class_algebra());
        auto trivial = std::find_if(chars.begin(), chars.end(), [](const ClassFunction& f) {
            return std::all_of(f.begin(), f.end(), [](const Cyclo& v) { return v.is_one(); });
        });
        std::rotate(chars.begin(), trivial, trivial + 1);
        int xc = C.class_of(C.index(G.element(x)));
        for (std::size_t s = 0; s < chars.size(); ++s) {
            MGamma::Element e;
            e.x = x;
            e.centralizer = c;
            e.sigma = chars[s];
            e.label = "(" + xlabel(G.element(x)) + "," + (s == 0 ? std::string("1") : "chi" + std::to_string(s)) + ")";
            e.t = chars[s][xc] / chars[s][0];
            out.elems.push_back(std::move(e));
        }
    }
    return out;
}

std::string cycle_label(const Perm& p)
{
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len > 1) lens.push_back(len);
    }
    if (lens.empty()) return "1";
    std::sort(lens.rbegin(), lens.rend());
    std::string s;
    for (int l : lens) s += (s.empty() ? "" : ".") + std::to_string(l);
    return s;
}

} // namespace

MGamma mgamma_z2(int k)
{
    if (k < 0 || k > 4) throw InvalidInput("M((Z/2)^k) is supported for k <= 4");
    int deg = std::max(1, 2 * k);
    std::vector<Perm> gens;
    for (int i = 0; i < k; ++i) {
        Perm p(deg);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[2 * i], p[2 * i + 1]);
        gens.push_back(p);
    }
    auto label = [k](const Perm& p) {
        if (k == 0) return std::string("1");
        std::string s;
        for (int i = 0; i < k; ++i) s += p[2 * i] != 2 * i ? '1' : '0';
        return s;
    };
    return build_mgamma(k ? "Z2^" + std::to_string(k) : "1", PermGroup::generate(gens, deg), label);
}

MGamma mgamma_sym(int n)
{
    if (n < 1 || n > 5) throw InvalidInput("M(S_n) is supported for 1 <= n <= 5");
    std::vector<Perm> gens;
    if (n >= 2) {
        Perm t(n), c(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        for (int i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
        gens = {t, c};
    }
    return build_mgamma("S" + std::to_string(n), PermGroup::generate(gens, n), cycle_label);
}

} // namespace coxfs
