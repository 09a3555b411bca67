#include "coxfs/fourier.hpp"

#include "coxfs/errors.hpp"

#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace coxfs {

namespace {

std::string pair_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Cyclo sign_pow(int e) { return Cyclo(e % 2 ? -1 : 1); }

std::string entry_witness(const char* what, std::size_t a, std::size_t b, const std::vector<std::string>& labels)
{
    return std::string(what) + " at [" + labels[a] + "," + labels[b] + "]";
}

} // namespace

FourierMatrix mgamma_matrix(const MGamma& g)
{
    const auto& G = g.gamma;
    const std::size_t n = g.elems.size();
    FourierMatrix out;
    out.m = CycloMatrix(n, n);
    for (const auto& e : g.elems) out.index.push_back(e.label);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            std::size_t x = g.elems[a].x, y = g.elems[b].x;
            std::size_t xinv = G.inverse(x);
            Cyclo sum;
            for (std::size_t h = 0; h < G.size(); ++h) {
                std::size_t hinv = G.inverse(h);
                std::size_t z = G.multiply(G.multiply(h, y), hinv);
                if (G.multiply(x, z) != G.multiply(z, x)) continue;
                std::size_t w = G.multiply(G.multiply(hinv, xinv), h);
                sum += g.value(static_cast<int>(a), z) * g.value(static_cast<int>(b), w);
            }
            std::size_t cx = g.centralizers[g.elems[a].centralizer].size();
            std::size_t cy = g.centralizers[g.elems[b].centralizer].size();
            sum /= Cyclo(static_cast<long>(cx * cy));
            out.m(a, b) = sum;
            out.m(b, a) = sum;
        }
    return out;
}

FourierMatrix dihedral_matrix(int m)
{
    if (m < 3) throw InvalidInput("D_m needs m >= 3");
    std::vector<std::pair<int, int>> xs;
    for (int j = 1; 2 * j < m; ++j) xs.emplace_back(0, j);
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; i + j < m; ++j) xs.emplace_back(i, j);
    const std::size_t np = xs.size();
    const bool even = m % 2 == 0;
    const std::size_t n = np + (even ? 2 : 0);

    FourierMatrix out;
    out.m = CycloMatrix(n, n);
    for (auto [i, j] : xs) out.index.push_back(pair_label(i, j));
    auto xi = [m](long e) { return Cyclo::zeta(m, ((e % m) + m) % m); };
    const Cyclo inv_m(Rational(1, m));
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < np; ++b) {
            auto [i, j] = xs[a];
            auto [k, l] = xs[b];
            long u = static_cast<long>(j) * k - static_cast<long>(i) * l;
            long v = static_cast<long>(j) * l - static_cast<long>(i) * k;
            out.m(a, b) = (xi(u) + xi(-u) - xi(v) - xi(-v)) * inv_m;
        }
    if (even) {
        std::string h = pair_label(0, m / 2);
        out.index.push_back(h + "'");
        out.index.push_back(h + "''");
        for (std::size_t a = 0; a < np; ++a) {
            auto [i, j] = xs[a];
            Cyclo v = (sign_pow(i) - sign_pow(j)) * inv_m;
            for (std::size_t p = np; p < n; ++p) out.m(a, p) = out.m(p, a) = v;
        }
        Cyclo base = (Cyclo(1) - sign_pow(m / 2)) * Cyclo(Rational(1, 2 * m));
        Cyclo half(Rational(1, 2));
        out.m(np, np) = out.m(np + 1, np + 1) = base + half;
        out.m(np, np + 1) = out.m(np + 1, np) = base - half;
    }
    return out;
}

FusionReport verify_fusion_datum(const FusionDatum& fd)
{
    FusionReport r;
    const std::size_t n = fd.labels.size();
    const auto& M = fd.m;
    if (M.rows() != n || M.cols() != n || fd.delta.size() != n || fd.f.size() != n || fd.x0 < 0 ||
        static_cast<std::size_t>(fd.x0) >= n)
        throw InvalidInput("fusion datum has inconsistent sizes");
    auto note = [&](const std::string& s) {
        if (r.witness.empty()) r.witness = s;
    };
    const std::size_t x0 = static_cast<std::size_t>(fd.x0);

    r.commutability = true;
    for (std::size_t a = 0; a < n && r.commutability; ++a) {
        int da = fd.delta[a];
        if (da < 0 || static_cast<std::size_t>(da) >= n || fd.delta[da] != static_cast<int>(a)) {
            r.commutability = false;
            note("Delta is not an involution at " + fd.labels[a]);
            break;
        }
        if (fd.f[da] * fd.f[a] != Cyclo(1)) {
            r.commutability = false;
            note("F^-1 != Delta F Delta at " + fd.labels[a]);
        }
        for (std::size_t b = 0; b < n && r.commutability; ++b) {
            if (!M(a, b).is_real() || M(a, b) != M(b, a)) {
                r.commutability = false;
                note(entry_witness("M not real symmetric", a, b, fd.labels));
            } else if (M(fd.delta[a], fd.delta[b]) != M(a, b)) {
                r.commutability = false;
                note(entry_witness("M != Delta M Delta", a, b, fd.labels));
            }
        }
    }

    r.positivity = fd.f[x0].is_one();
    if (!r.positivity) note("F at x0 is not 1");
    for (std::size_t a = 0; a < n; ++a)
        if (!M(a, x0).is_real() || M(a, x0).real_sign() <= 0) {
            r.positivity = false;
            note(entry_witness("M_{x,x0} not positive", a, x0, fd.labels));
            break;
        }

    CycloMatrix fdm(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) fdm(a, b) = fd.f[a] * M(fd.delta[a], b);
    bool sq = (M * M).is_identity();
    bool cube = (fdm * fdm * fdm).is_identity();
    r.modularity = sq && cube;
    if (!sq) note("M^2 != 1");
    else if (!cube) note("(F Delta M)^3 != 1");

    r.integrality = r.positivity;
    if (!r.positivity) return r;
    std::vector<Cyclo> inv_x0(n);
    for (std::size_t w = 0; w < n; ++w) inv_x0[w] = M(x0, w).inverse();
    for (std::size_t x = 0; x < n && r.integrality; ++x)
        for (std::size_t y = x; y < n && r.integrality; ++y) {
            std::vector<Cyclo> v(n);
            for (std::size_t w = 0; w < n; ++w) v[w] = M(x, w) * M(y, w) * inv_x0[w];
            for (std::size_t z = y; z < n; ++z) {
                Cyclo s;
                for (std::size_t w = 0; w < n; ++w)
                    if (!M(z, w).is_zero()) s += v[w] * M(z, w);
                if (!s.is_integer() || s.to_rational() < Rational(0)) {
                    r.integrality = false;
                    note("structure constant N(" + fd.labels[x] + "," + fd.labels[y] + "," + fd.labels[z] + ") = " + s.str());
                    break;
                }
            }
        }
    return r;
}

FusionDatum mgamma_datum(const MGamma& g)
{
    FusionDatum fd;
    auto fm = mgamma_matrix(g);
    fd.labels = fm.index;
    fd.m = std::move(fm.m);
    fd.x0 = 0;
    const std::size_t n = g.elems.size();
    for (std::size_t a = 0; a < n; ++a) {
        fd.f.push_back(g.elems[a].t);
        ClassFunction bar;
        for (const auto& v : g.elems[a].sigma) bar.push_back(v.conj());
        int d = -1;
        for (std::size_t b = 0; b < n; ++b)
            if (g.elems[b].x == g.elems[a].x && g.elems[b].sigma == bar) d = static_cast<int>(b);
        if (d < 0) throw CheckFailed("no conjugate character for " + g.elems[a].label);
        fd.delta.push_back(d);
    }
    return fd;
}

FusionDatum dihedral_datum(int m)
{
    FusionDatum fd;
    auto fm = dihedral_matrix(m);
    fd.labels = fm.index;
    fd.m = std::move(fm.m);
    fd.x0 = 0;
    std::map<std::string, int> pos;
    for (std::size_t a = 0; a < fd.labels.size(); ++a) pos[fd.labels[a]] = static_cast<int>(a);
    for (std::size_t a = 0; a < fd.labels.size(); ++a) {
        int i = 0, j = 0;
        char c;
        std::istringstream in(fd.labels[a]);
        in >> c >> i >> c >> j;
        bool primed = fd.labels[a].back() == '\'';
        if (primed || i == 0) {
            fd.delta.push_back(static_cast<int>(a));
            fd.f.push_back(Cyclo(1));
        } else {
            fd.delta.push_back(pos.at(pair_label(i, m - j)));
            long e = -static_cast<long>(i) * j;
            fd.f.push_back(Cyclo::zeta(m, ((e % m) + m) % m));
        }
    }
    return fd;
}

FusionDatum exceptional_datum()
{
    FusionDatum fd;
    fd.labels = {"(1,1)", "(1,sgn)", "(s,1)", "(s,sgn)"};
    fd.x0 = 0;
    fd.delta = {0, 1, 3, 2};
    fd.m = mgamma_matrix(mgamma_sym(2)).m;
    fd.f = {Cyclo(1), Cyclo(1), Cyclo::zeta(4, 1), Cyclo::zeta(4, 3)};
    return fd;
}

FusionDatum family_datum(const UchSet& u, const CycloMatrix& m, int family)
{
    const auto& fam = u.families.at(family);
    auto delta = delta_involution(u);
    std::map<int, int> local;
    for (std::size_t a = 0; a < fam.members.size(); ++a) local[fam.members[a]] = static_cast<int>(a);
    FusionDatum fd;
    const std::size_t n = fam.members.size();
    fd.m = CycloMatrix(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto& c = u.members[fam.members[a]];
        fd.labels.push_back(c.param.empty() ? c.label : c.param);
        fd.f.push_back(c.eig);
        fd.delta.push_back(local.at(delta[fam.members[a]]));
        if (fam.members[a] == fam.special) fd.x0 = static_cast<int>(a);
        for (std::size_t b = 0; b < n; ++b) fd.m(a, b) = m(fam.members[a], fam.members[b]);
    }
    return fd;
}

// ---------------------------------------------------------------- H4 ingest

namespace {

Cyclo json_cyclo(const nlohmann::json& v, const std::string& where)
{
    if (v.is_number_integer()) return Cyclo(v.get<long>());
    if (!v.is_string()) throw InvalidInput(where + ": expected a cyclotomic string");
    try {
        return Cyclo::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw InvalidInput(where + ": " + e.what());
    }
}

} // namespace

H4Family load_h4_family(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    for (const char* key : {"labels", "fourier_matrix", "eigenvalues", "provenance"})
        if (!j.contains(key)) throw InvalidInput(path + ": missing field " + key);
    if (!j["labels"].is_array() || !j["fourier_matrix"].is_array() || !j["eigenvalues"].is_array() ||
        !j["provenance"].is_string())
        throw InvalidInput(path + ": wrong field types");

    H4Family f;
    for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw InvalidInput(path + ": labels must be strings");
        f.labels.push_back(l.get<std::string>());
    }
    const std::size_t n = f.labels.size();
    if (n == 0 || j["fourier_matrix"].size() != n || j["eigenvalues"].size() != n)
        throw InvalidInput(path + ": labels, fourier_matrix and eigenvalues disagree in size");
    f.m = CycloMatrix(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto& row = j["fourier_matrix"][a];
        if (!row.is_array() || row.size() != n) throw InvalidInput(path + ": fourier_matrix is not square");
        for (std::size_t b = 0; b < n; ++b) f.m(a, b) = json_cyclo(row[b], "fourier_matrix");
        f.eig.push_back(json_cyclo(j["eigenvalues"][a], "eigenvalues"));
    }
    f.provenance = j["provenance"].get<std::string>();
    f.deg_low.assign(n, std::nullopt);
    if (j.contains("degree_lowest")) {
        const auto& d = j["degree_lowest"];
        if (!d.is_array() || d.size() != n) throw InvalidInput(path + ": degree_lowest has the wrong size");
        for (std::size_t a = 0; a < n; ++a) {
            if (d[a].is_null()) continue;
            if (!d[a].is_array() || d[a].size() != 2 || !d[a][0].is_string() || !d[a][1].is_number_integer())
                throw InvalidInput(path + ": degree_lowest entries are [coefficient, exponent]");
            f.deg_low[a] = std::make_pair(Rational::parse(d[a][0].get<std::string>()), d[a][1].get<int>());
        }
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (f.m(a, b) != f.m(b, a)) throw CheckFailed(path + ": fourier_matrix is not symmetric at " + f.labels[a]);
    if (!(f.m * f.m).is_identity()) throw CheckFailed(path + ": fourier_matrix does not square to 1");
    return f;
}

UchSet h4_family_uch(const H4Family& f, const CharacterTable& t)
{
    if (t.type != CoxeterType::H4()) throw InvalidInput("character table does not belong to H4");
    UchSet u;
    u.type = t.type;
    UchFamily fam;
    fam.gamma = "H4-74";
    fam.full_size = static_cast<int>(f.labels.size());
    for (std::size_t a = 0; a < f.labels.size(); ++a) {
        UnipotentChar c;
        c.label = f.labels[a];
        c.eig = f.eig[a];
        c.family = 0;
        try {
            c.irr = t.index(c.label);
            c.fake_degree = t.fake_degrees[c.irr];
        } catch (const InvalidInput&) {
            c.irr = -1;
        }
        int idx = static_cast<int>(u.members.size());
        if (c.irr >= 0 && (fam.special < 0 || t.b_value(c.irr) < t.b_value(u.members[fam.special].irr))) fam.special = idx;
        fam.members.push_back(idx);
        u.members.push_back(std::move(c));
    }
    if (fam.special < 0) throw InvalidInput("ingested family has no member labelled by an irreducible character");
    u.members[fam.special].special = true;
    u.families.push_back(std::move(fam));
    return u;
}

// ---------------------------------------------------------------- assembly

UchSet expand_classical(const UchSet& u)
{
    UchSet out = u;
    for (auto& fam : out.families) {
        if (fam.gamma.rfind("Z2^", 0) != 0 || static_cast<int>(fam.members.size()) == fam.full_size) continue;
        MGamma g = mgamma_z2(fam.gamma_rank);
        std::vector<bool> used(g.elems.size(), false);
        used[0] = true;
        out.members[fam.special].param = g.elems[0].label;
        for (int mi : fam.members) {
            if (mi == fam.special) continue;
            std::size_t e = 1;
            while (e < g.elems.size() && (used[e] || !g.elems[e].t.is_one())) ++e;
            if (e == g.elems.size()) throw CheckFailed("family of " + out.members[fam.special].label + " is too large");
            used[e] = true;
            out.members[mi].param = g.elems[e].label;
        }
        int f = out.members[fam.special].family;
        for (std::size_t e = 1; e < g.elems.size(); ++e) {
            if (used[e]) continue;
            UnipotentChar c;
            c.param = g.elems[e].label;
            c.label = "Phi" + c.param + "/" + out.members[fam.special].label;
            c.eig = g.elems[e].t;
            c.family = f;
            fam.members.push_back(static_cast<int>(out.members.size()));
            out.members.push_back(std::move(c));
        }
    }
    return out;
}

CycloMatrix assemble_fourier(const UchSet& u)
{
    const std::size_t n = u.size();
    CycloMatrix out(n, n);
    for (const auto& fam : u.families) {
        if (fam.members.size() == 1) {
            out(fam.members[0], fam.members[0]) = Cyclo(1);
            continue;
        }
        FourierMatrix block;
        if (fam.gamma.rfind("dihedral(", 0) == 0) {
            block = dihedral_matrix(std::stoi(fam.gamma.substr(9)));
        } else if (fam.gamma == "S2") {
            auto fd = exceptional_datum();
            block = {fd.labels, fd.m};
        } else if (fam.gamma.rfind("Z2^", 0) == 0) {
            if (static_cast<int>(fam.members.size()) != fam.full_size)
                throw InvalidInput("classical family of " + u.members[fam.special].label + " is not expanded");
            block = mgamma_matrix(mgamma_z2(fam.gamma_rank));
        } else {
            throw InvalidInput("no Fourier matrix attached to the " + fam.gamma + " family");
        }
        std::map<std::string, std::size_t> pos;
        for (std::size_t a = 0; a < block.index.size(); ++a) pos[block.index[a]] = a;
        if (pos.size() != fam.members.size())
            throw CheckFailed("family of " + u.members[fam.special].label + " does not match its Fourier matrix");
        std::vector<std::size_t> at;
        for (int mi : fam.members) {
            auto it = pos.find(u.members[mi].param);
            if (it == pos.end()) throw CheckFailed("member " + u.members[mi].label + " has no Fourier index");
            at.push_back(it->second);
        }
        for (std::size_t a = 0; a < at.size(); ++a)
            for (std::size_t b = 0; b < at.size(); ++b) out(fam.members[a], fam.members[b]) = block.m(at[a], at[b]);
    }
    return out;
}

// ---------------------------------------------------------------- epsilon

std::vector<long> uch_multiplicities(const UchSet& u, const std::vector<long>& irr_mult)
{
    std::vector<long> out;
    for (const auto& c : u.members) out.push_back(c.irr >= 0 ? irr_mult.at(c.irr) : 0);
    return out;
}

EpsilonResult solve_epsilon(const UchSet& u, const CycloMatrix& m, const std::vector<long>& mult, int max_free,
                            const std::vector<int>* candidate)
{
    const std::size_t n = u.size();
    if (m.rows() != n || mult.size() != n) throw InvalidInput("epsilon: matrix or multiplicities do not match Uch");
    EpsilonResult res;
    std::vector<std::vector<std::vector<int>>> per_family;
    for (const auto& fam : u.families) {
        if (static_cast<int>(fam.members.size()) != fam.full_size)
            throw InvalidInput("epsilon: family of " + u.members[fam.special].label + " is not expanded");
        std::vector<int> free;
        for (int mi : fam.members)
            if (u.members[mi].eig.is_real()) free.push_back(mi);
        std::vector<int> specials;
        for (int mi : fam.members)
            if (u.members[mi].special) specials.push_back(mi);

        auto value_at = [&](int s, const std::vector<int>& eps) {
            Cyclo v;
            for (int w : free) v += m(s, w) * Cyclo(eps[w]);
            return v;
        };
        std::vector<std::vector<int>> sols;
        if (static_cast<int>(free.size()) > max_free) {
            if (!candidate) throw InvalidInput("epsilon: family of " + u.members[fam.special].label + " is too large to search");
            res.exhaustive = false;
            bool ok = true;
            for (int mi : fam.members) {
                int c = (*candidate)[mi];
                if (u.members[mi].eig.is_real() ? (c != 1 && c != -1) : c != 0) ok = false;
            }
            for (int s : specials) ok = ok && value_at(s, *candidate) == Cyclo(mult[s]);
            if (ok) {
                std::vector<int> local;
                for (int mi : fam.members) local.push_back((*candidate)[mi]);
                sols.push_back(local);
            }
        } else {
            // Gray code over the signs of `free`, tracking the special rows incrementally.
            std::vector<int> eps(n, 0);
            for (int w : free) eps[w] = 1;
            std::vector<Cyclo> rows;
            for (int s : specials) rows.push_back(value_at(s, eps));
            const std::uint64_t total = std::uint64_t(1) << free.size();
            for (std::uint64_t step = 0;; ++step) {
                bool ok = true;
                for (std::size_t k = 0; k < specials.size() && ok; ++k) ok = rows[k] == Cyclo(mult[specials[k]]);
                if (ok) {
                    std::vector<int> local;
                    for (int mi : fam.members) local.push_back(eps[mi]);
                    sols.push_back(local);
                }
                if (step + 1 == total) break;
                int bit = __builtin_ctzll(step + 1);
                int w = free[bit];
                for (std::size_t k = 0; k < specials.size(); ++k) rows[k] -= m(specials[k], w) * Cyclo(2 * eps[w]);
                eps[w] = -eps[w];
            }
        }
        per_family.push_back(std::move(sols));
    }

    std::vector<std::vector<int>> acc{std::vector<int>(n, 0)};
    for (std::size_t f = 0; f < u.families.size(); ++f) {
        std::vector<std::vector<int>> next;
        for (const auto& partial : acc)
            for (const auto& local : per_family[f]) {
                if (next.size() >= 1024) break;
                auto e = partial;
                for (std::size_t a = 0; a < local.size(); ++a) e[u.families[f].members[a]] = local[a];
                next.push_back(std::move(e));
            }
        acc = std::move(next);
    }
    res.solutions = std::move(acc);
    if (!res.solutions.empty()) {
        const auto& e = res.solutions.front();
        for (std::size_t a = 0; a < n; ++a) {
            Cyclo v;
            for (std::size_t b = 0; b < n; ++b)
                if (e[b] && !m(a, b).is_zero()) v += m(a, b) * Cyclo(e[b]);
            res.m_eps.push_back(v);
        }
    }
    return res;
}

bool verify_all_note(const UchSet& u, const CycloMatrix& m, const std::vector<int>& eps, const std::vector<long>& mult,
                     std::string* witness)
{
    const std::size_t n = u.size();
    auto fail = [&](const std::string& s) {
        if (witness) *witness = s;
        return false;
    };
    if (eps.size() != n || mult.size() != n || m.rows() != n) return fail("size mismatch");
    int formal_support = 0;
    for (std::size_t a = 0; a < n; ++a) {
        Cyclo v;
        for (std::size_t b = 0; b < n; ++b)
            if (eps[b] && !m(a, b).is_zero()) v += m(a, b) * Cyclo(eps[b]);
        const auto& c = u.members[a];
        if (!v.is_integer() || v.to_rational() < Rational(0)) return fail("(M eps)(" + c.label + ") = " + v.str());
        if (c.irr >= 0) {
            if (v != Cyclo(mult[a])) return fail("(M eps)(" + c.label + ") = " + v.str() + ", expected " + std::to_string(mult[a]));
        } else if (!v.is_zero()) {
            ++formal_support;
        }
    }
    int allowed = u.type.family == Family::H4 ? 1 : 0;
    if (formal_support > allowed) return fail("M eps is supported on " + std::to_string(formal_support) + " formal members");
    return true;
}

bool verify_p1(const UchSet& u, const CycloMatrix& m)
{
    const std::size_t n = u.size();
    std::vector<CycloPoly> fake;
    for (const auto& c : u.members) {
        if (!c.degree) return false;
        fake.push_back(to_cyclo_poly(c.fake_degree));
    }
    for (std::size_t a = 0; a < n; ++a) {
        CycloPoly s;
        for (std::size_t b = 0; b < n; ++b)
            if (!m(a, b).is_zero()) s += fake[b] * m(a, b);
        if (s != *u.members[a].degree) return false;
    }
    return true;
}

} // namespace coxfs
