#include "coxfs/claims.hpp"

#include "coxfs/chartab.hpp"
#include "coxfs/combinat.hpp"
#include "coxfs/errors.hpp"
#include "coxfs/fourier.hpp"
#include "coxfs/invmod.hpp"
#include "coxfs/klcells.hpp"
#include "coxfs/uch.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>

namespace coxfs {

using json = nlohmann::ordered_json;
using LabelMult = std::map<std::string, long>;

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "fail";
}

json to_json(const Report& r)
{
    json j;
    j["claim"] = r.claim;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness;
    return j;
}

bool all_passed(const std::vector<Report>& reports)
{
    return std::none_of(reports.begin(), reports.end(), [](const Report& r) { return r.status == Status::Fail; });
}

const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids = {
        "representation", "character-table", "involution-decomposition", "gelfand-model", "special-characters",
        "uch-families", "fusion-axioms", "epsilon", "fake-degree-transform", "left-cells", "kottwitz",
        "weak-kottwitz", "cell-intersections", "cell-fourier-fixed", "h4-big-family"};
    return ids;
}

namespace {

LabelMult named(const CharacterTable& t, const std::vector<long>& mult)
{
    LabelMult out;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (mult[i]) out[t.labels[i]] = mult[i];
    return out;
}

json mult_json(const LabelMult& m)
{
    json j = json::object();
    for (const auto& [k, v] : m) j[k] = v;
    return j;
}

Report make(const std::string& claim, bool ok, json witness)
{
    return {claim, ok ? Status::Pass : Status::Fail, std::move(witness)};
}

Report skipped(const std::string& claim, const std::string& reason) { return {claim, Status::Skipped, json{{"reason", reason}}}; }

bool is_i2(const CoxeterType& t) { return t.family == Family::I2; }
bool is_h3(const CoxeterType& t) { return t.family == Family::H3; }
bool is_h4(const CoxeterType& t) { return t.family == Family::H4; }

// Shared data, each piece built on first use.
class Context {
public:
    Context(const CoxeterType& type, const ClaimOptions& opt) : opt(opt), g(CoxeterGroup::build(type, opt.max_order)) {}

    const ClaimOptions& opt;
    const CoxeterGroup g;
    const CoxeterType& type() const { return g.type(); }

    const CharacterTable& table()
    {
        std::call_once(t_once_, [&] { t_ = char_table(g); });
        return *t_;
    }
    const std::vector<long>& irr_mult()
    {
        std::call_once(m_once_, [&] { irr_mult_ = decompose(g, module_character(InvolutionModule(g, Rational(0))), table()); });
        return irr_mult_;
    }
    struct Pipeline {
        UchSet u;
        CycloMatrix m;
        std::vector<long> mult;
    };
    const Pipeline& pipeline()
    {
        std::call_once(p_once_, [&] {
            Pipeline p;
            p.u = expand_classical(build_uch(table()));
            p.m = assemble_fourier(p.u);
            p.mult = uch_multiplicities(p.u, irr_mult());
            p_ = std::move(p);
        });
        return *p_;
    }
    bool cells_available() const { return g.size() <= opt.kl_max_order; }
    const std::vector<CellData>& cells()
    {
        std::call_once(c_once_, [&] {
            kl_ = KLTable::compute(g, opt.kl_max_order);
            cells_ = compute_cells(*kl_, table());
        });
        return cells_;
    }
    const KLTable& kl()
    {
        cells();
        return *kl_;
    }

private:
    std::once_flag t_once_, m_once_, p_once_, c_once_;
    std::optional<CharacterTable> t_;
    std::vector<long> irr_mult_;
    std::optional<Pipeline> p_;
    std::optional<KLTable> kl_;
    std::vector<CellData> cells_;
};

// ---------------------------------------------------------------- representation

Report representation(Context& cx)
{
    json w;
    bool ok = true;
    ClassFunction ref;
    for (int k = 0; k <= 2; ++k) {
        InvolutionModule mod(cx.g, Rational(k));
        if (k == 0) w["dim"] = mod.dim();
        auto r = verify_representation(mod);
        if (!r.ok) {
            ok = false;
            w["k=" + std::to_string(k)] = r.witness;
        }
        auto ch = module_character(mod);
        if (k == 0) ref = ch;
        else if (ch != ref) {
            ok = false;
            w["character_differs_at_k"] = k;
        }
    }
    return make("representation", ok, w);
}

Report character_table(Context& cx)
{
    const auto& t = cx.table();
    return make("character-table", check_orthogonality(cx.g, t), json{{"irreducibles", t.size()}, {"classes", cx.g.num_classes()}});
}

// ---------------------------------------------------------------- involution modules

LabelMult dihedral_expected(int m, const std::string& sigma)
{
    LabelMult e;
    std::string h = std::to_string(m / 2);
    if (sigma == "1") e["phi1,0"] = 1;
    else if (sigma == "w0") e["phi1," + std::to_string(m)] = 1;
    else if (m % 2) {
        e["phi1," + std::to_string(m)] = 1;
        for (int k = 1; 2 * k < m; ++k) e["phi2," + std::to_string(k)] = 1;
    } else {
        for (int k = 1; 2 * k < m; k += 2) e["phi2," + std::to_string(k)] = 1;
        if (m % 4 == 2) e[(sigma == "s" ? "phi'1," : "phi''1,") + h] = 1;
    }
    return e;
}

const std::map<std::string, LabelMult>& h3_expected()
{
    static const std::map<std::string, LabelMult> e = {
        {"1", {{"phi1,0", 1}}},
        {"(abc)^5", {{"phi1,15", 1}}},
        {"a", {{"phi3,1", 1}, {"phi3,3", 1}, {"phi4,3", 1}, {"phi5,5", 1}}},
        {"ac", {{"phi3,6", 1}, {"phi3,8", 1}, {"phi4,4", 1}, {"phi5,2", 1}}},
    };
    return e;
}

const std::map<std::string, LabelMult>& h4_expected()
{
    static const std::map<std::string, LabelMult> e = {
        {"1", {{"phi1,0", 1}}},
        {"(abcd)^15", {{"phi1,60", 1}}},
        {"a", {{"phi4,1", 1}, {"phi4,7", 1}, {"phi16,3", 1}, {"phi36,5", 1}}},
        {"(abc)^5", {{"phi4,31", 1}, {"phi4,37", 1}, {"phi16,21", 1}, {"phi36,15", 1}}},
        {"ac",
         {{"phi9,2", 1}, {"phi9,6", 1}, {"phi9,22", 1}, {"phi9,26", 1}, {"phi16,6", 1}, {"phi16,18", 1}, {"phi25,4", 1},
          {"phi25,16", 1}, {"phi24,6", 2}, {"phi24,12", 2}, {"phi18,10", 2}, {"phi30,10,12", 2}, {"phi30,10,14", 2},
          {"phi40,8", 2}}},
    };
    return e;
}

Report involution_decomposition(Context& cx)
{
    const auto& g = cx.g;
    const auto& t = cx.table();
    const auto& type = cx.type();
    json w = json::object();
    bool ok = true;
    std::vector<long> total(t.size(), 0);
    for (const auto& [label, sigma] : named_involutions(g)) {
        auto mult = decompose(g, class_character(g, sigma), t);
        for (std::size_t i = 0; i < t.size(); ++i) total[i] += mult[i];
        auto got = named(t, mult);
        w[label] = mult_json(got);
        std::optional<LabelMult> expect;
        if (type.classical()) {
            LabelMult e;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (long k = kottwitz_multiplicity(type, label, t, static_cast<int>(i))) e[t.labels[i]] = k;
            expect = e;
        } else if (is_i2(type)) expect = dihedral_expected(type.n, label);
        else if (is_h3(type)) expect = h3_expected().at(label);
        else if (is_h4(type)) expect = h4_expected().at(label);
        if (expect && *expect != got) {
            ok = false;
            w["mismatch"] = label;
        }
    }
    if (total != cx.irr_mult()) {
        ok = false;
        w["mismatch"] = "sum of class characters";
    }
    return make("involution-decomposition", ok, w);
}

bool gelfand_expected(const CoxeterType& t)
{
    switch (t.family) {
    case Family::A: return true;
    case Family::BC: return t.n == 1;
    case Family::D: return t.n == 3; // D3 = A3
    case Family::I2: return t.n % 2 == 1;
    case Family::H3: return true;
    case Family::H4: return false;
    }
    return false;
}

Report gelfand_model(Context& cx)
{
    bool got = is_gelfand_model(cx.irr_mult());
    bool expect = gelfand_expected(cx.type());
    return make("gelfand-model", got == expect,
                json{{"gelfand_model", got}, {"expected", expect}, {"chi_W", mult_json(named(cx.table(), cx.irr_mult()))}});
}

// ---------------------------------------------------------------- combinatorics

Report special_characters(Context& cx)
{
    const int n = cx.type().n;
    const bool bc = cx.type().family == Family::BC;
    long specials = 0;
    json w;
    bool ok = true;
    for (const auto& b : bipartitions(n)) {
        bool s = bc ? special_bc(b.alpha, b.beta) : special_d(b.alpha, b.beta);
        bool agree = bc ? s == special_bc_symbol(b.alpha, b.beta)
                        : s == special_d_symbol(b.alpha, b.beta) && s == special_d_rows(b.alpha, b.beta);
        if (!agree) {
            ok = false;
            w["mismatch"] = to_string(b);
        }
        if (!s) continue;
        ++specials;
        if (bc) {
            Symbol sym = symbol_bc(b.alpha, b.beta, n);
            int rank = family_gamma_rank(SymbolKind::BC, symbol_singles(sym));
            if (d_stat(b.alpha, b.beta) != rank) {
                ok = false;
                w["rank_mismatch"] = to_string(b);
            }
        }
    }
    w["specials"] = specials;
    return make("special-characters", ok, w);
}

// ---------------------------------------------------------------- unipotent characters

Report uch_families(Context& cx)
{
    auto u = build_uch(cx.table());
    json w;
    bool ok = true;
    std::vector<int> seen(u.size(), 0);
    for (const auto& fam : u.families) {
        int specials = 0;
        for (int m : fam.members) {
            ++seen[m];
            specials += u.members[m].special;
        }
        if (specials != 1 || fam.special < 0) {
            ok = false;
            w["bad_family"] = u.members[fam.members[0]].label;
            continue;
        }
        int b0 = u.members[fam.special].fake_degree.valuation();
        for (int m : fam.members)
            if (m != fam.special && u.members[m].irr >= 0 && u.members[m].fake_degree.valuation() <= b0) {
                ok = false;
                w["special_not_minimal"] = u.members[m].label;
            }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
        ok = false;
        w["partition"] = false;
    }
    auto d = delta_involution(u);
    auto j = j_involution(cx.g, u, cx.table());
    for (std::size_t a = 0; a < u.size(); ++a)
        if (d[d[a]] != static_cast<int>(a) || j[j[a]] != static_cast<int>(a) || u.members[d[a]].family != u.members[a].family ||
            u.members[j[a]].family != u.members[a].family) {
            ok = false;
            w["involution_mismatch"] = u.members[a].label;
        }
    w["members"] = u.size();
    w["families"] = u.families.size();
    return make("uch-families", ok, w);
}

Report fusion_axioms(Context& cx)
{
    const auto& p = cx.pipeline();
    json w = json::array();
    bool ok = (p.m * p.m).is_identity() && p.m == p.m.transpose();
    for (std::size_t f = 0; f < p.u.families.size(); ++f) {
        if (p.u.families[f].members.size() == 1) continue;
        auto r = verify_fusion_datum(family_datum(p.u, p.m, static_cast<int>(f)));
        json e{{"family", p.u.members[p.u.families[f].special].label},
               {"gamma", p.u.families[f].gamma},
               {"commutability", r.commutability},
               {"positivity", r.positivity},
               {"modularity", r.modularity},
               {"integrality", r.integrality}};
        if (!r.ok()) {
            ok = false;
            e["witness"] = r.witness;
        }
        w.push_back(e);
    }
    return make("fusion-axioms", ok, json{{"families", w}});
}

int expected_epsilon(const CoxeterType& type, const UnipotentChar& c)
{
    if (type.classical()) return 1;
    if (is_i2(type)) {
        int i = 0, j = 0;
        std::sscanf(c.param.c_str(), "(%d,%d)", &i, &j);
        return c.irr >= 0 || 2 * j == type.n ? 1 : 0;
    }
    return c.irr >= 0 ? 1 : 0;
}

// (M eps) on the (0,j) members of I2(m): 1 for m odd; 2 or 0 by the parity of j for m even;
// 1 on (0,m/2)' exactly when m = 2 mod 4.
std::optional<long> dihedral_m_eps(int m, const std::string& param)
{
    if (param.rfind("(0,", 0) != 0) return std::nullopt;
    if (param.back() == '\'') return m % 4 == 2 ? 1 : 0;
    if (m % 2) return 1;
    return std::stoi(param.substr(3)) % 2 ? 2 : 0;
}

Report epsilon(Context& cx)
{
    const auto& p = cx.pipeline();
    const auto& type = cx.type();
    auto res = solve_epsilon(p.u, p.m, p.mult);
    json w;
    w["solutions"] = res.solutions.size();
    w["exhaustive"] = res.exhaustive;
    bool ok = res.unique();
    std::vector<int> expect(p.u.size());
    for (std::size_t a = 0; a < p.u.size(); ++a) expect[a] = expected_epsilon(type, p.u.members[a]);
    std::string why;
    if (!verify_all_note(p.u, p.m, expect, p.mult, &why)) {
        ok = false;
        w["expected_fails"] = why;
    }
    if (!res.solutions.empty()) {
        const auto& eps = res.solutions[0];
        json vals = json::object(), meps = json::object();
        for (std::size_t a = 0; a < p.u.size(); ++a) {
            vals[p.u.members[a].label] = eps[a];
            meps[p.u.members[a].label] = res.m_eps[a].str();
            if (is_i2(type))
                if (auto e = dihedral_m_eps(type.n, p.u.members[a].param); e && res.m_eps[a] != Cyclo(*e)) ok = false;
        }
        w["epsilon"] = vals;
        w["M_epsilon"] = meps;
        if (eps != expect) ok = false;
    }
    if (std::find(res.solutions.begin(), res.solutions.end(), expect) == res.solutions.end()) w["expected_is_solution"] = false;
    return make("epsilon", ok, w);
}

Report fake_degree_transform(Context& cx)
{
    const auto& p = cx.pipeline();
    return make("fake-degree-transform", verify_p1(p.u, p.m), json{{"members", p.u.size()}});
}

// ---------------------------------------------------------------- cells

const CellData* find_cell(const std::vector<CellData>& cells, const std::string& name)
{
    auto it = std::find_if(cells.begin(), cells.end(), [&](const CellData& c) { return c.name == name; });
    return it == cells.end() ? nullptr : &*it;
}

struct H3Row {
    LabelMult chi;
    std::map<std::string, long> inv;
};

// Keyed by the leading letter and a star flag.
const std::map<std::pair<char, bool>, H3Row>& h3_cell_rows()
{
    static const std::map<std::pair<char, bool>, H3Row> rows = {
        {{'I', false}, {{{"phi4,3", 1}, {"phi4,4", 1}}, {{"1", 0}, {"(abc)^5", 0}, {"a", 1}, {"ac", 1}}}},
        {{'J', false}, {{{"phi5,2", 1}}, {{"1", 0}, {"(abc)^5", 0}, {"a", 0}, {"ac", 1}}}},
        {{'J', true}, {{{"phi5,5", 1}}, {{"1", 0}, {"(abc)^5", 0}, {"a", 1}, {"ac", 0}}}},
        {{'K', false}, {{{"phi3,1", 1}, {"phi3,3", 1}}, {{"1", 0}, {"(abc)^5", 0}, {"a", 2}, {"ac", 0}}}},
        {{'K', true}, {{{"phi3,6", 1}, {"phi3,8", 1}}, {{"1", 0}, {"(abc)^5", 0}, {"a", 0}, {"ac", 2}}}},
        {{'L', false}, {{{"phi1,0", 1}}, {{"1", 1}, {"(abc)^5", 0}, {"a", 0}, {"ac", 0}}}},
        {{'L', true}, {{{"phi1,15", 1}}, {{"1", 0}, {"(abc)^5", 1}, {"a", 0}, {"ac", 0}}}},
    };
    return rows;
}

const H3Row* h3_row(const std::string& name)
{
    auto it = h3_cell_rows().find({name[0], name.back() == '*'});
    return it == h3_cell_rows().end() ? nullptr : &it->second;
}

std::map<std::string, LabelMult> dihedral_cell_chars(int m)
{
    LabelMult two;
    for (int k = 1; 2 * k < m; ++k) two["phi2," + std::to_string(k)] = 1;
    std::string h = std::to_string(m / 2);
    auto y = two, ys = two;
    if (m % 2 == 0) {
        y["phi'1," + h] = 1;
        ys["phi''1," + h] = 1;
    }
    return {{"X", {{"phi1,0", 1}}}, {"X*", {{"phi1," + std::to_string(m), 1}}}, {"Y", y}, {"Y*", ys}};
}

// |Y cap class(r)|, |Y cap class(s)| and the same for Y*.
std::map<std::pair<std::string, std::string>, long> dihedral_cell_counts(int m)
{
    if (m % 2) return {{{"Y", "r"}, (m - 1) / 2}, {{"Y*", "r"}, (m - 1) / 2}};
    if (m % 4 == 2)
        return {{{"Y", "r"}, (m - 2) / 4}, {{"Y", "s"}, (m + 2) / 4}, {{"Y*", "r"}, (m + 2) / 4}, {{"Y*", "s"}, (m - 2) / 4}};
    return {{{"Y", "r"}, m / 4}, {{"Y", "s"}, m / 4}, {{"Y*", "r"}, m / 4}, {{"Y*", "s"}, m / 4}};
}

Report h4_cell_table(Context& cx)
{
    std::string path = std::string(COXFS_DATA_DIR) + "/h4_left_cells.json";
    auto rows = load_h4_cell_table(path);
    std::string why;
    bool ok = verify_h4_cell_table(cx.g, cx.table(), rows, &why);
    long cells = 0;
    for (const auto& r : rows) cells += r.count;
    json w{{"source", "data/h4_left_cells.json"}, {"rows", rows.size()}, {"cells", cells}};
    if (!ok) w["witness"] = why;
    return make("left-cells", ok, w);
}

Report left_cells_claim(Context& cx)
{
    if (is_h4(cx.type())) return h4_cell_table(cx);
    if (!cx.cells_available()) return skipped("left-cells", "group order exceeds the cell bound");
    const auto& cells = cx.cells();
    const auto& t = cx.table();
    json w;
    std::string why;
    bool ok = cx.kl().sanity(&why) && cell_census_check(cx.g, cells, &why);
    if (!ok) w["witness"] = why;
    json list = json::array();
    for (const auto& c : cells)
        list.push_back(json{{"name", c.name}, {"size", c.elements.size()}, {"character", mult_json(named(t, c.mult))}});
    w["cells"] = list;
    if (is_i2(cx.type())) {
        ok = ok && cells.size() == 4;
        for (const auto& [name, chi] : dihedral_cell_chars(cx.type().n)) {
            const CellData* c = find_cell(cells, name);
            if (!c || named(t, c->mult) != chi) {
                ok = false;
                w["mismatch"] = name;
            }
        }
    } else if (is_h3(cx.type())) {
        ok = ok && cells.size() == 22;
        for (const auto& c : cells) {
            const H3Row* row = h3_row(c.name);
            if (!row || named(t, c.mult) != row->chi) {
                ok = false;
                w["mismatch"] = c.name;
            }
        }
    }
    return make("left-cells", ok, w);
}

Report kottwitz(Context& cx)
{
    if (!cx.cells_available()) return skipped("kottwitz", "group order exceeds the cell bound");
    const auto& cells = cx.cells();
    auto rep = kottwitz_check(cx.g, cells);
    bool ok = rep.ok;
    json w;
    w["sigma"] = rep.sigma_labels;
    json rows = json::array();
    for (std::size_t c = 0; c < cells.size(); ++c) rows.push_back(json{{"cell", cells[c].name}, {"count", rep.count[c]}});
    w["counts"] = rows;
    if (!rep.ok) w["witness"] = rep.witness;
    auto col = [&](const std::string& s) {
        auto it = std::find(rep.sigma_labels.begin(), rep.sigma_labels.end(), s);
        return static_cast<std::size_t>(it - rep.sigma_labels.begin());
    };
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& name = cells[c].name;
        if (is_i2(cx.type())) {
            for (const auto& [key, n] : dihedral_cell_counts(cx.type().n))
                if (key.first == name && rep.count[c][col(key.second)] != n) {
                    ok = false;
                    w["mismatch"] = name + " " + key.second;
                }
        } else if (is_h3(cx.type())) {
            const H3Row* row = h3_row(name);
            if (!row) {
                ok = false;
                continue;
            }
            for (std::size_t k = 0; k < rep.sigma_labels.size(); ++k)
                if (rep.count[c][k] != row->inv.at(rep.sigma_labels[k])) {
                    ok = false;
                    w["mismatch"] = name + " " + rep.sigma_labels[k];
                }
        }
    }
    return make("kottwitz", ok, w);
}

Report weak_kottwitz(Context& cx)
{
    if (!cx.cells_available()) return skipped("weak-kottwitz", "group order exceeds the cell bound");
    std::string why;
    bool ok = weak_kottwitz_check(cx.g, cx.cells(), &why);
    return make("weak-kottwitz", ok, ok ? json{{"cells", cx.cells().size()}} : json{{"witness", why}});
}

Report cell_intersections(Context& cx)
{
    if (!cx.cells_available()) return skipped("cell-intersections", "group order exceeds the cell bound");
    std::string why;
    bool ok = cell_pair_check(cx.g, cx.cells(), &why);
    return make("cell-intersections", ok, ok ? json{{"pairs", cx.cells().size() * cx.cells().size()}} : json{{"witness", why}});
}

Report cell_fourier_fixed(Context& cx)
{
    if (!cx.cells_available()) return skipped("cell-fourier-fixed", "group order exceeds the cell bound");
    const auto& p = cx.pipeline();
    std::string why;
    bool ok = verify_p3(p.u, p.m, cx.cells(), &why);
    return make("cell-fourier-fixed", ok, ok ? json{{"cells", cx.cells().size()}} : json{{"witness", why}});
}

Report h4_big_family(Context& cx)
{
    const std::string claim = "h4-big-family";
    if (cx.opt.h4_data.empty()) return skipped(claim, "no data file for the 74-element family");
    H4Family f;
    try {
        f = load_h4_family(cx.opt.h4_data);
    } catch (const std::exception& e) {
        return make(claim, false, json{{"rejected", e.what()}});
    }
    auto u = h4_family_uch(f, cx.table());
    json w{{"provenance", f.provenance}, {"members", u.size()}};
    auto fr = verify_fusion_datum(family_datum(u, f.m, 0));
    w["fusion_axioms"] = fr.ok();
    bool ok = fr.ok();
    if (!fr.ok()) w["fusion_witness"] = fr.witness;

    // the candidate: 0 off the real eigenvalues, -1 on the members of degree x^6/60 + ..., else 1
    std::vector<int> cand(u.size(), 1);
    int minus = 0;
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (!u.members[a].eig.is_real()) cand[a] = 0;
        else if (f.deg_low[a] && f.deg_low[a]->first == Rational(1, 60) && f.deg_low[a]->second == 6) {
            cand[a] = -1;
            ++minus;
        }
    }
    auto mult = uch_multiplicities(u, cx.irr_mult());
    auto res = solve_epsilon(u, f.m, mult, 22, &cand);
    w["exhaustive"] = res.exhaustive;
    w["solutions"] = res.solutions.size();
    int found_minus = -1;
    if (res.solutions.size() == 1) found_minus = static_cast<int>(std::count(res.solutions[0].begin(), res.solutions[0].end(), -1));
    w["minus_one_members"] = found_minus;
    std::string why;
    if (!verify_all_note(u, f.m, cand, mult, &why)) {
        ok = false;
        w["candidate_fails"] = why;
    }
    ok = ok && minus == 2 && res.solutions.size() == 1 && res.solutions[0] == cand;
    return make(claim, ok, w);
}

bool applies(const std::string& claim, const CoxeterType& t)
{
    bool uch_types = t.family != Family::H4;
    if (claim == "special-characters") return t.family == Family::BC || t.family == Family::D;
    if (claim == "uch-families" || claim == "fusion-axioms" || claim == "epsilon") return uch_types;
    if (claim == "fake-degree-transform") return is_i2(t);
    if (claim == "kottwitz" || claim == "weak-kottwitz" || claim == "cell-intersections") return uch_types;
    if (claim == "cell-fourier-fixed") return is_i2(t) || is_h3(t);
    if (claim == "h4-big-family") return is_h4(t);
    return true;
}

using ClaimFn = Report (*)(Context&);

ClaimFn lookup(const std::string& claim)
{
    static const std::map<std::string, ClaimFn> fns = {
        {"representation", representation},
        {"character-table", character_table},
        {"involution-decomposition", involution_decomposition},
        {"gelfand-model", gelfand_model},
        {"special-characters", special_characters},
        {"uch-families", uch_families},
        {"fusion-axioms", fusion_axioms},
        {"epsilon", epsilon},
        {"fake-degree-transform", fake_degree_transform},
        {"left-cells", left_cells_claim},
        {"kottwitz", kottwitz},
        {"weak-kottwitz", weak_kottwitz},
        {"cell-intersections", cell_intersections},
        {"cell-fourier-fixed", cell_fourier_fixed},
        {"h4-big-family", h4_big_family},
    };
    auto it = fns.find(claim);
    if (it == fns.end()) throw InvalidInput("unknown claim: " + claim);
    return it->second;
}

Report run_one(const std::string& claim, Context& cx)
{
    try {
        return lookup(claim)(cx);
    } catch (const CheckFailed& e) {
        return make(claim, false, json{{"error", e.what()}});
    }
}

} // namespace

std::vector<Report> verify_claims(const CoxeterType& type, const std::vector<std::string>& claims, const ClaimOptions& opt)
{
    if (opt.jobs < 1) throw InvalidInput("jobs must be positive");
    for (const auto& c : claims) lookup(c);
    Context cx(type, opt);
    std::vector<std::string> todo;
    for (const auto& c : claim_ids())
        if ((claims.empty() || std::find(claims.begin(), claims.end(), c) != claims.end()) && applies(c, type)) todo.push_back(c);

    std::vector<Report> out(todo.size());
    if (opt.jobs == 1) {
        for (std::size_t i = 0; i < todo.size(); ++i) out[i] = run_one(todo[i], cx);
        return out;
    }
    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next == todo.size()) return;
                i = next++;
            }
            out[i] = run_one(todo[i], cx);
        }
    };
    std::vector<std::future<void>> pool;
    for (int j = 0; j < opt.jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return out;
}

} // namespace coxfs
