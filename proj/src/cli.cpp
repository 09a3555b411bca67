#include "coxfs/cli.hpp"

#include "coxfs/chartab.hpp"
#include "coxfs/claims.hpp"
#include "coxfs/combinat.hpp"
#include "coxfs/errors.hpp"
#include "coxfs/fourier.hpp"
#include "coxfs/invmod.hpp"
#include "coxfs/klcells.hpp"
#include "coxfs/uch.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace coxfs {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string type_text;
    std::optional<int> m;
    std::string format = "json";
    std::optional<std::size_t> max_order;
    std::string h4_data;
    int jobs = 1;
    // subcommand flags
    std::string sigma;
    std::string k = "0";
    bool verify_fusion = false;
    bool epsilon = false;
    bool kottwitz = false;
    bool p3 = false;
    std::vector<std::string> claims;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    json doc;
    Table table;
    bool ok = true;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void print_table(const Table& t, bool csv, std::ostream& out)
{
    if (csv) {
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
            out << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return;
    }
    std::vector<std::size_t> w(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += "  ";
            s += r[i];
            if (i + 1 < r.size()) s += std::string(w[i] - r[i].size(), ' ');
        }
        out << s << "\n";
    };
    line(t.header);
    std::size_t total = 0;
    for (std::size_t x : w) total += x;
    out << std::string(total + 2 * (w.empty() ? 0 : w.size() - 1), '-') << "\n";
    for (const auto& r : t.rows) line(r);
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string mult_string(const CharacterTable& t, const std::vector<long>& mult)
{
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (mult[i]) parts.push_back((mult[i] == 1 ? "" : std::to_string(mult[i]) + " ") + t.labels[i]);
    return parts.empty() ? "0" : join(parts, " + ");
}

json mult_json(const CharacterTable& t, const std::vector<long>& mult)
{
    json j = json::object();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (mult[i]) j[t.labels[i]] = mult[i];
    return j;
}

class Session {
public:
    explicit Session(const RunConfig& cfg)
        : cfg_(cfg), type_(CoxeterType::parse(cfg.type_text, cfg.m)), g_(CoxeterGroup::build(type_, max_order()))
    {
    }
    std::size_t max_order() const { return cfg_.max_order.value_or(default_max_order()); }
    const CoxeterGroup& g() const { return g_; }
    const CharacterTable& t()
    {
        if (!t_) t_ = char_table(g_);
        return *t_;
    }
    json head(const std::string& command) const { return json{{"schema", "coxfs/1"}, {"command", command}, {"type", type_.name()}}; }

    // Uch(W) with its Fourier matrix; H4 needs the data file.
    std::pair<UchSet, CycloMatrix> uch()
    {
        if (type_.family == Family::H4) {
            if (cfg_.h4_data.empty()) throw InvalidInput("H4 needs --h4-data for its unipotent characters");
            auto f = load_h4_family(cfg_.h4_data);
            return {h4_family_uch(f, t()), f.m};
        }
        auto u = expand_classical(build_uch(t()));
        auto m = assemble_fourier(u);
        return {std::move(u), std::move(m)};
    }
    std::vector<long> irr_mult() { return decompose(g_, module_character(InvolutionModule(g_, Rational(0))), t()); }

private:
    const RunConfig& cfg_;
    CoxeterType type_;
    CoxeterGroup g_;
    std::optional<CharacterTable> t_;
};

// ---------------------------------------------------------------- subcommands

Output cmd_group(Session& s)
{
    const auto& g = s.g();
    Output o;
    o.doc = s.head("group");
    o.doc["rank"] = g.rank();
    o.doc["order"] = g.size();
    o.doc["reflections"] = g.num_reflections();
    o.doc["degrees"] = g.degrees();
    std::vector<std::string> gens;
    for (int i = 0; i < g.rank(); ++i) gens.push_back(g.generator_name(i));
    o.doc["generators"] = gens;
    json cm = json::array();
    for (int i = 0; i < g.rank(); ++i) {
        std::vector<int> row;
        for (int j = 0; j < g.rank(); ++j) row.push_back(g.coxeter_m(i, j));
        cm.push_back(row);
    }
    o.doc["coxeter_matrix"] = cm;
    json classes = json::array();
    o.table.header = {"class", "representative", "length", "size", "order", "involution"};
    for (int c = 0; c < g.num_classes(); ++c) {
        ElementId r = g.class_rep(c);
        classes.push_back(json{{"representative", g.word_string(r)},
                               {"length", g.length(r)},
                               {"size", g.class_size(c)},
                               {"order", g.class_order(c)}});
        o.table.rows.push_back({std::to_string(c), g.word_string(r), std::to_string(g.length(r)), std::to_string(g.class_size(c)),
                                std::to_string(g.class_order(c)), g.is_involution(r) ? "yes" : "no"});
    }
    o.doc["classes"] = classes;
    return o;
}

Output cmd_chartab(Session& s)
{
    const auto& g = s.g();
    const auto& t = s.t();
    Output o;
    o.doc = s.head("chartab");
    o.ok = check_orthogonality(g, t);
    o.doc["orthogonality"] = o.ok;
    std::vector<std::string> reps;
    for (int c = 0; c < g.num_classes(); ++c) reps.push_back(g.word_string(g.class_rep(c)));
    o.doc["classes"] = reps;
    json chars = json::array();
    o.table.header = {"label", "degree", "fake_degree"};
    for (const auto& r : reps) o.table.header.push_back(r);
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<std::string> vals;
        for (const auto& v : t.chars[i]) vals.push_back(v.str());
        chars.push_back(json{{"label", t.labels[i]},
                             {"degree", t.degree(static_cast<int>(i))},
                             {"b", t.b_value(static_cast<int>(i))},
                             {"fake_degree", t.fake_degrees[i].str()},
                             {"values", vals}});
        std::vector<std::string> row = {t.labels[i], std::to_string(t.degree(static_cast<int>(i))), t.fake_degrees[i].str()};
        row.insert(row.end(), vals.begin(), vals.end());
        o.table.rows.push_back(row);
    }
    o.doc["characters"] = chars;
    return o;
}

Output cmd_special(const RunConfig& cfg)
{
    auto type = CoxeterType::parse(cfg.type_text, cfg.m);
    if (type.family != Family::BC && type.family != Family::D) throw InvalidInput("special: type must be BC<n> or D<n>");
    const bool bc = type.family == Family::BC;
    Output o;
    o.doc = json{{"schema", "coxfs/1"}, {"command", "special"}, {"type", type.name()}};
    json list = json::array();
    o.table.header = {"bipartition", bc ? "gamma_rank" : "skew_components"};
    for (const auto& b : bipartitions(type.n)) {
        std::string stat;
        if (bc) {
            if (!special_bc(b.alpha, b.beta)) continue;
            stat = std::to_string(d_stat(b.alpha, b.beta));
        } else {
            // unordered pairs, listed with the smaller diagram first
            if (b.alpha == b.beta || !contained(b.alpha, b.beta) || !special_d(b.alpha, b.beta)) continue;
            stat = std::to_string(skew_components(b.alpha, b.beta));
        }
        list.push_back(json{{"bipartition", to_string(b)}, {o.table.header[1], std::stoi(stat)}});
        o.table.rows.push_back({to_string(b), stat});
    }
    o.doc["specials"] = list;
    return o;
}

Output cmd_decompose(Session& s, const RunConfig& cfg)
{
    const auto& g = s.g();
    const auto& t = s.t();
    Rational k = Rational::parse(cfg.k);
    InvolutionModule mod(g, k);
    auto rel = verify_representation(mod);
    Output o;
    o.doc = s.head("decompose");
    o.doc["k"] = k.str();
    o.doc["dimension"] = mod.dim();
    o.doc["relations"] = rel.ok;
    if (!rel.ok) o.doc["relation_witness"] = rel.witness;
    o.ok = rel.ok;
    auto named = named_involutions(g);
    if (!cfg.sigma.empty()) {
        auto it = std::find_if(named.begin(), named.end(), [&](const auto& p) { return p.first == cfg.sigma; });
        if (it == named.end()) {
            std::vector<std::string> known;
            for (const auto& p : named) known.push_back(p.first);
            throw InvalidInput("unknown involution class '" + cfg.sigma + "'; expected one of " + join(known, ", "));
        }
        named = {*it};
    }
    json rows = json::array();
    o.table.header = {"sigma", "class_size", "decomposition"};
    for (const auto& [label, sigma] : named) {
        auto mult = decompose(g, class_character(g, sigma), t);
        json r{{"sigma", label}, {"class_size", g.class_size(g.class_of(sigma))}, {"multiplicities", mult_json(t, mult)}};
        if (g.type().classical()) {
            bool match = true;
            for (std::size_t i = 0; i < t.size(); ++i)
                match = match && mult[i] == kottwitz_multiplicity(g.type(), label, t, static_cast<int>(i));
            r["closed_form"] = match;
            o.ok = o.ok && match;
        }
        rows.push_back(r);
        o.table.rows.push_back({label, std::to_string(g.class_size(g.class_of(sigma))), mult_string(t, mult)});
    }
    o.doc["classes"] = rows;
    if (cfg.sigma.empty()) {
        auto total = decompose(g, module_character(mod), t);
        o.doc["chi_W"] = mult_json(t, total);
        o.table.rows.push_back({"total", std::to_string(mod.dim()), mult_string(t, total)});
    }
    return o;
}

Output cmd_gelfand(Session& s)
{
    const auto& t = s.t();
    auto mult = s.irr_mult();
    Output o;
    o.doc = s.head("gelfand");
    o.doc["gelfand_model"] = is_gelfand_model(mult);
    o.doc["chi_W"] = mult_json(t, mult);
    o.table.header = {"character", "multiplicity"};
    for (std::size_t i = 0; i < t.size(); ++i) o.table.rows.push_back({t.labels[i], std::to_string(mult[i])});
    o.table.rows.push_back({"gelfand_model", is_gelfand_model(mult) ? "yes" : "no"});
    return o;
}

Output cmd_uch(Session& s)
{
    auto [u, m] = s.uch();
    Output o;
    o.doc = s.head("uch");
    json members = json::array();
    o.table.header = {"label", "family", "special", "eig", "fake_degree", "degree"};
    for (const auto& c : u.members) {
        std::string deg = c.degree ? c.degree->str() : "";
        json j{{"label", c.label}, {"param", c.param},     {"irr", c.irr >= 0},       {"family", c.family},
               {"special", c.special}, {"eig", c.eig.str()}, {"fake_degree", c.fake_degree.str()}};
        j["degree"] = c.degree ? json(deg) : json(nullptr);
        members.push_back(j);
        o.table.rows.push_back({c.label, std::to_string(c.family), c.special ? "yes" : "", c.eig.str(), c.fake_degree.str(), deg});
    }
    json fams = json::array();
    for (const auto& f : u.families) {
        std::vector<std::string> labels;
        for (int a : f.members) labels.push_back(u.members[a].label);
        fams.push_back(json{{"special", u.members[f.special].label}, {"gamma", f.gamma}, {"members", labels}});
    }
    o.doc["members"] = members;
    o.doc["families"] = fams;
    return o;
}

Output cmd_fourier(Session& s, const RunConfig& cfg)
{
    auto [u, m] = s.uch();
    Output o;
    o.doc = s.head("fourier");
    o.ok = (m * m).is_identity() && m == m.transpose();
    o.doc["involutive_symmetric"] = o.ok;

    std::optional<EpsilonResult> eps;
    if (cfg.epsilon) {
        auto mult = uch_multiplicities(u, s.irr_mult());
        eps = solve_epsilon(u, m, mult);
        o.doc["epsilon_solutions"] = eps->solutions.size();
        o.doc["epsilon_unique"] = eps->unique();
        o.ok = o.ok && eps->unique();
    }
    json fams = json::array();
    o.table.header = {"family", "member", "eig"};
    if (cfg.epsilon) o.table.header.insert(o.table.header.end(), {"epsilon", "M_epsilon"});
    for (std::size_t f = 0; f < u.families.size(); ++f) {
        const auto& fam = u.families[f];
        json j{{"special", u.members[fam.special].label}, {"gamma", fam.gamma}, {"size", fam.members.size()}};
        if (cfg.verify_fusion) {
            auto r = verify_fusion_datum(family_datum(u, m, static_cast<int>(f)));
            j["axioms"] = json{{"commutability", r.commutability},
                               {"positivity", r.positivity},
                               {"modularity", r.modularity},
                               {"integrality", r.integrality}};
            if (!r.ok()) j["witness"] = r.witness;
            o.ok = o.ok && r.ok();
        }
        if (eps && !eps->solutions.empty()) {
            json ev = json::object(), mv = json::object();
            for (int a : fam.members) {
                ev[u.members[a].label] = eps->solutions[0][a];
                mv[u.members[a].label] = eps->m_eps[a].str();
            }
            j["epsilon"] = ev;
            j["M_epsilon"] = mv;
        }
        for (int a : fam.members) {
            std::vector<std::string> row = {u.members[fam.special].label, u.members[a].label, u.members[a].eig.str()};
            if (cfg.epsilon) {
                bool have = eps && !eps->solutions.empty();
                row.push_back(have ? std::to_string(eps->solutions[0][a]) : "");
                row.push_back(have ? eps->m_eps[a].str() : "");
            }
            o.table.rows.push_back(row);
        }
        fams.push_back(j);
    }
    o.doc["families"] = fams;
    return o;
}

Output cmd_cells(Session& s, const RunConfig& cfg)
{
    const auto& g = s.g();
    const auto& t = s.t();
    Output o;
    o.doc = s.head("cells");
    if (g.type().family == Family::H4) {
        auto rows = load_h4_cell_table(std::string(COXFS_DATA_DIR) + "/h4_left_cells.json");
        std::string why;
        o.ok = verify_h4_cell_table(g, t, rows, &why);
        o.doc["source"] = "data/h4_left_cells.json";
        o.doc["table_consistent"] = o.ok;
        if (!o.ok) o.doc["witness"] = why;
        json list = json::array();
        o.table.header = {"cells", "count", "size", "character"};
        for (const auto& r : rows) {
            json ch = json::object();
            std::vector<std::string> parts;
            for (const auto& [k, v] : r.character) {
                ch[k] = v;
                parts.push_back((v == 1 ? "" : std::to_string(v) + " ") + k);
            }
            json inv = json::object();
            for (const auto& [k, v] : r.involutions) inv[k] = v;
            list.push_back(json{{"name", r.name}, {"count", r.count}, {"size", r.size}, {"character", ch}, {"involutions", inv}});
            o.table.rows.push_back({r.name, std::to_string(r.count), std::to_string(r.size), join(parts, " + ")});
        }
        o.doc["cells"] = list;
        return o;
    }
    auto kl = KLTable::compute(g, cfg.max_order.value_or(1200));
    auto cells = compute_cells(kl, t);
    std::string why;
    o.ok = cell_census_check(g, cells, &why);
    o.doc["census"] = o.ok;
    if (!o.ok) o.doc["witness"] = why;
    json list = json::array();
    o.table.header = {"cell", "size", "character"};
    for (const auto& c : cells) {
        std::vector<std::string> words;
        for (ElementId w : c.elements) words.push_back(g.word_string(w));
        list.push_back(json{{"name", c.name}, {"size", c.elements.size()}, {"character", mult_json(t, c.mult)}, {"elements", words}});
        o.table.rows.push_back({c.name, std::to_string(c.elements.size()), mult_string(t, c.mult)});
    }
    o.doc["cells"] = list;
    if (cfg.kottwitz) {
        auto rep = kottwitz_check(g, cells);
        bool weak = weak_kottwitz_check(g, cells);
        bool pairs = cell_pair_check(g, cells);
        json rows = json::array();
        for (std::size_t c = 0; c < cells.size(); ++c)
            rows.push_back(json{{"cell", cells[c].name}, {"inner", rep.inner[c]}, {"count", rep.count[c]}});
        o.doc["kottwitz"] = json{{"sigma", rep.sigma_labels}, {"rows", rows}, {"identity", rep.ok}, {"weak", weak}, {"intersections", pairs}};
        if (!rep.ok) o.doc["kottwitz"]["witness"] = rep.witness;
        o.ok = o.ok && rep.ok && weak && pairs;
        for (const auto& l : rep.sigma_labels) o.table.header.push_back("#" + l);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (long n : rep.count[c]) o.table.rows[c].push_back(std::to_string(n));
    }
    if (cfg.p3) {
        if (g.type().family != Family::I2 && g.type().family != Family::H3) throw InvalidInput("--p3 needs type I2 or H3");
        auto [u, m] = s.uch();
        bool ok = verify_p3(u, m, cells, &why);
        o.doc["fourier_fixed"] = ok;
        if (!ok) o.doc["fourier_fixed_witness"] = why;
        o.ok = o.ok && ok;
    }
    return o;
}

Output cmd_verify_all(const RunConfig& cfg)
{
    auto type = CoxeterType::parse(cfg.type_text, cfg.m);
    ClaimOptions opt;
    if (cfg.max_order) opt.max_order = *cfg.max_order;
    opt.h4_data = cfg.h4_data;
    opt.jobs = cfg.jobs;
    auto reports = verify_claims(type, cfg.claims, opt);
    Output o;
    o.doc = json::array();
    o.table.header = {"claim", "status"};
    for (const auto& r : reports) {
        o.doc.push_back(to_json(r));
        o.table.rows.push_back({r.claim, to_string(r.status)});
    }
    o.ok = all_passed(reports);
    return o;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("type", cfg.type_text, "Coxeter type: A<n>, BC<n>, D<n>, I2(<m>), H3, H4")->required();
    sub->add_option("--m", cfg.m, "Parameter m for a bare I2")->check(CLI::Range(3, 1000));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--max-order", cfg.max_order, "Group-order bound (default COXFS_MAX_ORDER or 20000)")
        ->check(CLI::PositiveNumber);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Involution modules, Fourier matrices and left cells of finite Coxeter groups", "coxfs"};
    app.require_subcommand(1);
    app.allow_extras(false);

    std::map<std::string, std::function<Output()>> run;
    std::optional<Session> session;
    auto sess = [&]() -> Session& {
        if (!session) session.emplace(cfg);
        return *session;
    };

    auto* group = app.add_subcommand("group", "Order, degrees, Coxeter matrix and conjugacy classes");
    add_common(group, cfg);
    run["group"] = [&] { return cmd_group(sess()); };

    auto* chartab = app.add_subcommand("chartab", "Character table with labels and fake degrees");
    add_common(chartab, cfg);
    run["chartab"] = [&] { return cmd_chartab(sess()); };

    auto* special = app.add_subcommand("special", "Special characters of BC<n> or D<n>");
    add_common(special, cfg);
    run["special"] = [&] { return cmd_special(cfg); };

    auto* dec = app.add_subcommand("decompose", "Decompose the involution module by involution class");
    add_common(dec, cfg);
    dec->add_option("--sigma", cfg.sigma, "Only this involution class");
    dec->add_option("--k", cfg.k, "Parameter k of rho_{W,k}, a rational number");
    run["decompose"] = [&] { return cmd_decompose(sess(), cfg); };

    auto* gel = app.add_subcommand("gelfand", "Is the involution module a Gelfand model");
    add_common(gel, cfg);
    run["gelfand"] = [&] { return cmd_gelfand(sess()); };

    auto* uch = app.add_subcommand("uch", "Unipotent characters and their families");
    add_common(uch, cfg);
    uch->add_option("--h4-data", cfg.h4_data, "JSON data for the 74-element family of H4");
    run["uch"] = [&] { return cmd_uch(sess()); };

    auto* fourier = app.add_subcommand("fourier", "Fourier matrices, fusion axioms and epsilon");
    add_common(fourier, cfg);
    fourier->add_flag("--verify-fusion", cfg.verify_fusion, "Check the fusion axioms per family");
    fourier->add_flag("--epsilon", cfg.epsilon, "Solve for epsilon");
    fourier->add_option("--h4-data", cfg.h4_data, "JSON data for the 74-element family of H4");
    run["fourier"] = [&] { return cmd_fourier(sess(), cfg); };

    auto* cells = app.add_subcommand("cells", "Left cells and their characters");
    add_common(cells, cfg);
    cells->add_flag("--kottwitz", cfg.kottwitz, "Involution counts against inner products");
    cells->add_flag("--p3", cfg.p3, "M v = v for every cell (I2 and H3)");
    run["cells"] = [&] { return cmd_cells(sess(), cfg); };

    auto* all = app.add_subcommand("verify-all", "Every applicable check as a report array");
    add_common(all, cfg);
    all->add_option("--h4-data", cfg.h4_data, "JSON data for the 74-element family of H4");
    all->add_option("--jobs", cfg.jobs, "Claims checked in parallel")->check(CLI::PositiveNumber);
    all->add_option("--claims", cfg.claims, "Only these claims")->check(CLI::IsMember(claim_ids()))->delimiter(',');
    run["verify-all"] = [&] { return cmd_verify_all(cfg); };

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        Output o = run.at(name)();
        if (cfg.format == "json") out << o.doc.dump(2) << "\n";
        else print_table(o.table, cfg.format == "csv", out);
        return o.ok ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "coxfs: " << e.what() << "\n";
        return 2;
    } catch (const OrderBoundExceeded& e) {
        err << "coxfs: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailed& e) {
        err << "coxfs: check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "coxfs: error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace coxfs
