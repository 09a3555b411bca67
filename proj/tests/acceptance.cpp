// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Optional: COXFS_H4_DATA names a data file for the 74-element family of H4.

#include "coxfs/chartab.hpp"
#include "coxfs/claims.hpp"
#include "coxfs/combinat.hpp"
#include "coxfs/errors.hpp"
#include "coxfs/fourier.hpp"
#include "coxfs/invmod.hpp"
#include "coxfs/klcells.hpp"
#include "coxfs/uch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace coxfs;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why)
    {
        if (ok) note = why;
        ok = false;
    }
};

// Every listed claim must pass (or be skipped when `allow_skip`).
void require(Outcome& o, const CoxeterType& type, const std::vector<std::string>& claims, bool allow_skip = false,
             const ClaimOptions& opt = {})
{
    for (const auto& r : verify_claims(type, claims, opt)) {
        if (r.status == Status::Pass || (allow_skip && r.status == Status::Skipped)) continue;
        std::string w = r.witness.dump();
        if (w.size() > 160) w = w.substr(0, 160) + "...";
        o.fail(type.name() + " " + r.claim + " " + to_string(r.status) + " " + w);
    }
}

std::vector<CoxeterType> dihedral(int lo, int hi)
{
    std::vector<CoxeterType> v;
    for (int m = lo; m <= hi; ++m) v.push_back(CoxeterType::I2(m));
    return v;
}

std::vector<CoxeterType> classical(int a, int bc, int d)
{
    std::vector<CoxeterType> v;
    for (int n = 1; n <= a; ++n) v.push_back(CoxeterType::A(n));
    for (int n = 2; n <= bc; ++n) v.push_back(CoxeterType::BC(n));
    for (int n = 3; n <= d; ++n) v.push_back(CoxeterType::D(n));
    return v;
}

// ---------------------------------------------------------------- criteria

Outcome representation()
{
    Outcome o;
    std::vector<CoxeterType> types = {CoxeterType::A(4), CoxeterType::BC(3), CoxeterType::D(4), CoxeterType::H3(), CoxeterType::H4()};
    for (const auto& t : dihedral(3, 10)) types.push_back(t);
    for (const auto& t : types) require(o, t, {"representation"});
    return o;
}

Outcome h3_decomposition()
{
    Outcome o;
    require(o, CoxeterType::H3(), {"involution-decomposition", "gelfand-model"});
    return o;
}

Outcome h4_decomposition()
{
    Outcome o;
    require(o, CoxeterType::H4(), {"character-table", "involution-decomposition", "gelfand-model"});
    return o;
}

Outcome dihedral_table()
{
    Outcome o;
    for (const auto& t : dihedral(3, 12)) require(o, t, {"involution-decomposition"});
    return o;
}

// chi_W from the closed forms over (bi)partitions, independent of the module.
long chi_w_closed(const CharacterTable& t, int i)
{
    const auto& a = t.alpha[i];
    const auto& b = t.beta[i];
    switch (t.type.family) {
    case Family::A: return 1;
    case Family::BC: return special_bc(a, b) ? 1L << d_stat(a, b) : 0;
    case Family::D: {
        if (t.split[i]) return 1;
        const bool ab = contained(a, b);
        if (!ab && !contained(b, a)) return 0;
        const auto& small = ab ? a : b;
        const auto& big = ab ? b : a;
        if (small == big || skew_has_2x2(small, big)) return 0;
        return 1L << (skew_components(small, big) - 1);
    }
    default: return -1;
    }
}

Outcome classical_oracles()
{
    Outcome o;
    for (const auto& type : classical(6, 5, 5)) {
        require(o, type, {"involution-decomposition", "gelfand-model"});
        auto g = CoxeterGroup::build(type);
        auto t = char_table(g);
        auto mult = decompose(g, module_character(InvolutionModule(g, Rational(0))), t);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (mult[i] != chi_w_closed(t, static_cast<int>(i))) o.fail(type.name() + " chi_W total at " + t.labels[i]);
    }
    std::vector<CoxeterType> rest = {CoxeterType::H3(), CoxeterType::H4()};
    for (const auto& t : dihedral(3, 12)) rest.push_back(t);
    for (const auto& t : rest) require(o, t, {"gelfand-model"});
    return o;
}

Outcome special_characters()
{
    Outcome o;
    for (int n = 0; n <= 10; ++n)
        for (const auto& b : bipartitions(n)) {
            if (special_bc(b.alpha, b.beta) != special_bc_symbol(b.alpha, b.beta)) o.fail("BC form " + to_string(b));
            bool d = special_d(b.alpha, b.beta);
            if (d != special_d_symbol(b.alpha, b.beta) || d != special_d_rows(b.alpha, b.beta)) o.fail("D form " + to_string(b));
        }
    long checked = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& b : bipartitions(n)) {
            if (!special_bc(b.alpha, b.beta)) continue;
            int rank = family_gamma_rank(SymbolKind::BC, symbol_singles(symbol_bc(b.alpha, b.beta, n)));
            if (d_stat(b.alpha, b.beta) != rank) o.fail("d != rank at " + to_string(b));
            ++checked;
        }
    if (o.ok) o.note = std::to_string(checked) + " special bipartitions";
    return o;
}

Outcome euler_transform()
{
    Outcome o;
    const long expected[] = {1, 4, 8, 21, 39, 92, 170, 360};
    auto e = mgamma_sn_euler(8);
    for (int n = 1; n <= 8; ++n) {
        if (e[n] != expected[n - 1]) o.fail("Euler transform at n = " + std::to_string(n));
        if (mgamma_sn_labeled(n) != expected[n - 1]) o.fail("labeled count at n = " + std::to_string(n));
        if (n <= 5 && static_cast<long>(mgamma_sym(n).elems.size()) != expected[n - 1]) o.fail("M(S_n) at n = " + std::to_string(n));
    }
    return o;
}

void fusion_ok(Outcome& o, const std::string& name, const FusionDatum& fd)
{
    auto r = verify_fusion_datum(fd);
    if (!r.ok()) o.fail(name + ": " + r.witness);
}

Outcome fusion_axioms()
{
    Outcome o;
    for (int k = 0; k <= 3; ++k) fusion_ok(o, "Z2^" + std::to_string(k), mgamma_datum(mgamma_z2(k)));
    for (int n = 1; n <= 4; ++n) fusion_ok(o, "S" + std::to_string(n), mgamma_datum(mgamma_sym(n)));
    for (int m = 3; m <= 12; ++m) fusion_ok(o, "D" + std::to_string(m), dihedral_datum(m));
    fusion_ok(o, "exceptional", exceptional_datum());
    return o;
}

Outcome epsilon()
{
    Outcome o;
    auto types = classical(6, 5, 5);
    for (const auto& t : dihedral(3, 12)) types.push_back(t);
    types.push_back(CoxeterType::H3());
    for (const auto& t : types) require(o, t, {"epsilon"});
    if (const char* path = std::getenv("COXFS_H4_DATA")) {
        ClaimOptions opt;
        opt.h4_data = path;
        require(o, CoxeterType::H4(), {"h4-big-family"}, false, opt);
    }
    return o;
}

Outcome fake_degree_transform()
{
    Outcome o;
    for (const auto& t : dihedral(3, 12)) require(o, t, {"fake-degree-transform"});
    return o;
}

Outcome cells()
{
    Outcome o;
    std::vector<CoxeterType> types = {CoxeterType::H3(),    CoxeterType::A(2),  CoxeterType::A(3),  CoxeterType::A(4),
                                      CoxeterType::BC(2),   CoxeterType::BC(3), CoxeterType::BC(4), CoxeterType::D(4)};
    for (const auto& t : dihedral(3, 12)) types.push_back(t);
    for (const auto& t : types) {
        std::vector<std::string> claims = {"left-cells", "kottwitz", "weak-kottwitz", "cell-intersections"};
        if (t.family == Family::I2 || t.family == Family::H3) claims.push_back("cell-fourier-fixed");
        require(o, t, claims);
    }
    return o;
}

// Each verifier must reject a seeded corruption.
Outcome negative_controls()
{
    Outcome o;
    auto expect_fail = [&](const std::string& name, const std::function<bool()>& passes) {
        bool p = true;
        try {
            p = passes();
        } catch (const CheckFailed&) {
            p = false;
        }
        if (p) o.fail(name + " accepted a corruption");
    };
    auto i5 = CoxeterGroup::build(CoxeterType::I2(5));
    auto t5 = char_table(i5);
    auto h3 = CoxeterGroup::build(CoxeterType::H3());
    auto th3 = char_table(h3);

    expect_fail("representation", [&] {
        InvolutionModule m(h3, Rational(1));
        auto col = m.action(0, 1);
        col[0].coeff = col[0].coeff + Rational(1);
        m.set_action(0, 1, col);
        return verify_representation(m).ok;
    });
    expect_fail("orthogonality", [&] {
        auto t = t5;
        t.chars[1][1] = t.chars[1][1] + Cyclo(1);
        return check_orthogonality(i5, t);
    });
    expect_fail("decomposition", [&] {
        auto f = trivial_character(h3);
        f[0] = Cyclo(2);
        decompose(h3, f, th3);
        return true;
    });
    expect_fail("commutability", [&] {
        auto fd = exceptional_datum();
        fd.f[2] = Cyclo(1);
        return verify_fusion_datum(fd).commutability;
    });
    expect_fail("positivity", [&] {
        auto fd = exceptional_datum();
        for (std::size_t i = 0; i < fd.m.rows(); ++i)
            for (std::size_t j = 0; j < fd.m.cols(); ++j) fd.m(i, j) = -fd.m(i, j);
        return verify_fusion_datum(fd).positivity;
    });
    expect_fail("modularity", [&] {
        auto fd = dihedral_datum(7);
        fd.m(1, 2) += Cyclo(Rational(1, 7));
        fd.m(2, 1) = fd.m(1, 2);
        return verify_fusion_datum(fd).modularity;
    });
    expect_fail("integrality", [&] {
        FusionDatum fd;
        fd.labels = {"x", "y"};
        fd.delta = {0, 1};
        fd.f = {Cyclo(1), Cyclo(1)};
        fd.m = CycloMatrix(2, 2);
        fd.m(0, 0) = Cyclo(Rational(3, 5));
        fd.m(0, 1) = fd.m(1, 0) = Cyclo(Rational(4, 5));
        fd.m(1, 1) = Cyclo(Rational(-3, 5));
        return verify_fusion_datum(fd).integrality;
    });

    auto u5 = build_uch(t5);
    auto m5 = assemble_fourier(u5);
    auto mult5 = uch_multiplicities(u5, decompose(i5, module_character(InvolutionModule(i5, Rational(0))), t5));
    expect_fail("epsilon", [&] {
        auto wrong = mult5;
        wrong[u5.index("phi2,1")] = 3;
        return !solve_epsilon(u5, m5, wrong).solutions.empty();
    });
    expect_fail("epsilon note", [&] {
        std::vector<int> eps(u5.size(), 1);
        return verify_all_note(u5, m5, eps, mult5);
    });
    expect_fail("fake degree transform", [&] {
        auto bad = u5;
        auto& d = *bad.members[bad.index("phi2,1")].degree;
        d = d + CycloPoly::monomial(Cyclo(1), 2);
        return verify_p1(bad, m5);
    });

    auto kl = KLTable::compute(h3);
    auto hc = compute_cells(kl, th3);
    expect_fail("cell relations", [&] {
        auto mats = cell_matrices(kl, hc[1].elements);
        mats[0][0][0] += 1;
        return cell_relations_hold(h3, mats);
    });
    expect_fail("cell census", [&] {
        auto bad = hc;
        bad.pop_back();
        return cell_census_check(h3, bad);
    });
    expect_fail("kottwitz", [&] {
        // L and L* carry the trivial and the sign character
        auto bad = hc;
        auto at = [&](const std::string& n) {
            return static_cast<std::size_t>(std::find_if(bad.begin(), bad.end(), [&](const CellData& c) { return c.name == n; }) - bad.begin());
        };
        std::size_t l = at("L"), ls = at("L*");
        std::swap(bad[l].character, bad[ls].character);
        std::swap(bad[l].mult, bad[ls].mult);
        return kottwitz_check(h3, bad).ok && weak_kottwitz_check(h3, bad) && cell_pair_check(h3, bad);
    });
    expect_fail("cell fourier", [&] {
        auto bad = hc;
        auto hu = build_uch(th3);
        std::fill(bad[1].mult.begin(), bad[1].mult.end(), 0);
        bad[1].mult[th3.index("phi4,3")] = 1;
        return verify_p3(hu, assemble_fourier(hu), bad);
    });
    expect_fail("h4 cell table", [&] {
        auto h4 = CoxeterGroup::build(CoxeterType::H4());
        auto rows = load_h4_cell_table(std::string(COXFS_DATA_DIR) + "/h4_left_cells.json");
        rows[0].involutions["ac"] += 1;
        return verify_h4_cell_table(h4, char_table(h4), rows);
    });
    expect_fail("h4 family ingest", [&] {
        auto path = (std::filesystem::temp_directory_path() / "coxfs_h4_asymmetric.json").string();
        std::ofstream(path) << R"js({"labels": ["a", "b"], "fourier_matrix": [["0","1"],["-1","0"]],
            "eigenvalues": ["1","1"], "provenance": "control"})js";
        load_h4_family(path);
        return true;
    });
    if (o.ok) o.note = "16 corruptions rejected";
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "involution module relations, k = 0, 1, 2", 120, representation},
        {2, "H3 involution classes and Gelfand model", 5, h3_decomposition},
        {3, "H4 involution classes", 600, h4_decomposition},
        {4, "I2(m) multiplicity table, m = 3..12", 5, dihedral_table},
        {5, "classical closed forms and Gelfand verdicts", 300, classical_oracles},
        {6, "special character criteria", 60, special_characters},
        {7, "Euler transform and M(S_n)", 10, euler_transform},
        {8, "fusion axioms", 120, fusion_axioms},
        {9, "epsilon unique with the stated values", 120, epsilon},
        {10, "M FakeDeg = Deg for I2(m)", 5, fake_degree_transform},
        {11, "left cells, Kottwitz identities, M v = v", 600, cells},
        {12, "negative controls", 60, negative_controls},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) o.fail("over the time limit");
        failed += !o.ok;
        char line[160];
        std::snprintf(line, sizeof line, "%s %2d  %-46s %8.2fs / %gs", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.limit_s);
        std::cout << line;
        if (!o.note.empty()) std::cout << "  " << o.note;
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed ? 1 : 0;
}
