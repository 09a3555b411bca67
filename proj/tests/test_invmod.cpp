#include "coxfs/errors.hpp"
#include "coxfs/invmod.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace coxfs;

namespace {

std::vector<long> mult_of(const CoxeterGroup& g, const CharacterTable& t, ElementId sigma)
{
    return decompose(g, class_character(g, sigma), t);
}

long mult(const CharacterTable& t, const std::vector<long>& m, const std::string& label) { return m[t.index(label)]; }

// Multiplicities of chi_W from brute-force traces of permutation-with-signs matrices, no sparse module.
std::vector<long> brute_chi_w(const CoxeterGroup& g, const CharacterTable& t)
{
    ClassFunction f;
    for (int c = 0; c < g.num_classes(); ++c) {
        ElementId x = g.class_rep(c);
        long tr = 0;
        // rho(x) a_w = +-a_{x w x^-1}; the sign is (-1)^{#sign flips}, and on fixed points it is the
        // product over the word of x. Track a_w through the generators.
        for (ElementId w : g.involutions()) {
            ElementId cur = w;
            int sign = 1;
            const auto& word = g.word(x);
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                int s = *it;
                ElementId sw = g.lmul(s, cur), ws = g.rmul(cur, s);
                if (sw == ws) {
                    if (g.length(ws) < g.length(cur)) sign = -sign;
                } else {
                    cur = g.rmul(sw, s);
                }
            }
            if (cur == w) tr += sign;
        }
        f.push_back(Cyclo(tr));
    }
    return decompose(g, f, t);
}

} // namespace

TEST(Invmod, Dimensions)
{
    auto h3 = CoxeterGroup::build(CoxeterType::H3());
    EXPECT_EQ(InvolutionModule(h3, Rational(0)).dim(), 32u);
    for (int m = 3; m <= 10; ++m) {
        auto g = CoxeterGroup::build(CoxeterType::I2(m));
        EXPECT_EQ(InvolutionModule(g, Rational(0)).dim(), static_cast<std::size_t>(m % 2 ? m + 1 : m + 2));
    }
    auto a2 = CoxeterGroup::build(CoxeterType::A(2));
    InvolutionModule m(a2, Rational(3));
    SparseVec e{{m.index_of(a2.identity()), Rational(1)}};
    SparseVec expect{{m.index_of(a2.identity()), Rational(1)}, {m.index_of(a2.from_word({0})), Rational(3)}};
    EXPECT_EQ(m.apply(0, e), expect);
}

TEST(Invmod, RepresentationRelations)
{
    for (auto type : {CoxeterType::BC(3), CoxeterType::H3(), CoxeterType::D(4), CoxeterType::I2(7), CoxeterType::A(4)})
        for (int k : {0, 1, 2, -3}) {
            auto g = CoxeterGroup::build(type);
            auto r = verify_representation(InvolutionModule(g, Rational(k)));
            EXPECT_TRUE(r.ok) << type.name() << " k=" << k << " " << r.witness;
        }
}

TEST(Invmod, CorruptedMatrixFails)
{
    auto g = CoxeterGroup::build(CoxeterType::BC(3));
    InvolutionModule m(g, Rational(0));
    auto col = m.action(1, 0);
    col[0].coeff = Rational(2);
    m.set_action(1, 0, col);
    auto r = verify_representation(m);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.witness.empty());
}

TEST(Invmod, CharacterIndependentOfK)
{
    for (auto type : {CoxeterType::BC(3), CoxeterType::H3(), CoxeterType::I2(6), CoxeterType::D(4)}) {
        auto g = CoxeterGroup::build(type);
        auto c0 = module_character(InvolutionModule(g, Rational(0)));
        EXPECT_EQ(c0, module_character(InvolutionModule(g, Rational(1)))) << type.name();
        EXPECT_EQ(c0, module_character(InvolutionModule(g, Rational(2)))) << type.name();
        EXPECT_EQ(c0[0], Cyclo(static_cast<long>(g.involutions().size())));
        EXPECT_TRUE(check_block_triangular(InvolutionModule(g, Rational(2)), InvolutionModule(g, Rational(0))));
    }
}

TEST(Invmod, SumOfClassCharacters)
{
    auto g = CoxeterGroup::build(CoxeterType::H3());
    auto t = char_table(g);
    auto total = decompose(g, module_character(InvolutionModule(g, Rational(0))), t);
    std::vector<long> sum(t.size(), 0);
    for (const auto& [name, sigma] : named_involutions(g)) {
        auto m = mult_of(g, t, sigma);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
    }
    EXPECT_EQ(sum, total);
    EXPECT_EQ(brute_chi_w(g, t), total);
}

TEST(Invmod, H3Decompositions)
{
    auto g = CoxeterGroup::build(CoxeterType::H3());
    auto t = char_table(g);
    auto named = named_involutions(g);
    ASSERT_EQ(named.size(), 4u);
    EXPECT_EQ(class_character(g, g.identity()), trivial_character(g));

    auto a = mult_of(g, t, g.from_word_string("a"));
    auto ac = mult_of(g, t, g.from_word_string("ac"));
    auto w0 = mult_of(g, t, g.from_word_string("(abc)^5"));
    for (const char* l : {"phi3,1", "phi3,3", "phi4,3", "phi5,5"}) EXPECT_EQ(mult(t, a, l), 1) << l;
    EXPECT_EQ(std::accumulate(a.begin(), a.end(), 0L), 4);
    for (const char* l : {"phi3,6", "phi3,8", "phi4,4", "phi5,2"}) EXPECT_EQ(mult(t, ac, l), 1) << l;
    EXPECT_EQ(std::accumulate(ac.begin(), ac.end(), 0L), 4);
    EXPECT_EQ(mult(t, w0, "phi1,15"), 1);
    EXPECT_EQ(std::accumulate(w0.begin(), w0.end(), 0L), 1);

    auto total = decompose(g, module_character(InvolutionModule(g, Rational(0))), t);
    EXPECT_TRUE(is_gelfand_model(total));
}

TEST(Invmod, H4Decompositions)
{
    auto g = CoxeterGroup::build(CoxeterType::H4());
    auto t = char_table(g);
    EXPECT_EQ(mult_of(g, t, g.from_word_string("(abcd)^15"))[t.index("phi1,60")], 1);
    auto ac = mult_of(g, t, g.from_word_string("ac"));
    EXPECT_EQ(mult(t, ac, "phi24,6"), 2);
    EXPECT_EQ(mult(t, ac, "phi24,12"), 2);
    EXPECT_EQ(mult(t, ac, "phi30,10,12"), 2);
    EXPECT_EQ(mult(t, ac, "phi9,2"), 1);
    EXPECT_EQ(mult(t, ac, "phi40,8"), 2);
    auto total = decompose(g, module_character(InvolutionModule(g, Rational(0))), t);
    EXPECT_FALSE(is_gelfand_model(total));
}

TEST(Invmod, DihedralTable)
{
    // chi_W multiplicities by m mod 4
    for (int m = 3; m <= 12; ++m) {
        auto g = CoxeterGroup::build(CoxeterType::I2(m));
        auto t = char_table(g);
        auto total = decompose(g, module_character(InvolutionModule(g, Rational(0))), t);
        EXPECT_EQ(is_gelfand_model(total), m % 2 == 1) << m;
        if (m % 2) continue;
        for (int k = 1; 2 * k < m; ++k) {
            long expect = k % 2 ? 2 : 0;
            EXPECT_EQ(mult(t, total, "phi2," + std::to_string(k)), expect) << m << " " << k;
        }
        std::string h = std::to_string(m / 2);
        long pq = m % 4 == 2 ? 1 : 0;
        EXPECT_EQ(mult(t, total, "phi'1," + h) + mult(t, total, "phi''1," + h), 2 * pq) << m;
    }
    auto g6 = CoxeterGroup::build(CoxeterType::I2(6));
    auto t6 = char_table(g6);
    auto total6 = decompose(g6, module_character(InvolutionModule(g6, Rational(0))), t6);
    EXPECT_EQ(mult(t6, total6, "phi2,1"), 2);
    EXPECT_EQ(mult(t6, total6, "phi2,2"), 0);
}

TEST(Invmod, SmallExamples)
{
    auto a2 = CoxeterGroup::build(CoxeterType::A(2));
    auto t = char_table(a2);
    auto m = mult_of(a2, t, sigma_m(a2, 1));
    EXPECT_EQ(m, (std::vector<long>{0, 1, 1}));

    auto a3 = CoxeterGroup::build(CoxeterType::A(3));
    auto t3 = char_table(a3);
    auto m3 = mult_of(a3, t3, sigma_m(a3, 2));
    // both (2,2) and (1,1,1,1) have no odd column
    EXPECT_EQ(mult(t3, m3, "(2,2)"), 1);
    EXPECT_EQ(mult(t3, m3, "(1,1,1,1)"), 1);
    EXPECT_EQ(std::accumulate(m3.begin(), m3.end(), 0L), 2);
    EXPECT_TRUE(is_gelfand_model(decompose(a3, module_character(InvolutionModule(a3, Rational(0))), t3)));

    auto b2 = CoxeterGroup::build(CoxeterType::BC(2));
    auto tb = char_table(b2);
    auto total = decompose(b2, module_character(InvolutionModule(b2, Rational(0))), tb);
    EXPECT_EQ(mult(tb, total, "((1),(1))"), 2);
}

TEST(Invmod, ClosedFormsMatch)
{
    std::vector<CoxeterType> types;
    for (int n = 1; n <= 6; ++n) types.push_back(CoxeterType::A(n));
    for (int n = 2; n <= 5; ++n) types.push_back(CoxeterType::BC(n));
    for (int n = 3; n <= 5; ++n) types.push_back(CoxeterType::D(n));
    for (const auto& type : types) {
        auto g = CoxeterGroup::build(type);
        auto t = char_table(g);
        std::vector<long> total(t.size(), 0);
        for (const auto& [label, sigma] : named_involutions(g)) {
            auto m = mult_of(g, t, sigma);
            for (std::size_t i = 0; i < t.size(); ++i) {
                EXPECT_EQ(m[i], kottwitz_multiplicity(type, label, t, static_cast<int>(i)))
                    << type.name() << " " << label << " " << t.labels[i];
                total[i] += m[i];
            }
        }
        EXPECT_EQ(total, decompose(g, module_character(InvolutionModule(g, Rational(0))), t)) << type.name();
    }
    auto h3 = CoxeterGroup::build(CoxeterType::H3());
    EXPECT_THROW(kottwitz_multiplicity(h3.type(), "a", char_table(h3), 0), InvalidInput);
}

TEST(Invmod, NamedInvolutionsCoverClasses)
{
    for (auto type : {CoxeterType::A(5), CoxeterType::BC(4), CoxeterType::D(4), CoxeterType::D(6), CoxeterType::I2(8),
                      CoxeterType::H3(), CoxeterType::H4()}) {
        auto g = CoxeterGroup::build(type, 50000);
        std::set<int> classes, expected;
        for (const auto& [name, s] : named_involutions(g)) {
            EXPECT_TRUE(g.is_involution(s)) << name;
            classes.insert(g.class_of(s));
        }
        for (ElementId w : g.involutions()) expected.insert(g.class_of(w));
        EXPECT_EQ(classes, expected) << type.name();
        EXPECT_EQ(classes.size(), named_involutions(g).size()) << type.name();
    }
}

TEST(Invmod, RestrictionFromBCDiffers)
{
    // rho_{BC_n} restricted to D_n on Invol(D_n) against rho_{D_n}
    for (int n : {3, 4}) {
        auto b = CoxeterGroup::build(CoxeterType::BC(n));
        auto d = CoxeterGroup::build(CoxeterType::D(n));
        InvolutionModule mb(b, Rational(0));
        std::vector<int> dpos(mb.dim(), -1);
        std::vector<bool> in_d(mb.dim(), false);
        for (std::size_t i = 0; i < mb.dim(); ++i) in_d[i] = d.from_points(b.points(mb.basis()[i])).has_value();
        ClassFunction res;
        for (int c = 0; c < d.num_classes(); ++c) {
            ElementId x = *b.from_points(d.points(d.class_rep(c)));
            Rational tr(0);
            for (std::size_t i = 0; i < mb.dim(); ++i) {
                if (!in_d[i]) continue;
                auto v = mb.apply_word(b.word(x), {{static_cast<int>(i), Rational(1)}});
                if (auto it = v.find(static_cast<int>(i)); it != v.end()) tr += it->second;
            }
            res.push_back(Cyclo(tr));
        }
        EXPECT_NE(res, module_character(InvolutionModule(d, Rational(0)))) << n;
    }
}

TEST(Invmod, Hecke)
{
    for (auto type : {CoxeterType::I2(5), CoxeterType::BC(2), CoxeterType::A(3), CoxeterType::H3(), CoxeterType::D(4)}) {
        auto g = CoxeterGroup::build(type);
        auto r = hecke_relations_check(g);
        EXPECT_TRUE(r.ok) << type.name() << " " << r.witness;
        EXPECT_TRUE(hecke_specializes_to_k2(g)) << type.name();
    }
}

TEST(Invmod, SigmaPrimeIsConjugateUnderBC)
{
    auto d = CoxeterGroup::build(CoxeterType::D(4));
    auto b = CoxeterGroup::build(CoxeterType::BC(4));
    ElementId s0 = sigma_klm(d, 0, 0, 2), s1 = sigma_prime(d);
    EXPECT_NE(d.class_of(s0), d.class_of(s1));
    EXPECT_EQ(b.class_of(*b.from_points(d.points(s0))), b.class_of(*b.from_points(d.points(s1))));
    EXPECT_THROW(sigma_klm(d, 1, 1, 1), InvalidInput);
}
