#include "coxfs/chartab.hpp"
#include "coxfs/classalg.hpp"
#include "coxfs/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace coxfs;

namespace {

std::multiset<std::string> as_strings(const std::vector<ClassFunction>& chars)
{
    std::multiset<std::string> out;
    for (const auto& f : chars) {
        std::string s;
        for (const auto& v : f) s += v.str() + ";";
        out.insert(s);
    }
    return out;
}

RatPoly q_int(int d)
{
    std::vector<Rational> c(d, Rational(1));
    return RatPoly(std::move(c));
}

void check_table(const CoxeterGroup& g, const CharacterTable& t)
{
    SCOPED_TRACE(g.type().name());
    ASSERT_EQ(static_cast<int>(t.size()), g.num_classes());
    EXPECT_TRUE(check_orthogonality(g, t));
    std::set<std::string> labels(t.labels.begin(), t.labels.end());
    EXPECT_EQ(labels.size(), t.size());

    RatPoly poincare(Rational(1)), sum;
    for (int d : g.degrees()) poincare = poincare * q_int(d);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& f = t.fake_degrees[i];
        EXPECT_EQ(f.eval(Rational(1)), Rational(t.degree(static_cast<int>(i)))) << t.labels[i];
        for (const auto& c : f.coeffs()) EXPECT_TRUE(c.is_integer() && c >= Rational(0));
        sum += f * RatPoly(Rational(t.degree(static_cast<int>(i))));
    }
    EXPECT_EQ(sum, poincare);
}

} // namespace

TEST(Chartab, SymmetricGroupSmall)
{
    EXPECT_EQ(mn_character({2, 1}, {2, 1}), 0);
    EXPECT_EQ(mn_character({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(mn_character({2, 1}, {3}), -1);
    EXPECT_EQ(mn_character({3, 2}, {1, 1, 1, 1, 1}), 5);
    EXPECT_EQ(mn_character({2, 2, 1}, {5}), 0);

    auto g = CoxeterGroup::build(CoxeterType::A(2));
    auto t = char_table(g);
    EXPECT_EQ(t.labels, (std::vector<std::string>{"(3)", "(2,1)", "(1,1,1)"}));
    int sigma1 = g.class_of(g.from_word({0}));
    EXPECT_TRUE(t.chars[t.index("(2,1)")][sigma1].is_zero());
}

TEST(Chartab, TypeAMatchesClassAlgebra)
{
    for (int n = 1; n <= 5; ++n) {
        auto g = CoxeterGroup::build(CoxeterType::A(n));
        auto t = char_table(g);
        check_table(g, t);
        EXPECT_EQ(as_strings(t.chars), as_strings(dixon_characters(class_algebra(g)))) << "A" << n;
    }
}

TEST(Chartab, TypeBCAndDMatchClassAlgebra)
{
    for (auto type : {CoxeterType::BC(2), CoxeterType::BC(3), CoxeterType::BC(4), CoxeterType::D(4), CoxeterType::D(5)}) {
        auto g = CoxeterGroup::build(type);
        auto t = char_table(g);
        check_table(g, t);
        EXPECT_EQ(as_strings(t.chars), as_strings(dixon_characters(class_algebra(g)))) << type.name();
    }
}

TEST(Chartab, BCLabelsAndSign)
{
    auto g = CoxeterGroup::build(CoxeterType::BC(2));
    auto t = char_table(g);
    ASSERT_EQ(t.size(), 5u);
    auto sgn = sign_character(g);
    EXPECT_EQ(t.chars[t.index("((),(1,1))")], sgn);
    EXPECT_EQ(t.chars[t.index("((2),())")], trivial_character(g));
    EXPECT_EQ(t.degree(t.index("((1),(1))")), 2);
    EXPECT_THROW(t.index("((3),())"), InvalidInput);
}

TEST(Chartab, DSplitLabels)
{
    auto g = CoxeterGroup::build(CoxeterType::D(4));
    auto t = char_table(g);
    EXPECT_EQ(t.size(), 13u);
    int splits = static_cast<int>(std::count_if(t.split.begin(), t.split.end(), [](int s) { return s != 0; }));
    EXPECT_EQ(splits, 4);
    EXPECT_NO_THROW(t.index("{(2)},1"));
    EXPECT_NO_THROW(t.index("{(1,1)},2"));
    EXPECT_EQ(t.degree(t.index("{(2)},1")), 3);
}

TEST(Chartab, Dihedral)
{
    for (int m : {3, 4, 5, 6, 8, 12}) {
        auto g = CoxeterGroup::build(CoxeterType::I2(m));
        auto t = char_table(g);
        check_table(g, t);
        EXPECT_EQ(as_strings(t.chars), as_strings(dixon_characters(class_algebra(g)))) << m;
        for (int k = 1; 2 * k < m; ++k) {
            std::vector<Rational> c(m - k + 1, Rational(0));
            c[k] += Rational(1);
            c[m - k] += Rational(1);
            EXPECT_EQ(t.fake_degrees[t.index("phi2," + std::to_string(k))], RatPoly(c));
        }
        EXPECT_EQ(t.fake_degrees[t.index("phi1," + std::to_string(m))], RatPoly::monomial(Rational(1), m));
    }
    auto g5 = CoxeterGroup::build(CoxeterType::I2(5));
    auto t5 = char_table(g5);
    std::vector<long> deg;
    for (std::size_t i = 0; i < t5.size(); ++i) deg.push_back(t5.degree(static_cast<int>(i)));
    EXPECT_EQ(deg, (std::vector<long>{1, 1, 2, 2}));
}

TEST(Chartab, H3)
{
    auto g = CoxeterGroup::build(CoxeterType::H3());
    auto t = char_table(g);
    check_table(g, t);
    std::multiset<long> deg;
    for (std::size_t i = 0; i < t.size(); ++i) deg.insert(t.degree(static_cast<int>(i)));
    EXPECT_EQ(deg, (std::multiset<long>{1, 1, 3, 3, 3, 3, 4, 4, 5, 5}));
    for (const char* l : {"phi1,0", "phi1,15", "phi3,1", "phi3,3", "phi3,6", "phi3,8", "phi4,3", "phi4,4", "phi5,2", "phi5,5"})
        EXPECT_NO_THROW(t.index(l)) << l;
    const auto& f43 = t.fake_degrees[t.index("phi4,3")];
    EXPECT_EQ(f43.valuation(), 3);
    std::vector<Rational> rev(f43.coeffs().rbegin(), f43.coeffs().rend());
    EXPECT_NE(RatPoly(rev) * RatPoly::monomial(Rational(1), f43.valuation()), f43);
    EXPECT_EQ(t.chars[t.index("phi1,15")], sign_character(g));
}

TEST(Chartab, H4)
{
    auto g = CoxeterGroup::build(CoxeterType::H4());
    auto t = char_table(g);
    check_table(g, t);
    EXPECT_EQ(t.size(), 34u);
    for (const char* l : {"phi1,0", "phi1,60", "phi30,10,12", "phi30,10,14", "phi24,6", "phi24,12", "phi48,9", "phi40,8"})
        EXPECT_NO_THROW(t.index(l)) << l;
    const auto& f = t.fake_degrees[t.index("phi30,10,12")];
    EXPECT_EQ(f.valuation(), 10);
    EXPECT_EQ(f.coeff(10), Rational(1));
    for (int e = 11; e < 12; ++e) EXPECT_TRUE(f.coeff(e).is_zero());
    EXPECT_FALSE(f.coeff(12).is_zero());
}

TEST(Chartab, InnerProducts)
{
    auto g = CoxeterGroup::build(CoxeterType::BC(3));
    auto t = char_table(g);
    auto reg = regular_character(g);
    auto m = decompose(g, reg, t);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(m[i], t.degree(static_cast<int>(i)));
    EXPECT_EQ(combine(t, m), reg);

    ClassFunction half = trivial_character(g);
    half[0] = Cyclo(Rational(1, 2));
    EXPECT_THROW(decompose(g, half, t), CheckFailed);
}
