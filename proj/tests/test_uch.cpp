#include "coxfs/uch.hpp"

#include "coxfs/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace coxfs;

namespace {

struct Built {
    explicit Built(const CoxeterType& type) : g(CoxeterGroup::build(type)), t(char_table(g)), u(build_uch(t)) {}
    CoxeterGroup g;
    CharacterTable t;
    UchSet u;
};

UchSet uch_of(const CoxeterType& type) { return build_uch(char_table(CoxeterGroup::build(type))); }

void check_family_invariants(const UchSet& u)
{
    std::vector<int> seen(u.size(), 0);
    for (std::size_t f = 0; f < u.families.size(); ++f) {
        const auto& fam = u.families[f];
        int specials = 0;
        for (int m : fam.members) {
            ++seen[m];
            EXPECT_EQ(u.members[m].family, static_cast<int>(f));
            specials += u.members[m].special;
        }
        EXPECT_EQ(specials, 1);
        ASSERT_GE(fam.special, 0);
        EXPECT_GE(u.members[fam.special].irr, 0);
        // the special member has the strictly smallest b-value among Irr members of its family
        int b0 = u.members[fam.special].fake_degree.valuation();
        for (int m : fam.members)
            if (m != fam.special && u.members[m].irr >= 0) EXPECT_GT(u.members[m].fake_degree.valuation(), b0) << u.members[m].label;
    }
    for (int s : seen) EXPECT_EQ(s, 1);
}

} // namespace

TEST(Uch, DihedralSizes)
{
    for (auto [m, size] : {std::pair{3, 3}, {4, 6}, {5, 6}, {6, 10}, {7, 11}, {8, 16}}) {
        auto u = uch_of(CoxeterType::I2(m));
        EXPECT_EQ(static_cast<int>(u.size()), size) << m;
        EXPECT_EQ(u.families.size(), 3u);
        check_family_invariants(u);
    }
}

TEST(Uch, DihedralDegrees)
{
    for (int m = 3; m <= 12; ++m) {
        Built b(CoxeterType::I2(m));
        const auto& t = b.t;
        const auto& u = b.u;
        for (const auto& c : u.members) {
            ASSERT_TRUE(c.degree.has_value()) << c.label;
            Cyclo at1 = c.degree->eval(Cyclo(1));
            EXPECT_EQ(at1, Cyclo(c.irr >= 0 ? t.degree(c.irr) : 0)) << m << " " << c.label;
            for (const auto& k : c.degree->coeffs()) EXPECT_TRUE(k.is_real()) << c.label;
        }
        if (m == 5) {
            const auto& c = u.members[u.index("Phi(1,2)")];
            EXPECT_EQ(c.eig, Cyclo::zeta(5, 3));
            EXPECT_EQ(c.degree->valuation(), 1);
        }
    }
}

TEST(Uch, DihedralDeltaAndJ)
{
    Built b(CoxeterType::I2(12));
    const auto& g = b.g;
    const auto& t = b.t;
    const auto& u = b.u;
    auto d = delta_involution(u);
    // Eig(Phi(2,3)) = Eig(Phi(2,9)) = -1, yet Delta still swaps them
    EXPECT_EQ(d[u.index("Phi(2,3)")], u.index("Phi(2,9)"));
    EXPECT_EQ(d[u.index("Phi(1,6)")], u.index("Phi(1,6)"));
    EXPECT_EQ(d[u.index("Phi(1,2)")], u.index("Phi(1,10)"));
    EXPECT_EQ(d[u.index("Phi(3,4)")], u.index("Phi(3,8)"));
    auto j = j_involution(g, u, t);
    for (std::size_t a = 0; a < u.size(); ++a) {
        EXPECT_EQ(j[j[a]], static_cast<int>(a));
        EXPECT_EQ(d[d[a]], static_cast<int>(a));
        EXPECT_EQ(u.members[j[a]].family, u.members[a].family);
        EXPECT_EQ(u.members[d[a]].family, u.members[a].family);
    }
}

TEST(Uch, H3)
{
    Built b(CoxeterType::H3());
    const auto& g = b.g;
    const auto& t = b.t;
    const auto& u = b.u;
    EXPECT_EQ(u.size(), 16u);
    EXPECT_EQ(u.families.size(), 7u);
    check_family_invariants(u);
    int formal = static_cast<int>(std::count_if(u.members.begin(), u.members.end(), [](const auto& c) { return c.irr < 0; }));
    EXPECT_EQ(formal, 6);

    auto d = delta_involution(u);
    EXPECT_EQ(d[u.index("Phi(s,1)")], u.index("Phi(s,sgn)"));
    EXPECT_EQ(d[u.index("Phi(1,2)/phi3,1")], u.index("Phi(1,3)/phi3,1"));
    EXPECT_EQ(d[u.index("phi4,3")], u.index("phi4,3"));

    auto j = j_involution(g, u, t);
    EXPECT_EQ(j[u.index("phi4,3")], u.index("phi4,4"));
    for (std::size_t a = 0; a < u.size(); ++a) {
        EXPECT_EQ(j[j[a]], static_cast<int>(a));
        if (u.members[a].irr < 0) EXPECT_EQ(j[a], static_cast<int>(a));
        if (u.members[a].irr >= 0 && u.members[a].label != "phi4,3" && u.members[a].label != "phi4,4")
            EXPECT_EQ(j[a], static_cast<int>(a)) << u.members[a].label;
    }
    EXPECT_FALSE(is_palindromic(t.fake_degrees[t.index("phi4,3")]));
    EXPECT_TRUE(is_palindromic(t.fake_degrees[t.index("phi3,1")]));
}

TEST(Uch, ClassicalFamilies)
{
    auto bc2 = uch_of(CoxeterType::BC(2));
    check_family_invariants(bc2);
    ASSERT_EQ(bc2.families.size(), 3u);
    int big = bc2.members[bc2.index("((1),(1))")].family;
    EXPECT_EQ(bc2.families[big].members.size(), 3u);
    EXPECT_EQ(bc2.families[big].full_size, 4);
    EXPECT_EQ(bc2.families[big].gamma, "Z2^1");

    for (auto type : {CoxeterType::A(4), CoxeterType::BC(4), CoxeterType::D(4), CoxeterType::D(5)}) {
        SCOPED_TRACE(type.name());
        auto u = uch_of(type);
        check_family_invariants(u);
        for (const auto& fam : u.families) EXPECT_LE(static_cast<int>(fam.members.size()), fam.full_size);
    }
    auto a4 = uch_of(CoxeterType::A(4));
    EXPECT_EQ(a4.families.size(), a4.size());
    EXPECT_THROW(uch_of(CoxeterType::H4()), InvalidInput);
}

TEST(Uch, MGammaSizes)
{
    std::vector<std::size_t> sym = {1, 4, 8, 21, 39};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(mgamma_sym(n).elems.size(), sym[n - 1]) << n;
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(mgamma_z2(k).elems.size(), std::size_t(1) << (2 * k));
    auto s2 = mgamma_sym(2);
    std::vector<std::string> labels;
    for (const auto& e : s2.elems) labels.push_back(e.label);
    EXPECT_EQ(labels, (std::vector<std::string>{"(1,1)", "(1,chi1)", "(2,1)", "(2,chi1)"}));
    EXPECT_EQ(s2.elems[3].t, Cyclo(-1));
    EXPECT_THROW(mgamma_sym(6), InvalidInput);
    EXPECT_THROW(mgamma_z2(5), InvalidInput);
}
