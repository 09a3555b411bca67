#include "coxfs/combinat.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace coxfs;

namespace {

// A family of D_n: unordered pairs with alpha != beta grouped by symbol entries.
std::vector<std::pair<Partition, Partition>> unordered_pairs(int n)
{
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& b : bipartitions(n))
        if (b.alpha > b.beta) out.push_back({b.alpha, b.beta});
    return out;
}

} // namespace

TEST(Combinat, PartitionCounts)
{
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(static_cast<int>(partitions(n).size()), p[n]);
    EXPECT_EQ(partitions(3).front(), (Partition{3}));
    EXPECT_EQ(partitions(3).back(), (Partition{1, 1, 1}));
    EXPECT_EQ(bipartitions(2).size(), 5u);
}

TEST(Combinat, TransposeIntersectContain)
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& a : partitions(n)) {
            EXPECT_EQ(transpose(transpose(a)), a);
            EXPECT_EQ(size(transpose(a)), n);
        }
    for (const auto& b : bipartitions(6)) {
        int s = 0;
        for (int i = 1; i <= 6; ++i) s += std::min(part(b.alpha, i), part(b.beta, i));
        EXPECT_EQ(size(intersect(b.alpha, b.beta)), s);
        if (contained(b.alpha, b.beta) && contained(b.beta, b.alpha)) EXPECT_EQ(b.alpha, b.beta);
    }
    EXPECT_EQ(odd_columns({2, 1}), 1);
    EXPECT_EQ(odd_columns({2, 2}), 0);
}

TEST(Combinat, DStatExamples)
{
    EXPECT_EQ(d_stat({1}, {1}), 1);
    EXPECT_EQ(d_stat({2}, {}), 0);
    EXPECT_EQ(d_stat({2, 1}, {2, 1}), 2);
}

TEST(Combinat, DStatFormsAgreeOnSpecials)
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& b : bipartitions(n)) {
            if (!special_bc(b.alpha, b.beta)) continue;
            EXPECT_EQ(d_stat(b.alpha, b.beta), d_stat_rows(b.alpha, b.beta)) << to_string(b);
            Symbol s = symbol_bc(b.alpha, b.beta, n);
            EXPECT_EQ(d_stat(b.alpha, b.beta), symbol_bottom_only(s)) << to_string(b);
        }
}

TEST(Combinat, SkewStatistics)
{
    EXPECT_EQ(skew_components({5, 4, 1}, {7, 5, 2, 2}), 3);
    EXPECT_EQ(skew_components({2, 1}, {2, 1, 1}), 1);
    EXPECT_EQ(f_stat({2, 1}, {2, 1, 1}), 1);
    EXPECT_EQ(skew_components({}, {2, 2}), 1);
    EXPECT_TRUE(skew_has_2x2({}, {2, 2}));
    EXPECT_FALSE(skew_has_2x2({1}, {2, 2}));
    EXPECT_THROW(skew_components({3}, {2, 1}), std::invalid_argument);
}

TEST(Combinat, EStatMatchesSymbolCount)
{
    // for special alpha inside beta the component count equals the bottom-only symbol entries
    for (int n = 1; n <= 9; ++n)
        for (const auto& b : bipartitions(n)) {
            if (b.alpha == b.beta || !contained(b.alpha, b.beta) || !special_d(b.alpha, b.beta)) continue;
            Symbol s = symbol_d(b.alpha, b.beta, n);
            EXPECT_EQ(skew_components(b.alpha, b.beta), symbol_bottom_only(s)) << to_string(b);
        }
}

TEST(Combinat, SpecialExamples)
{
    EXPECT_TRUE(special_bc({1}, {1}));
    EXPECT_FALSE(special_bc({}, {2}));
    EXPECT_TRUE(special_bc({2}, {}));
    EXPECT_TRUE(special_d({1}, {2, 1}));
    EXPECT_FALSE(special_d({}, {2, 2}));
    EXPECT_FALSE(special_d({2}, {1, 1}));
}

TEST(Combinat, SpecialFormsEquivalent)
{
    for (int n = 0; n <= 10; ++n)
        for (const auto& b : bipartitions(n)) {
            bool bc = special_bc(b.alpha, b.beta);
            EXPECT_EQ(bc, special_bc_symbol(b.alpha, b.beta)) << to_string(b);
            bool d = special_d(b.alpha, b.beta);
            EXPECT_EQ(d, special_d_symbol(b.alpha, b.beta)) << to_string(b);
            EXPECT_EQ(d, special_d_rows(b.alpha, b.beta)) << to_string(b);
        }
}

TEST(Combinat, SymbolShape)
{
    Symbol s = symbol_bc({1}, {1}, 2);
    EXPECT_EQ(s.top, (std::vector<int>{0, 1, 3}));
    EXPECT_EQ(s.bottom, (std::vector<int>{0, 2}));
    EXPECT_EQ(symbol_singles(s), 3);
    EXPECT_THROW(symbol_d({1, 1, 1}, {}, 2), std::invalid_argument);
}

TEST(Combinat, BcFamilies)
{
    for (int n = 1; n <= 8; ++n) {
        std::map<std::vector<int>, std::vector<Bipartition>> fam;
        for (const auto& b : bipartitions(n)) fam[symbol_entries(symbol_bc(b.alpha, b.beta, n))].push_back(b);
        for (const auto& [key, members] : fam) {
            int singles = symbol_singles(symbol_bc(members[0].alpha, members[0].beta, n));
            EXPECT_EQ(static_cast<long>(members.size()), family_irr_count(SymbolKind::BC, singles));
            int specials = 0;
            for (const auto& b : members)
                if (special_bc(b.alpha, b.beta)) {
                    ++specials;
                    EXPECT_EQ(d_stat(b.alpha, b.beta), family_gamma_rank(SymbolKind::BC, singles)) << to_string(b);
                }
            EXPECT_EQ(specials, 1);
        }
    }
    // B2: ((1),(1)), ((1,1),()), ((),(2)) form one family with k = 1
    std::map<std::vector<int>, int> sizes;
    for (const auto& b : bipartitions(2)) ++sizes[symbol_entries(symbol_bc(b.alpha, b.beta, 2))];
    EXPECT_EQ(sizes[symbol_entries(symbol_bc({1}, {1}, 2))], 3);
    EXPECT_EQ(sizes[symbol_entries(symbol_bc({2}, {}, 2))], 1);
}

TEST(Combinat, DFamilies)
{
    for (int n = 2; n <= 8; ++n) {
        std::map<std::vector<int>, std::vector<std::pair<Partition, Partition>>> fam;
        for (const auto& [a, b] : unordered_pairs(n)) fam[symbol_entries(symbol_d(a, b, n))].push_back({a, b});
        for (const auto& [key, members] : fam) {
            int singles = symbol_singles(symbol_d(members[0].first, members[0].second, n));
            EXPECT_EQ(static_cast<long>(members.size()), family_irr_count(SymbolKind::D, singles));
            int specials = 0;
            for (const auto& [a, b] : members)
                if (special_d(a, b)) {
                    ++specials;
                    const auto& small = contained(a, b) ? a : b;
                    const auto& big = contained(a, b) ? b : a;
                    EXPECT_EQ(skew_components(small, big) - 1, family_gamma_rank(SymbolKind::D, singles));
                }
            EXPECT_EQ(specials, 1);
        }
    }
}

TEST(Combinat, MGammaSn)
{
    const long expected[] = {1, 4, 8, 21, 39, 92, 170, 360};
    auto e = mgamma_sn_euler(8);
    EXPECT_EQ(e[0], 1);
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(e[n], expected[n - 1]);
        EXPECT_EQ(mgamma_sn_labeled(n), expected[n - 1]);
    }
}
