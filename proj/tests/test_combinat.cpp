#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "qhecke/combinat.hpp"
#include "qhecke/errors.hpp"

using namespace qhecke;

TEST(Combinat, PartitionCounts) {
    const auto p = oracle::partition_numbers(20);
    for (int n = 0; n <= 20; ++n) EXPECT_EQ(Integer(enum_partitions(n).size()), p[n]) << n;
}

TEST(Combinat, OverpartitionCounts) {
    const auto gf = oracle::mul(oracle::product(1, 1, 1, 14), oracle::inv_product(-1, 1, 1, 14));
    for (int n = 0; n <= 14; ++n) EXPECT_EQ(Integer(enum_overpartitions(n).size()), gf[n]) << n;
    EXPECT_EQ(enum_overpartitions(4).size(), 14u);
}

TEST(Combinat, FilteredCounts) {
    // distinct odd parts: (-q;q^2)_inf / (q^2;q^2)_inf
    const auto gf = oracle::mul(oracle::product(1, 1, 2, 16), oracle::inv_product(-1, 2, 2, 16));
    for (int n = 0; n <= 16; ++n) {
        EXPECT_EQ(Integer(enum_partitions(n, PartitionFilter::DistinctOddParts).size()), gf[n]);
    }
    for (const auto& p : enum_partitions(12, PartitionFilter::DistinctOddSmallestEven)) {
        ASSERT_FALSE(p.parts.empty());
        EXPECT_EQ(p.parts.back() % 2, 0);
    }
}

TEST(Combinat, Ranks) {
    EXPECT_EQ(dyson_rank({{4}}), 3);
    EXPECT_EQ(dyson_rank({{2, 1, 1}}), -1);
    EXPECT_EQ(dyson_rank({{}}), 0);
    EXPECT_EQ(m2_rank({{1}}), 0);
    EXPECT_EQ(m2_rank({{5, 2}}), 1);
    EXPECT_EQ(m2_rank({{4, 4, 1}}), -1);
    EXPECT_EQ(over_rank({{3, 1}, {true, false}}), 1);
}

TEST(Combinat, RankDistributionProperties) {
    const auto p = oracle::partition_numbers(14);
    for (int n = 1; n <= 14; ++n) {
        const auto d = rank_distribution(RankKind::N, n);
        Integer total = 0;
        for (const auto& [m, c] : d) {
            total += c;
            auto it = d.find(-m);
            ASSERT_NE(it, d.end());
            EXPECT_EQ(it->second, c);
        }
        EXPECT_EQ(total, p[n]);
    }
    EXPECT_EQ(oracle_counts(RankKind::N, 3, 4), 1);
    EXPECT_EQ(oracle_counts(RankKind::N, 2, 4), 0);
    EXPECT_EQ(oracle_counts(RankKind::NBar, 0, 1), 2);
}

TEST(Combinat, OracleCap) {
    EXPECT_THROW(rank_distribution(RankKind::N, 15), OracleCapExceeded);
    EXPECT_NO_THROW(rank_distribution(RankKind::N, 15, 15));
    EXPECT_THROW(spt_oracle(20), OracleCapExceeded);
}

TEST(Combinat, SptValues) {
    const std::vector<int> expected = {1, 3, 5, 10, 14, 26};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(spt_oracle(n), expected[n - 1]);
    EXPECT_EQ(m2spt_oracle(1), 0);
    EXPECT_EQ(m2spt_oracle(2), 1);
}

TEST(Combinat, HandEnumerations) {
    EXPECT_EQ(enum_partitions(4).size(), 5u);
    ASSERT_EQ(enum_partitions(0).size(), 1u);
    EXPECT_TRUE(enum_partitions(0)[0].parts.empty());
    std::set<std::vector<int>> odd3;
    for (const auto& p : enum_partitions(3, PartitionFilter::DistinctOddParts)) odd3.insert(p.parts);
    EXPECT_EQ(odd3, (std::set<std::vector<int>>{{3}, {2, 1}}));
    EXPECT_EQ(dyson_rank({{2, 2}}), 0);
    EXPECT_EQ(oracle_counts(RankKind::N, 0, 4), 1);
    EXPECT_EQ(oracle_counts(RankKind::N2, 0, 1), 1);
    EXPECT_EQ(spt_oracle(4), 10);
}
