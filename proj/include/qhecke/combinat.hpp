#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qhecke/laurent_poly.hpp"

namespace qhecke {

inline constexpr int kDefaultOracleCap = 14;

/// Parts in weakly decreasing order.
struct Partition {
    std::vector<int> parts;
};

/// overlined[i] marks parts[i]; only the first occurrence of a size may be overlined.
struct Overpartition {
    std::vector<int> parts;
    std::vector<bool> overlined;
};

enum class PartitionFilter { None, DistinctOddParts, DistinctOddSmallestEven };

std::vector<Partition> enum_partitions(int n, PartitionFilter filter = PartitionFilter::None);
std::vector<Overpartition> enum_overpartitions(int n);

int dyson_rank(const Partition& p);
/// ceil(largest / 2) - number of parts.
int m2_rank(const Partition& p);
int over_rank(const Overpartition& o);

enum class RankKind { N, NBar, N2 };

/// Rank distribution m -> count over the objects of size n. Throws
/// OracleCapExceeded when n > cap.
std::map<int, Integer> rank_distribution(RankKind kind, int n, int cap = kDefaultOracleCap);
Integer oracle_counts(RankKind kind, int m, int n, int cap = kDefaultOracleCap);

/// Smallest-part counts with multiplicity.
Integer spt_oracle(int n, int cap = kDefaultOracleCap);
/// Same over partitions with distinct odd parts and smallest part even.
Integer m2spt_oracle(int n, int cap = kDefaultOracleCap);

}  // namespace qhecke
