#include "qhecke/combinat.hpp"

#include <algorithm>
#include <string>

#include "qhecke/errors.hpp"

namespace qhecke {

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back({cur});
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        generate(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

bool distinct_odd(const Partition& p) {
    for (std::size_t i = 1; i < p.parts.size(); ++i) {
        if (p.parts[i] == p.parts[i - 1] && p.parts[i] % 2 == 1) return false;
    }
    return true;
}

void check_cap(int n, int cap) {
    if (n > cap) {
        throw OracleCapExceeded("oracle size " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
    }
}

int smallest_multiplicity(const Partition& p) {
    if (p.parts.empty()) return 0;
    const int s = p.parts.back();
    int k = 0;
    for (int x : p.parts) k += (x == s);
    return k;
}

}  // namespace

std::vector<Partition> enum_partitions(int n, PartitionFilter filter) {
    std::vector<Partition> all;
    if (n < 0) return all;
    std::vector<int> cur;
    generate(n, n, cur, all);
    if (filter == PartitionFilter::None) return all;
    std::vector<Partition> out;
    for (auto& p : all) {
        if (!distinct_odd(p)) continue;
        if (filter == PartitionFilter::DistinctOddSmallestEven &&
            (p.parts.empty() || p.parts.back() % 2 != 0)) {
            continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Overpartition> enum_overpartitions(int n) {
    std::vector<Overpartition> out;
    for (const auto& p : enum_partitions(n)) {
        std::vector<std::size_t> firsts;
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            if (i == 0 || p.parts[i] != p.parts[i - 1]) firsts.push_back(i);
        }
        const std::size_t combos = std::size_t(1) << firsts.size();
        for (std::size_t mask = 0; mask < combos; ++mask) {
            Overpartition o{p.parts, std::vector<bool>(p.parts.size(), false)};
            for (std::size_t b = 0; b < firsts.size(); ++b) {
                if (mask & (std::size_t(1) << b)) o.overlined[firsts[b]] = true;
            }
            out.push_back(std::move(o));
        }
    }
    return out;
}

int dyson_rank(const Partition& p) {
    if (p.parts.empty()) return 0;
    return p.parts.front() - static_cast<int>(p.parts.size());
}

int m2_rank(const Partition& p) {
    if (p.parts.empty()) return 0;
    return (p.parts.front() + 1) / 2 - static_cast<int>(p.parts.size());
}

int over_rank(const Overpartition& o) {
    if (o.parts.empty()) return 0;
    return o.parts.front() - static_cast<int>(o.parts.size());
}

std::map<int, Integer> rank_distribution(RankKind kind, int n, int cap) {
    check_cap(n, cap);
    std::map<int, Integer> dist;
    switch (kind) {
        case RankKind::N:
            for (const auto& p : enum_partitions(n)) dist[dyson_rank(p)] += 1;
            break;
        case RankKind::NBar:
            for (const auto& o : enum_overpartitions(n)) dist[over_rank(o)] += 1;
            break;
        case RankKind::N2:
            for (const auto& p : enum_partitions(n, PartitionFilter::DistinctOddParts)) {
                dist[m2_rank(p)] += 1;
            }
            break;
    }
    return dist;
}

Integer oracle_counts(RankKind kind, int m, int n, int cap) {
    const auto dist = rank_distribution(kind, n, cap);
    auto it = dist.find(m);
    return it == dist.end() ? Integer(0) : it->second;
}

Integer spt_oracle(int n, int cap) {
    check_cap(n, cap);
    Integer total = 0;
    for (const auto& p : enum_partitions(n)) total += smallest_multiplicity(p);
    return total;
}

Integer m2spt_oracle(int n, int cap) {
    check_cap(n, cap);
    Integer total = 0;
    for (const auto& p : enum_partitions(n, PartitionFilter::DistinctOddSmallestEven)) {
        total += smallest_multiplicity(p);
    }
    return total;
}

}  // namespace qhecke
