#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qhecke {

struct LatticePoint {
    std::int64_t m = 0;
    std::int64_t n = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

bool in_S1(const LatticePoint& p);  // n >= 2|m|
bool in_S2(const LatticePoint& p);  // n >= 3|m|

// Quadratic forms, doubled so they stay integral.
std::int64_t Q1_doubled(const LatticePoint& p);  // n^2 - 2m^2 + n
std::int64_t Q2_doubled(const LatticePoint& p);  // n^2 - 8m^2 + n

std::int64_t L11(const LatticePoint& p);
std::int64_t L12(const LatticePoint& p);
std::int64_t L21(const LatticePoint& p);
std::int64_t L22(const LatticePoint& p);

/// Milne's map S1 -> S2. Throws NotInRegion for points outside S1.
LatticePoint milne_T(const LatticePoint& p);

struct MilneReport {
    std::int64_t q_cap = 0;
    std::int64_t points_s1 = 0;
    std::int64_t points_s2 = 0;
    bool maps_into_s2 = true;
    bool injective = true;
    bool surjective = true;
    bool preserves_q = true;
    bool l_relations = true;
    bool parity = true;
    std::vector<std::string> counterexamples;  // first few only

    bool ok() const {
        return maps_into_s2 && injective && surjective && preserves_q && l_relations && parity;
    }
};

/// Exhaustive check over S1 points with Q1 <= q_cap and S2 points with Q2 <= q_cap.
MilneReport verify_milne(std::int64_t q_cap);

}  // namespace qhecke
