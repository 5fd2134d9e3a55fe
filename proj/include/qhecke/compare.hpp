#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qhecke/qseries.hpp"

namespace qhecke {

/// Smallest differing (q-power, z-power) between two series.
/// index carries the family parameter (n or k) for parametrised identities.
struct Mismatch {
    int q_power = 0;
    Exponent z_power = 0;
    Integer lhs = 0;
    Integer rhs = 0;
    std::optional<std::int64_t> index;
};

/// Compares coefficients up to the smaller of the two orders.
std::optional<Mismatch> first_mismatch(const QSeries& lhs, const QSeries& rhs);

std::string describe(const Mismatch& m);

}  // namespace qhecke
