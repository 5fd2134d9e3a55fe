#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qhecke/compare.hpp"
#include "qhecke/qseries.hpp"

namespace qhecke {

// The Bailey parameter a occupies the Laurent variable slot.

using BaileySequence = std::function<QSeries(int n, Order N)>;

struct BaileyPair {
    std::string name;
    BaileySequence alpha;
    BaileySequence beta;
    bool cleared_by_one_minus_a = false;
};

struct BaileyReport {
    std::string check;
    bool ok = true;
    std::optional<Mismatch> mismatch;  // index holds n (or k)
};

/// Throws VerificationFailed carrying the first offending (n, q-power, a-power).
void require(const BaileyReport& r);

/// alpha_0 = 1, alpha_n = a^n q^{n^2+n} - a^{n-1} q^{n^2-n}; beta_n = q^n / ((q)_n (aq)_n).
BaileyPair pair1();

/// alpha'_n = a^n q^{n^2} alpha_n, beta'_n = sum_j a^j q^{j^2} beta_j / (q)_{n-j}.
BaileyPair limit_transform(const BaileyPair& p);

/// beta_n = sum_{r<=n} alpha_r / ((q)_{n-r} (aq)_{n+r}) for all n <= n_max.
BaileyReport verify_pair(const BaileyPair& p, int n_max, Order N);

/// sum_j a^j q^{j^2} beta_j = (1/(aq)_inf) sum_r a^r q^{r^2} alpha_r.
BaileyReport verify_limit_sum(const BaileyPair& p, Order N);

/// The rewrite of the transformed beta for n <= n_max.
BaileyReport verify_A1(int n_max, Order N);

/// The terminating sum of the pair1 proof multiplied through by (1 - a), n <= n_max.
BaileyReport verify_slater_cleared(int n_max, Order N);

/// Both sides of the a = q^k specialisation for 0 <= k <= k_max.
BaileyReport verify_niceid(int k_max, Order N);
QSeries niceid_lhs(int k, Order N);
QSeries niceid_rhs(int k, Order N);

/// (q)_inf / (z^-1 q)_inf against its single-sum expansion.
QSeries ffw_lhs(Order N);
QSeries ffw_rhs(Order N);

}  // namespace qhecke
