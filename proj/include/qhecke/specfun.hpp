#pragma once

#include <string>
#include <vector>

#include "qhecke/qseries.hpp"

namespace qhecke {

// Term bounds: R, K, g and the mock theta functions sum n with n^2 <= N;
// H and S_formula need n(n+1)/2 <= N; the S-type definitions run their outer
// index up to N.

/// sum q^{n^2} / ((zq)_n (z^-1 q)_n)
QSeries build_R(Order N);
/// sum (-1)_n q^{n(n+1)/2} / ((zq)_n (z^-1 q)_n)
QSeries build_H(Order N);
/// sum (-1)^n (q;q^2)_n q^{n^2} / ((zq^2;q^2)_n (z^-1 q^2;q^2)_n)
QSeries build_K(Order N);
/// sum (-q;q^2)_n q^{n^2} / ((zq^2;q^2)_n (z^-1 q^2;q^2)_n)
QSeries build_N2_rank(Order N);

/// (1-x)(x g(x,q) + 1), assembled termwise with general series inversion.
QSeries build_g_cleared(Order N);

QSeries build_f_mock3(Order N);
QSeries build_mu_mock2(Order N);

QSeries build_S_def(Order N);
QSeries build_S_formula(Order N);
QSeries build_SBar_def(Order N);
QSeries build_S2_def(Order N);

enum class CrankKind { Plain, Overpartition, M2 };
/// Plain:         (q)_inf / ((zq)_inf (z^-1 q)_inf)
/// Overpartition: (-q)_inf (q)_inf / ((zq)_inf (z^-1 q)_inf)
/// M2:            (-q;q^2)_inf (q^2;q^2)_inf / ((zq^2;q^2)_inf (z^-1 q^2;q^2)_inf)
QSeries build_crank_style(CrankKind kind, Order N);

/// sum_{n>=0} (-1)^n z^n q^{n(n+1)/2}
QSeries build_partial_theta(Order N);

/// Sides of the false theta family. Ids are "<identity>.lhs" or
/// "<identity>.rhs" for falseT1a, falseT2, falseT2a, RAML1, RAML1A, RAML1B and
/// Entry931. Series that only make sense as power series in z (falseT1a,
/// falseT2, falseT2a) are returned truncated to z-degree <= N.
QSeries build_false_theta_sides(const std::string& id, Order N);
std::vector<std::string> false_theta_side_ids();

// Pure q-series used by the spt tables.

/// sum spt(n) q^n through the divisor-sum / pentagonal formula.
QSeries build_spt_series(Order N);
/// sum spt(n) q^n through (1/(q)_inf) sum q^n (q)_{n-1} / (1 - q^n).
QSeries build_spt_series_product(Order N);
/// S-bar(1,q) = sum q^n (-q^{n+1})_inf / ((1-q^n)^2 (q^{n+1})_inf)
QSeries build_sptbar_series(Order N);
/// S2(1,q) = sum q^{2n} (-q^{2n+1};q^2)_inf / ((1-q^{2n})^2 (q^{2n+2};q^2)_inf)
QSeries build_m2spt_series(Order N);

/// Names accepted by build_named_series.
std::vector<std::string> series_names();
/// Builds R, H, K, G_CLEARED, F_MOCK3, MU_MOCK2, S_DEF, S_FORMULA, SBAR_DEF,
/// S2_DEF, CRANK_STYLE, NB_RANK, MB_CRANK, N2_RANK, M2_CRANK, PARTIAL_THETA,
/// SPT, SPTBAR, M2SPT. Throws UnknownSeriesId.
QSeries build_named_series(const std::string& name, Order N);

}  // namespace qhecke
