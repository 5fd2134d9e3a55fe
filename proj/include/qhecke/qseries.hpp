#pragma once

#include <cstdint>
#include <vector>

#include "qhecke/laurent_poly.hpp"

namespace qhecke {

using Order = int;

/// Signed monomial sign * z^z_exp * q^q_exp, the argument of a q-Pochhammer symbol.
struct Monomial {
    int sign = 1;
    Exponent z_exp = 0;
    int q_exp = 0;
};

struct Infinite {};
inline constexpr Infinite kInfinity{};

/// Truncated power series in q with Laurent polynomial coefficients.
///
/// Holds the exact coefficients of q^0 .. q^order. Binary operations truncate
/// to the smaller of the two orders.
class QSeries {
public:
    QSeries() : QSeries(0) {}
    explicit QSeries(Order order);

    static QSeries constant(const LaurentPoly& c, Order order);
    static QSeries one(Order order) { return constant(LaurentPoly(1), order); }
    /// c * q^q_exp, or zero when q_exp > order.
    static QSeries term(const LaurentPoly& c, int q_exp, Order order);
    static QSeries from_coeffs(std::vector<LaurentPoly> coeffs);

    Order order() const noexcept { return static_cast<Order>(coeffs_.size()) - 1; }
    const LaurentPoly& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    LaurentPoly& at(int k) { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    QSeries truncated(Order order) const;

    QSeries& operator+=(const QSeries& g);
    QSeries& operator-=(const QSeries& g);

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<LaurentPoly> coeffs_;
};

/// Exponent-span cap for coefficients of a series of the given order.
Exponent support_cap(Order order);

/// Throws SupportOverflow if some coefficient exceeds support_cap(f.order()).
void check_support(const QSeries& f);

QSeries qs_add(const QSeries& f, const QSeries& g);
QSeries qs_sub(const QSeries& f, const QSeries& g);
QSeries qs_neg(const QSeries& f);
QSeries qs_mul(const QSeries& f, const QSeries& g);
QSeries qs_scale(const QSeries& f, const LaurentPoly& c);
/// f * q^s, truncated at f's order.
QSeries qs_shift_q(const QSeries& f, int s);
QSeries qs_invert(const QSeries& f);

QSeries operator+(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f);
QSeries operator*(const QSeries& f, const QSeries& g);
QSeries operator*(const QSeries& f, const LaurentPoly& c);
QSeries operator*(const LaurentPoly& c, const QSeries& f);

/// f * (1 - m) in O(order) time.
QSeries mul_binomial(const QSeries& f, const Monomial& m);
/// f / (1 - m); requires m.q_exp >= 1, else NonUnitConstantTerm.
QSeries div_binomial(const QSeries& f, const Monomial& m);

/// (a; q^step)_n = prod_{k<n} (1 - a q^{step k}).
QSeries pochhammer(const Monomial& a, int n, Order order, int step = 1);
QSeries pochhammer(const Monomial& a, Infinite, Order order, int step = 1);
QSeries pochhammer_step2(const Monomial& a, int n, Order order);
QSeries pochhammer_step2(const Monomial& a, Infinite, Order order);

/// 1 / (a; q^step)_n, built by repeated div_binomial. Requires a.q_exp >= 1.
QSeries inv_pochhammer(const Monomial& a, int n, Order order, int step = 1);
QSeries inv_pochhammer(const Monomial& a, Infinite, Order order, int step = 1);

/// Gaussian binomial [n choose k] in q^step, as a series of the given order.
/// Zero for k < 0 or k > n.
QSeries gauss_binomial(int n, int k, int step, Order order);

/// q -> -q.
QSeries qs_substitute_neg_q(const QSeries& f);
/// z -> 1/z in every coefficient.
QSeries qs_invert_var(const QSeries& f);
/// Evaluates every coefficient at z = z0 (must be +-1); result has constant coefficients.
QSeries qs_specialize_z(const QSeries& f, int z0);
/// Drops every z^e with e > zmax.
QSeries qs_truncate_z_above(const QSeries& f, Exponent zmax);

/// Coefficient of z^e q^k as a pure series helper; 0 beyond the order.
Integer coeff_at(const QSeries& f, int k, Exponent e);

/// Constant (z-free) series from integer coefficients.
QSeries qs_from_integers(const std::vector<Integer>& c);
/// Integer coefficients of a series whose coefficients are z-free.
std::vector<Integer> qs_to_integers(const QSeries& f);

}  // namespace qhecke
