#include "qhecke/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qhecke/errors.hpp"

namespace qhecke {

QSeries::QSeries(Order order) {
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::constant(const LaurentPoly& c, Order order) {
    QSeries f(order);
    f.coeffs_[0] = c;
    return f;
}

QSeries QSeries::term(const LaurentPoly& c, int q_exp, Order order) {
    if (q_exp < 0) throw NegativeExponent("QSeries::term: negative q exponent");
    QSeries f(order);
    if (q_exp <= order) f.coeffs_[static_cast<std::size_t>(q_exp)] = c;
    return f;
}

QSeries QSeries::from_coeffs(std::vector<LaurentPoly> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("QSeries::from_coeffs: empty");
    QSeries f;
    f.coeffs_ = std::move(coeffs);
    return f;
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const LaurentPoly& p) { return p.is_zero(); });
}

QSeries QSeries::truncated(Order order) const {
    if (order > this->order()) throw std::invalid_argument("QSeries::truncated: order too large");
    QSeries f;
    f.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + order + 1);
    return f;
}

QSeries& QSeries::operator+=(const QSeries& g) {
    if (g.order() < order()) coeffs_.resize(static_cast<std::size_t>(g.order()) + 1);
    for (int k = 0; k <= order(); ++k) at(k) += g[k];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& g) {
    if (g.order() < order()) coeffs_.resize(static_cast<std::size_t>(g.order()) + 1);
    for (int k = 0; k <= order(); ++k) at(k) -= g[k];
    return *this;
}

Exponent support_cap(Order order) { return 4 * static_cast<Exponent>(order) + 16; }

void check_support(const QSeries& f) {
    const Exponent cap = support_cap(f.order());
    for (int k = 0; k <= f.order(); ++k) {
        if (f[k].span() > cap) {
            throw SupportOverflow("z-span " + std::to_string(f[k].span()) + " at q^" +
                                  std::to_string(k) + " exceeds cap " + std::to_string(cap));
        }
    }
}

QSeries qs_add(const QSeries& f, const QSeries& g) {
    QSeries r = f;
    r += g;
    return r;
}

QSeries qs_sub(const QSeries& f, const QSeries& g) {
    QSeries r = f;
    r -= g;
    return r;
}

QSeries qs_neg(const QSeries& f) {
    QSeries r = f;
    for (int k = 0; k <= r.order(); ++k) r.at(k) = -r[k];
    return r;
}

QSeries qs_mul(const QSeries& f, const QSeries& g) {
    const Order n = std::min(f.order(), g.order());
    std::vector<int> fs;
    std::vector<int> gs;
    for (int k = 0; k <= n; ++k) {
        if (!f[k].is_zero()) fs.push_back(k);
        if (!g[k].is_zero()) gs.push_back(k);
    }
    QSeries r(n);
    LaurentAccumulator acc;
    for (int k = 0; k <= n; ++k) {
        for (int i : fs) {
            if (i > k) break;
            const int j = k - i;
            if (!g[j].is_zero()) acc.add_product(f[i], g[j]);
        }
        r.at(k) = acc.take();
    }
    check_support(r);
    return r;
}

QSeries qs_scale(const QSeries& f, const LaurentPoly& c) {
    QSeries r(f.order());
    if (c.is_zero()) return r;
    for (int k = 0; k <= f.order(); ++k) {
        if (!f[k].is_zero()) r.at(k) = lp_mul(f[k], c);
    }
    return r;
}

QSeries qs_shift_q(const QSeries& f, int s) {
    if (s < 0) throw NegativeExponent("qs_shift_q: negative shift");
    QSeries r(f.order());
    for (int k = s; k <= f.order(); ++k) r.at(k) = f[k - s];
    return r;
}

QSeries qs_invert(const QSeries& f) {
    const LaurentPoly& c0 = f[0];
    if (!c0.is_unit_monomial()) {
        throw NonUnitConstantTerm("qs_invert: constant term " + c0.to_string() +
                                  " is not a unit monomial");
    }
    // 1/(u z^e) = u z^-e with u = +-1.
    const LaurentPoly inv0 = LaurentPoly::monomial(c0.terms().front().second, -c0.min_exp());
    QSeries g(f.order());
    g.at(0) = inv0;
    LaurentAccumulator acc;
    for (int k = 1; k <= f.order(); ++k) {
        for (int i = 1; i <= k; ++i) {
            if (!f[i].is_zero() && !g[k - i].is_zero()) acc.add_product(f[i], g[k - i]);
        }
        LaurentPoly s = acc.take();
        g.at(k) = -lp_mul(s, inv0);
    }
    check_support(g);
    return g;
}

QSeries operator+(const QSeries& f, const QSeries& g) { return qs_add(f, g); }
QSeries operator-(const QSeries& f, const QSeries& g) { return qs_sub(f, g); }
QSeries operator-(const QSeries& f) { return qs_neg(f); }
QSeries operator*(const QSeries& f, const QSeries& g) { return qs_mul(f, g); }
QSeries operator*(const QSeries& f, const LaurentPoly& c) { return qs_scale(f, c); }
QSeries operator*(const LaurentPoly& c, const QSeries& f) { return qs_scale(f, c); }

QSeries mul_binomial(const QSeries& f, const Monomial& m) {
    if (m.q_exp < 0) throw NegativeExponent("mul_binomial: negative q exponent");
    QSeries r = f;
    const Integer scale = -m.sign;
    for (int k = f.order(); k >= m.q_exp; --k) {
        r.at(k).add_scaled(f[k - m.q_exp], scale, m.z_exp);
    }
    return r;
}

QSeries div_binomial(const QSeries& f, const Monomial& m) {
    if (m.q_exp < 1) {
        throw NonUnitConstantTerm("div_binomial: factor has q-free part 1 - (" +
                                  std::to_string(m.sign) + ")z^" + std::to_string(m.z_exp));
    }
    QSeries r = f;
    const Integer scale = m.sign;
    for (int k = m.q_exp; k <= f.order(); ++k) {
        r.at(k).add_scaled(r[k - m.q_exp], scale, m.z_exp);
    }
    check_support(r);
    return r;
}

namespace {

Monomial advanced(const Monomial& a, int by) { return {a.sign, a.z_exp, a.q_exp + by}; }

void check_step(int step) {
    if (step < 1) throw std::invalid_argument("pochhammer: step must be positive");
}

}  // namespace

QSeries pochhammer(const Monomial& a, int n, Order order, int step) {
    check_step(step);
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    QSeries r = QSeries::one(order);
    for (int k = 0; k < n; ++k) {
        const Monomial f = advanced(a, step * k);
        if (f.q_exp > order) break;
        r = mul_binomial(r, f);
    }
    check_support(r);
    return r;
}

QSeries pochhammer(const Monomial& a, Infinite, Order order, int step) {
    check_step(step);
    const int n = a.q_exp > order ? 0 : (order - a.q_exp) / step + 1;
    return pochhammer(a, n, order, step);
}

QSeries pochhammer_step2(const Monomial& a, int n, Order order) {
    return pochhammer(a, n, order, 2);
}

QSeries pochhammer_step2(const Monomial& a, Infinite, Order order) {
    return pochhammer(a, kInfinity, order, 2);
}

QSeries inv_pochhammer(const Monomial& a, int n, Order order, int step) {
    check_step(step);
    if (n < 0) throw std::invalid_argument("inv_pochhammer: negative length");
    QSeries r = QSeries::one(order);
    for (int k = 0; k < n; ++k) {
        const Monomial f = advanced(a, step * k);
        if (f.q_exp > order) break;
        r = div_binomial(r, f);
    }
    return r;
}

QSeries inv_pochhammer(const Monomial& a, Infinite, Order order, int step) {
    check_step(step);
    const int n = a.q_exp > order ? 0 : (order - a.q_exp) / step + 1;
    return inv_pochhammer(a, n, order, step);
}

namespace {

using Dense = std::vector<Integer>;

void times_one_minus_q_power(Dense& p, int e) {
    p.resize(p.size() + static_cast<std::size_t>(e));
    for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(e);) p[i] -= p[i - e];
}

// Exact quotient p / (1 - q^e). Throws InexactDivision on a nonzero remainder.
void divide_one_minus_q_power(Dense& p, int e) {
    const auto ue = static_cast<std::size_t>(e);
    if (p.size() <= ue) {
        if (std::any_of(p.begin(), p.end(), [](const Integer& c) { return c != 0; })) {
            throw InexactDivision("gauss_binomial: division by 1 - q^" + std::to_string(e));
        }
        p.assign(1, 0);
        return;
    }
    Dense quot(p.size() - ue);
    // Dividing by (1 - q^e): quot[i] = p[i] + quot[i-e].
    for (std::size_t i = 0; i < quot.size(); ++i) {
        quot[i] = p[i];
        if (i >= ue) quot[i] += quot[i - ue];
    }
    // Remainder check: p - quot*(1 - q^e) must vanish in the top e slots.
    for (std::size_t i = quot.size(); i < p.size(); ++i) {
        Integer rem = p[i];
        if (i >= ue && i - ue < quot.size()) rem += quot[i - ue];
        if (rem != 0) {
            throw InexactDivision("gauss_binomial: division by 1 - q^" + std::to_string(e));
        }
    }
    p = std::move(quot);
}

}  // namespace

QSeries gauss_binomial(int n, int k, int step, Order order) {
    check_step(step);
    QSeries r(order);
    if (k < 0 || k > n || n < 0) return r;
    Dense p{1};
    for (int i = 1; i <= k; ++i) times_one_minus_q_power(p, step * (n - k + i));
    for (int i = 1; i <= k; ++i) divide_one_minus_q_power(p, step * i);
    for (std::size_t i = 0; i < p.size() && static_cast<int>(i) <= order; ++i) {
        r.at(static_cast<int>(i)) = LaurentPoly(p[i]);
    }
    return r;
}

QSeries qs_substitute_neg_q(const QSeries& f) {
    QSeries r = f;
    for (int k = 1; k <= r.order(); k += 2) r.at(k) = -r[k];
    return r;
}

QSeries qs_invert_var(const QSeries& f) {
    QSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = lp_invert_var(f[k]);
    return r;
}

QSeries qs_specialize_z(const QSeries& f, int z0) {
    QSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = LaurentPoly(lp_eval_unit(f[k], z0));
    return r;
}

QSeries qs_truncate_z_above(const QSeries& f, Exponent zmax) {
    QSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = f[k].truncated_above(zmax);
    return r;
}

Integer coeff_at(const QSeries& f, int k, Exponent e) {
    if (k < 0 || k > f.order()) return 0;
    return f[k].coeff(e);
}

QSeries qs_from_integers(const std::vector<Integer>& c) {
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(c.size());
    for (const auto& x : c) coeffs.emplace_back(x);
    return QSeries::from_coeffs(std::move(coeffs));
}

std::vector<Integer> qs_to_integers(const QSeries& f) {
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(f.order()) + 1);
    for (int k = 0; k <= f.order(); ++k) {
        const auto& p = f[k];
        if (!p.is_zero() && (p.size() != 1 || p.min_exp() != 0)) {
            throw std::domain_error("qs_to_integers: coefficient of q^" + std::to_string(k) +
                                    " depends on z");
        }
        out.push_back(p.coeff(0));
    }
    return out;
}

}  // namespace qhecke
