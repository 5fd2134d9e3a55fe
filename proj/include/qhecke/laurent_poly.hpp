#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qhecke {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::int64_t;

/// Sparse Laurent polynomial in one formal variable over the integers.
///
/// Terms are kept sorted by exponent with no zero coefficients, so the zero
/// polynomial is the empty term list and equality is structural. The variable
/// plays the role of z, x or the Bailey parameter a depending on context.
class LaurentPoly {
public:
    using Term = std::pair<Exponent, Integer>;

    LaurentPoly() = default;
    LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long long constant);       // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Integer& coeff, Exponent exp);
    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    Integer coeff(Exponent exp) const;
    // Precondition for the three below: !is_zero().
    Exponent min_exp() const { return terms_.front().first; }
    Exponent max_exp() const { return terms_.back().first; }
    Exponent span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    /// True iff the polynomial is ±z^k.
    bool is_unit_monomial() const;

    void add_term(const Integer& coeff, Exponent exp);
    /// this += scale * z^shift * other
    void add_scaled(const LaurentPoly& other, const Integer& scale, Exponent shift = 0);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Integer& scalar);
    LaurentPoly& operator*=(const LaurentPoly& other);

    LaurentPoly operator-() const;
    LaurentPoly shifted(Exponent shift) const;
    /// Keeps only the terms with exponent <= max_exp.
    LaurentPoly truncated_above(Exponent max_exp) const;
    /// Exact division of every coefficient by `divisor`; throws InexactDivision.
    LaurentPoly divided_exactly(const Integer& divisor) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Canonical text: ascending exponents, e.g. "z^-3 + z^-1 + 1 + z + z^3".
    std::string to_string(char var = 'z') const;

private:
    std::vector<Term> terms_;
};

LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q);
LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(LaurentPoly p, const Integer& scalar);

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);

/// Convolution product. Throws SupportOverflow when the exponent span of the
/// result exceeds `max_span`.
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q,
                   std::optional<Exponent> max_span = std::nullopt);

/// Exact value at a nonzero integer point. Throws std::domain_error for z0 = 0.
Rational lp_eval_int(const LaurentPoly& p, const Integer& z0);

/// Integer value at z0 = ±1.
Integer lp_eval_unit(const LaurentPoly& p, int z0);

/// z -> 1/z.
LaurentPoly lp_invert_var(const LaurentPoly& p);

/// 1 + z + ... + z^(n-1); the polynomial form of (z^n - 1)/(z - 1).
LaurentPoly geometric_z_sum(std::int64_t n);

/// Accumulates many scaled, shifted products into one polynomial through a
/// dense scratch buffer. Used by the series product.
class LaurentAccumulator {
public:
    void add_product(const LaurentPoly& p, const LaurentPoly& q);
    void add(const LaurentPoly& p);
    LaurentPoly take();

private:
    struct Pending {
        const LaurentPoly* p;
        const LaurentPoly* q;
    };
    std::vector<Pending> products_;
    std::vector<const LaurentPoly*> sums_;
};

}  // namespace qhecke
