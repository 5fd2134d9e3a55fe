#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qhecke/qseries.hpp"

namespace qhecke {

/// Kronecker symbol (a | n) for all integers a, n.
int kronecker(std::int64_t a, std::int64_t n);

/// (cn*n + cm*m + cabs*|m| + c0) / den; the division must be exact.
struct AffineForm {
    std::int64_t cn = 0;
    std::int64_t cm = 0;
    std::int64_t cabs = 0;
    std::int64_t c0 = 0;
    std::int64_t den = 1;

    /// Returns false when the numerator is not divisible by den.
    bool eval(std::int64_t n, std::int64_t m, std::int64_t& out) const;
};

/// (nn*n^2 + mm*m^2 + nm*n*m + ln*n + lm*m + labs*|m| + c0) / den
struct QuadForm {
    std::int64_t nn = 0;
    std::int64_t mm = 0;
    std::int64_t nm = 0;
    std::int64_t ln = 0;
    std::int64_t lm = 0;
    std::int64_t labs = 0;
    std::int64_t c0 = 0;
    std::int64_t den = 1;

    bool eval(std::int64_t n, std::int64_t m, std::int64_t& out) const;
};

struct KroneckerChar {
    std::int64_t top = 1;
    enum class Var { N, M } var = Var::N;
};

struct ZPart {
    Integer coeff = 1;
    AffineForm exp;
};

using RegionFn = std::function<bool(std::int64_t n, std::int64_t m)>;
using WeightFn = std::function<Integer(std::int64_t n, std::int64_t m)>;

/// One summand family of a Hecke-Rogers double sum:
/// weight * (-1)^sign * [sgn(m)] * chars * (sum of z-parts) * q^{q2/2}
/// over the (n, m) pairs of its region with |m| <= n.
struct TemplateTerm {
    std::string label;
    RegionFn region;
    AffineForm sign;
    bool sgn_m = false;
    std::vector<KroneckerChar> chars;
    WeightFn weight;  // empty means 1
    std::vector<ZPart> z_parts;  // empty means the single part z^0
    QuadForm q2;  // twice the q-exponent
};

/// Lower bound q2 >= (quad*n^2 + lin*n - c) / den valid on every region;
/// quad > 0, or quad == 0 with lin > 0.
struct Witness {
    std::int64_t quad = 1;
    std::int64_t lin = 0;
    std::int64_t c = 0;
    std::int64_t den = 1;
};

struct HeckeTemplate {
    std::string id;
    std::vector<TemplateTerm> terms;
    Integer divisor = 1;
    Witness witness;
    std::int64_t n_cap = 1000000;  // safety cap on the outer index
};

/// Exact sum of all terms with q-exponent <= N.
/// Throws HalfIntegerExponent, NonTerminating, NegativeExponent or
/// InexactDivision on a malformed template.
QSeries eval_template(const HeckeTemplate& t, Order N);

struct TermContribution {
    std::string label;
    std::int64_t q2;
    LaurentPoly value;
};

/// Nonzero contributions at a single lattice point, with the same checks as
/// eval_template.
std::vector<TermContribution> contributions_at(const HeckeTemplate& t, std::int64_t n,
                                               std::int64_t m);

/// f_{a,b,c}(x,y,q) over sgn(r) = sgn(s) with sgn(0) = +1.
QSeries eval_fabc(std::int64_t a, std::int64_t b, std::int64_t c, const Monomial& x,
                  const Monomial& y, Order N);

/// Named template; throws UnknownIdentity.
HeckeTemplate template_catalog(const std::string& id);
std::vector<std::string> template_ids();

}  // namespace qhecke
