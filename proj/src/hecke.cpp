#include "qhecke/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "qhecke/errors.hpp"

namespace qhecke {

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        const std::int64_t r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol (a | n) for odd n > 0.
    std::int64_t x = ((a % n) + n) % n;
    std::int64_t y = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const std::int64_t r = y % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) result = -result;
        x %= y;
    }
    return y == 1 ? result : 0;
}

bool AffineForm::eval(std::int64_t n, std::int64_t m, std::int64_t& out) const {
    const std::int64_t num = cn * n + cm * m + cabs * std::llabs(m) + c0;
    if (num % den != 0) return false;
    out = num / den;
    return true;
}

bool QuadForm::eval(std::int64_t n, std::int64_t m, std::int64_t& out) const {
    const std::int64_t num = nn * n * n + mm * m * m + nm * n * m + ln * n + lm * m +
                             labs * std::llabs(m) + c0;
    if (num % den != 0) return false;
    out = num / den;
    return true;
}

namespace {

std::string point(std::int64_t n, std::int64_t m) {
    return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

Integer witness_numerator(const Witness& w, std::int64_t n) {
    return Integer(w.quad) * n * n + Integer(w.lin) * n - w.c;
}

// Returns false for pairs outside the region or with a vanishing character.
bool term_value(const HeckeTemplate& t, const TemplateTerm& term, std::int64_t n, std::int64_t m,
                std::int64_t& q2, LaurentPoly& value) {
    if (!term.region(n, m)) return false;
    int unit = 1;
    for (const auto& ch : term.chars) {
        const int k = kronecker(ch.top, ch.var == KroneckerChar::Var::N ? n : m);
        if (k == 0) return false;
        unit *= k;
    }
    if (!term.q2.eval(n, m, q2) || q2 % 2 != 0) {
        throw HalfIntegerExponent(t.id + "/" + term.label + ": q-exponent not an integer at " +
                                  point(n, m));
    }
    if (q2 < 0) {
        throw NegativeExponent(t.id + "/" + term.label + ": negative q-exponent at " +
                               point(n, m));
    }
    if (Integer(q2) * t.witness.den < witness_numerator(t.witness, n)) {
        throw NonTerminating(t.id + "/" + term.label + ": termination witness fails at " +
                             point(n, m));
    }
    std::int64_t s = 0;
    if (!term.sign.eval(n, m, s)) {
        throw HalfIntegerExponent(t.id + "/" + term.label + ": sign exponent not an integer at " +
                                  point(n, m));
    }
    if (s % 2 != 0) unit = -unit;
    if (term.sgn_m && m < 0) unit = -unit;
    Integer w = term.weight ? term.weight(n, m) : Integer(1);
    if (w == 0) return false;
    w *= unit;
    std::vector<LaurentPoly::Term> parts;
    if (term.z_parts.empty()) {
        parts.emplace_back(0, w);
    } else {
        for (const auto& zp : term.z_parts) {
            std::int64_t e = 0;
            if (!zp.exp.eval(n, m, e)) {
                throw HalfIntegerExponent(t.id + "/" + term.label +
                                          ": z-exponent not an integer at " + point(n, m));
            }
            parts.emplace_back(e, zp.coeff * w);
        }
    }
    value = LaurentPoly::from_terms(std::move(parts));
    return !value.is_zero();
}

void check_witness_shape(const HeckeTemplate& t) {
    const Witness& w = t.witness;
    if (w.den <= 0 || w.quad < 0 || w.lin < 0 || (w.quad == 0 && w.lin == 0)) {
        throw NonTerminating(t.id + ": termination witness has no growth");
    }
}

}  // namespace

QSeries eval_template(const HeckeTemplate& t, Order N) {
    check_witness_shape(t);
    std::vector<std::vector<LaurentPoly::Term>> acc(static_cast<std::size_t>(N) + 1);
    const Integer limit = Integer(2) * N * t.witness.den;
    std::int64_t n_stop = 0;
    while (witness_numerator(t.witness, n_stop) <= limit) {
        if (++n_stop > t.n_cap) throw NonTerminating(t.id + ": outer index exceeds safety cap");
    }
    // Two guard rows past the cut-off: a witness that is too strong throws there.
    for (std::int64_t n = 0; n < n_stop + 2; ++n) {
        for (std::int64_t m = -n; m <= n; ++m) {
            for (const auto& term : t.terms) {
                std::int64_t q2 = 0;
                LaurentPoly v;
                if (!term_value(t, term, n, m, q2, v)) continue;
                if (q2 / 2 > N) continue;
                auto& slot = acc[static_cast<std::size_t>(q2 / 2)];
                slot.insert(slot.end(), v.terms().begin(), v.terms().end());
            }
        }
    }
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(acc.size());
    for (auto& terms : acc) {
        LaurentPoly p = LaurentPoly::from_terms(std::move(terms));
        if (t.divisor != 1) p = p.divided_exactly(t.divisor);
        coeffs.push_back(std::move(p));
    }
    return QSeries::from_coeffs(std::move(coeffs));
}

std::vector<TermContribution> contributions_at(const HeckeTemplate& t, std::int64_t n,
                                               std::int64_t m) {
    check_witness_shape(t);
    std::vector<TermContribution> out;
    for (const auto& term : t.terms) {
        std::int64_t q2 = 0;
        LaurentPoly v;
        if (term_value(t, term, n, m, q2, v)) out.push_back({term.label, q2, std::move(v)});
    }
    return out;
}

QSeries eval_fabc(std::int64_t a, std::int64_t b, std::int64_t c, const Monomial& x,
                  const Monomial& y, Order N) {
    if (a < 1 || b < 1 || c < 1) {
        throw NonTerminating("eval_fabc: requires a, b, c >= 1");
    }
    // For sgn(r) = sgn(s) and T = |r| + |s| the exponent is at least
    // min(a,b,c) T^2 / 2 - (max(a,c)/2 + |fx| + |fy|) T.
    const std::int64_t lo = std::min({a, b, c});
    const std::int64_t lin = std::max(a, c) + 2 * (std::llabs(x.q_exp) + std::llabs(y.q_exp));
    auto bound_exceeds = [&](std::int64_t T) { return lo * T * T - lin * T > 2 * std::int64_t(N); };
    const std::int64_t vertex = lin / lo + 1;
    const std::int64_t cap = 1000000;
    std::vector<std::vector<LaurentPoly::Term>> acc(static_cast<std::size_t>(N) + 1);
    auto add = [&](std::int64_t r, std::int64_t s) {
        const std::int64_t e = a * r * (r - 1) / 2 + b * r * s + c * s * (s - 1) / 2 +
                               x.q_exp * r + y.q_exp * s;
        if (e < 0) {
            throw NegativeExponent("eval_fabc: negative q-exponent at (r=" + std::to_string(r) +
                                   ", s=" + std::to_string(s) + ")");
        }
        if (e > N) return;
        int sign = r >= 0 ? 1 : -1;
        if ((r + s) % 2 != 0) sign = -sign;
        if (x.sign < 0 && r % 2 != 0) sign = -sign;
        if (y.sign < 0 && s % 2 != 0) sign = -sign;
        acc[static_cast<std::size_t>(e)].emplace_back(x.z_exp * r + y.z_exp * s, sign);
    };
    for (std::int64_t T = 0;; ++T) {
        if (T > vertex && bound_exceeds(T)) break;
        if (T > cap) throw NonTerminating("eval_fabc: enumeration does not prune");
        for (std::int64_t r = 0; r <= T; ++r) add(r, T - r);
        for (std::int64_t r = 1; r < T; ++r) add(-r, -(T - r));
    }
    std::vector<LaurentPoly> coeffs;
    for (auto& terms : acc) coeffs.push_back(LaurentPoly::from_terms(std::move(terms)));
    return QSeries::from_coeffs(std::move(coeffs));
}

namespace {

using I = std::int64_t;

AffineForm aff(I cn, I cm, I cabs, I c0, I den = 1) { return {cn, cm, cabs, c0, den}; }

QuadForm quad(I nn, I mm, I nm, I ln, I lm, I labs, I c0, I den = 1) {
    return {nn, mm, nm, ln, lm, labs, c0, den};
}

ZPart zp(I cn, I cm, I cabs, I c0, Integer coeff = 1, I den = 1) {
    return {std::move(coeff), aff(cn, cm, cabs, c0, den)};
}

ZPart zconst(Integer coeff) { return {std::move(coeff), aff(0, 0, 0, 0)}; }

const AffineForm kSignN = aff(1, 0, 0, 0);
const AffineForm kSignM = aff(0, 1, 0, 0);
const AffineForm kSignNM = aff(1, 1, 0, 0);
const AffineForm kNoSign = aff(0, 0, 0, 0);

bool half_sector(I n, I m) { return 2 * std::llabs(m) <= n; }
bool third_sector(I n, I m) { return 3 * std::llabs(m) <= n; }
bool full_sector(I n, I m) { return std::llabs(m) <= n; }
bool upper_triangle(I n, I m) { return m >= 0 && m <= n; }

// n^2 - 3m^2 + n -+ m
QuadForm hr1_q2(int sign_m) { return quad(1, -3, 0, 1, sign_m, 0, 0); }
QuadForm hr2_q2() { return quad(1, -2, 0, 1, 0, 0, 0); }
QuadForm hr3_q2() { return quad(1, -8, 0, 1, 0, 0, 0); }
QuadForm hr4_q2(int sign_m) { return quad(2, -1, 0, 2, sign_m, 0, 0); }
QuadForm news_q2() { return quad(3, -1, 0, 0, 0, 0, -2, 12); }
QuadForm mort13_q2() { return quad(1, -2, 0, 3, -2, 0, 0); }

TemplateTerm term(std::string label, RegionFn region, AffineForm sign, QuadForm q2,
                  std::vector<ZPart> z = {}, WeightFn weight = {}) {
    TemplateTerm t;
    t.label = std::move(label);
    t.region = std::move(region);
    t.sign = sign;
    t.q2 = q2;
    t.z_parts = std::move(z);
    t.weight = std::move(weight);
    return t;
}

HeckeTemplate make(std::string id, std::vector<TemplateTerm> terms, Witness w,
                   Integer divisor = 1) {
    HeckeTemplate t;
    t.id = std::move(id);
    t.terms = std::move(terms);
    t.witness = w;
    t.divisor = std::move(divisor);
    return t;
}

WeightFn constant_weight(I c) {
    return [c](I, I) { return Integer(c); };
}

std::vector<KroneckerChar> news_chars() {
    return {{-4, KroneckerChar::Var::N}, {12, KroneckerChar::Var::M}};
}

HeckeTemplate hr1() {
    return make("HR1", {term("main", half_sector, kSignNM, hr1_q2(1))}, {1, 0, 0, 4});
}

HeckeTemplate hr2() {
    return make("HR2", {term("main", half_sector, kSignNM, hr2_q2())}, {1, 0, 0, 2});
}

HeckeTemplate hr3() {
    return make("HR3", {term("main", third_sector, kSignN, hr3_q2())}, {1, 0, 0, 9});
}

HeckeTemplate hr4() {
    return make("HR4", {term("main", full_sector, kSignN, hr4_q2(1))}, {1, 1, 0, 1});
}

HeckeTemplate newrankid() {
    return make("NEWrankid",
                {term("j>=0", [](I n, I m) { return m >= 0 && 2 * m <= n; }, kSignNM, hr1_q2(-1),
                      {zp(1, -3, 0, 0), zp(-1, 3, 0, 0)}),
                 term("j>=1", [](I n, I m) { return m >= 1 && 2 * m <= n; }, kSignNM, hr1_q2(1),
                      {zp(1, -3, 0, 1), zp(-1, 3, 0, -1)})},
                {1, 0, 0, 4}, 2);
}

HeckeTemplate conj1a() {
    return make("CONJ1a",
                {term("main", half_sector, kSignNM, hr2_q2(), {zp(1, 0, -2, 1), zp(-1, 0, 2, 0)})},
                {1, 0, 0, 2});
}

HeckeTemplate conj1b() {
    return make("CONJ1b",
                {term("main", third_sector, kSignN, hr3_q2(), {zp(1, 0, -4, 1), zp(-1, 0, 4, 0)})},
                {1, 0, 0, 9});
}

HeckeTemplate conj2() {
    return make("CONJ2",
                {term("m>=0", upper_triangle, kSignN, hr4_q2(-1), {zp(-1, 1, 0, 0)}),
                 term("m>=1", [](I n, I m) { return m >= 1 && m <= n; }, kSignN, hr4_q2(1),
                      {zp(1, -1, 0, 1)})},
                {1, 1, 0, 1});
}

HeckeTemplate hrf(const std::string& id) {
    TemplateTerm t = term("main", half_sector, kNoSign, hr1_q2(-1));
    t.sgn_m = true;
    return make(id, {t}, {1, 0, 0, 4});
}

HeckeTemplate hrmu(const std::string& id) {
    TemplateTerm t = term("main", full_sector, kSignM, hr4_q2(-1));
    t.sgn_m = true;
    return make(id, {t}, {1, 1, 0, 1});
}

HeckeTemplate hrnewv2() {
    return make("HRnewv2",
                {term("main", [](I n, I m) { return n >= 1 && m >= 0 && 2 * m <= n; }, kSignM,
                      hr2_q2(), {}, [](I n, I m) { return Integer(2 * n - 4 * m + 1); }),
                 term("delta", [](I n, I m) { return n >= 1 && m == 0; }, kNoSign, hr2_q2(), {},
                      [](I n, I) { return Integer(-(n + 1)); })},
                {1, 0, 0, 2});
}

HeckeTemplate cor1() {
    return make(
        "cor1",
        {term("k<m/3", [](I n, I m) { return m >= 0 && 3 * m < n; }, kSignNM, hr1_q2(-1), {},
              constant_weight(2)),
         term("1<=k<(m+1)/3", [](I n, I m) { return m >= 1 && 3 * m <= n; }, kSignNM, hr1_q2(1),
              {}, constant_weight(2)),
         term("tail+", [](I, I m) { return m == 0; }, kNoSign, quad(6, 0, 0, 2, 0, 0, 0)),
         term("tail-", [](I n, I m) { return n >= 1 && m == 0; }, kNoSign,
              quad(6, 0, 0, -2, 0, 0, 0), {}, constant_weight(-1))},
        {2, 0, 0, 3});
}

HeckeTemplate sphr(const std::string& id) {
    if (id == "SPHR1.lhs") {
        return make(id,
                    {term("main", [](I n, I m) { return m >= 0 && 3 * m < n; }, kSignNM,
                          hr1_q2(-1), {zp(1, -3, 0, 0)})},
                    {1, 0, 0, 4});
    }
    if (id == "SPHR1.rhs") {
        return make(id,
                    {term("main", [](I n, I m) { return 3 * m > n && 2 * m <= n; }, kSignNM,
                          hr1_q2(-1), {zp(-1, 3, 0, 0)})},
                    {1, 0, 0, 4});
    }
    if (id == "SPHR2.lhs") {
        return make(id,
                    {term("main", [](I n, I m) { return m >= 1 && 3 * m <= n; }, kSignNM,
                          hr1_q2(1), {zp(1, -3, 0, 1)})},
                    {1, 0, 0, 4});
    }
    return make(id,
                {term("main", [](I n, I m) { return 3 * m > n + 1 && 2 * m <= n; }, kSignNM,
                      hr1_q2(1), {zp(-1, 3, 0, -1)})},
                {1, 0, 0, 4});
}

HeckeTemplate newsid() {
    TemplateTerm t = term("main", upper_triangle, kNoSign, news_q2(),
                          {zp(-1, 1, 0, 0, 1, 2), zconst(-2), zp(1, -1, 0, 0, 1, 2)});
    t.chars = news_chars();
    return make("NEWSid", {t}, {1, 0, 1, 6});
}

HeckeTemplate eqnewsid() {
    return make("EQNEWSid",
                {term("j>=0", [](I n, I m) { return m >= 0 && 3 * m <= n; }, kSignNM, hr1_q2(-1),
                      {zp(1, -3, 0, 0), zconst(-2), zp(-1, 3, 0, 0)}),
                 term("j>=1", [](I n, I m) { return m >= 1 && 3 * m <= n; }, kSignNM, hr1_q2(1),
                      {zp(1, -3, 0, 1), zconst(-2), zp(-1, 3, 0, -1)})},
                {2, 0, 0, 3});
}

HeckeTemplate newsptid() {
    TemplateTerm t = term("main", upper_triangle, kNoSign, news_q2(), {}, [](I n, I m) {
        if ((n - m) % 2 != 0) throw HalfIntegerExponent("NEWSPTid: (n-m)/2 not an integer");
        const Integer h = (n - m) / 2;
        return Integer(-h * h);
    });
    t.chars = news_chars();
    return make("NEWSPTid", {t}, {1, 0, 1, 6});
}

HeckeTemplate newsbid() {
    return make("NEWSBid",
                {term("main", half_sector, kSignNM, hr2_q2(),
                      {zp(-1, 0, 2, 0), zconst(-1), zp(0, 0, 0, 1, -1), zp(1, 0, -2, 1)})},
                {1, 0, 0, 2});
}

HeckeTemplate sbcorid() {
    return make("SBcorid",
                {term("main", half_sector, aff(1, 1, 0, 1), hr2_q2(), {}, [](I n, I m) {
                    const I a = n - 2 * std::llabs(m);
                    return Integer(a + 1) * a / 2;
                })},
                {1, 0, 0, 2});
}

HeckeTemplate news2id() {
    return make("NEWS2id",
                {term("main", upper_triangle, kSignN, hr4_q2(-1),
                      {zp(-1, 1, 0, 0), zconst(-2), zp(1, -1, 0, 0)})},
                {1, 1, 0, 1});
}

HeckeTemplate newm2sptid() {
    return make("NEWM2SPTid",
                {term("main", [](I n, I m) { return n >= 1 && m >= 0 && m <= n; },
                      aff(1, 0, 0, 1), hr4_q2(-1), {},
                      [](I n, I m) { return Integer(n - m) * (n - m); })},
                {1, 1, 0, 1});
}

HeckeTemplate andid() {
    return make("ANDID",
                {term("n+m>=1", [](I n, I m) { return std::llabs(m) <= n && n + m >= 1; },
                      kSignNM, quad(1, -1, 0, 1, 1, 0, 0),
                      {zp(0, 1, 0, 0), zp(0, 1, 0, -1, -1)}),
                 term("m=-n telescoped", [](I n, I m) { return n == 0 && m == 0; }, kNoSign,
                      quad(0, 0, 0, 0, 0, 0, 0))},
                {0, 1, 0, 1});
}

// (n^2 - 3m^2) + (2n - m) and the same plus 4n - 4m + 6, doubled.
HeckeTemplate mortid1(const std::string& id, AffineForm sign, WeightFn weight,
                      std::vector<ZPart> z) {
    auto region = [](I n, I m) { return m >= 0 && 3 * m <= n; };
    WeightFn neg = [weight](I n, I m) { return weight ? Integer(-weight(n, m)) : Integer(-1); };
    return make(id,
                {term("main", region, sign, quad(2, -6, 0, 4, -2, 0, 0), z, weight),
                 term("shifted", region, sign, quad(2, -6, 0, 12, -10, 0, 12), z, neg)},
                {1, 0, 0, 1});
}

HeckeTemplate mort23(const std::string& id, AffineForm sign, WeightFn weight,
                     std::vector<ZPart> z) {
    return make(id,
                {term("main", [](I n, I m) { return m >= 0 && 2 * m <= n; }, sign, mort13_q2(),
                      std::move(z), std::move(weight))},
                {1, 0, 0, 2});
}

HeckeTemplate build(const std::string& id) {
    if (id == "HR1") return hr1();
    if (id == "HR2" || id == "MILid.lhs") {
        HeckeTemplate t = hr2();
        t.id = id;
        return t;
    }
    if (id == "HR3" || id == "MILid.rhs") {
        HeckeTemplate t = hr3();
        t.id = id;
        return t;
    }
    if (id == "HR4") return hr4();
    if (id == "NEWrankid") return newrankid();
    if (id == "CONJ1a") return conj1a();
    if (id == "CONJ1b") return conj1b();
    if (id == "CONJ2") return conj2();
    if (id == "HRf" || id == "HRfv2") return hrf(id);
    if (id == "HRmu" || id == "HRmuv2") return hrmu(id);
    if (id == "HRnewv2") return hrnewv2();
    if (id == "cor1") return cor1();
    if (id == "SPHR1.lhs" || id == "SPHR1.rhs" || id == "SPHR2.lhs" || id == "SPHR2.rhs") {
        return sphr(id);
    }
    if (id == "NEWSid") return newsid();
    if (id == "EQNEWSid") return eqnewsid();
    if (id == "NEWSPTid") return newsptid();
    if (id == "NEWSBid") return newsbid();
    if (id == "SBcorid") return sbcorid();
    if (id == "NEWS2id") return news2id();
    if (id == "NEWM2SPTid") return newm2sptid();
    if (id == "ANDID") return andid();
    if (id == "MORTID1") {
        return mortid1(id, kNoSign, {}, {zp(1, -3, 0, 0), zp(-1, 3, 0, -1)});
    }
    if (id == "MORTID1B") {
        return mortid1(id, kSignNM, [](I n, I) { return Integer(2 * n - 6 * n + 1); }, {});
    }
    if (id == "MORTID1B.corrected") {
        return mortid1(id, kSignNM, [](I n, I m) { return Integer(2 * n - 6 * m + 1); }, {});
    }
    if (id == "MORTID2") return mort23(id, kSignM, {}, {zp(0, 1, 0, 0), zp(0, -1, 0, -1)});
    if (id == "MORTID2B") {
        return mort23(id, kNoSign, [](I, I m) { return Integer(2 * m + 1); }, {});
    }
    if (id == "MORTID3") return mort23(id, kSignM, {}, {zp(1, -2, 0, 0), zp(-1, 2, 0, -1)});
    if (id == "MORTID3B") {
        return mort23(id, kSignNM, [](I n, I m) { return Integer(2 * n - 4 * m + 1); }, {});
    }
    throw UnknownIdentity("no template named " + id);
}

}  // namespace

HeckeTemplate template_catalog(const std::string& id) { return build(id); }

std::vector<std::string> template_ids() {
    return {"ANDID",     "CONJ1a",     "CONJ1b",    "CONJ2",      "EQNEWSid",  "HR1",
            "HR2",       "HR3",        "HR4",       "HRf",        "HRfv2",     "HRmu",
            "HRmuv2",    "HRnewv2",    "MILid.lhs", "MILid.rhs",  "MORTID1",   "MORTID1B",
            "MORTID1B.corrected",      "MORTID2",   "MORTID2B",   "MORTID3",   "MORTID3B",
            "NEWM2SPTid", "NEWS2id",   "NEWSBid",   "NEWSPTid",   "NEWSid",    "NEWrankid",
            "SBcorid",   "SPHR1.lhs",  "SPHR1.rhs", "SPHR2.lhs",  "SPHR2.rhs", "cor1"};
}

}  // namespace qhecke
