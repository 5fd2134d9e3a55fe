#include "qhecke/laurent_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qhecke/errors.hpp"

namespace qhecke {

LaurentPoly::LaurentPoly(const Integer& constant) {
    if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly::LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, Exponent exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(exp, coeff);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == e) {
            p.terms_.back().second += c;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (c != 0) {
            p.terms_.emplace_back(e, std::move(c));
        }
    }
    return p;
}

Integer LaurentPoly::coeff(Exponent exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, Exponent e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

bool LaurentPoly::is_unit_monomial() const {
    return terms_.size() == 1 && abs(terms_.front().second) == 1;
}

void LaurentPoly::add_term(const Integer& coeff, Exponent exp) {
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, Exponent e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{exp, coeff});
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const Integer& scale, Exponent shift) {
    if (other.is_zero() || scale == 0) return;
    if (other.terms_.size() == 1) {
        add_term(other.terms_.front().second * scale, other.terms_.front().first + shift);
        return;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
            merged.push_back(std::move(*a));
            ++a;
        } else if (a == terms_.end() || b->first + shift < a->first) {
            merged.emplace_back(b->first + shift, b->second * scale);
            ++b;
        } else {
            Integer c = std::move(a->second);
            c += b->second * scale;
            if (c != 0) merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    add_scaled(other, 1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    add_scaled(other, -1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.second *= scalar;
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = lp_mul(*this, other);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += shift;
    return r;
}

LaurentPoly LaurentPoly::truncated_above(Exponent max_exp) const {
    LaurentPoly r;
    for (const auto& t : terms_) {
        if (t.first > max_exp) break;
        r.terms_.push_back(t);
    }
    return r;
}

LaurentPoly LaurentPoly::divided_exactly(const Integer& divisor) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        Integer q, rem;
        boost::multiprecision::divide_qr(t.second, divisor, q, rem);
        if (rem != 0) {
            throw InexactDivision("coefficient " + t.second.str() + " of z^" +
                                  std::to_string(t.first) + " not divisible by " +
                                  divisor.str());
        }
        t.second = std::move(q);
    }
    return r;
}

std::string LaurentPoly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) out << mag << "*";
        out << var;
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) {
    p += q;
    return p;
}

LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) {
    p -= q;
    return p;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return lp_mul(p, q); }

LaurentPoly operator*(LaurentPoly p, const Integer& scalar) {
    p *= scalar;
    return p;
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q, std::optional<Exponent> max_span) {
    LaurentAccumulator acc;
    acc.add_product(p, q);
    LaurentPoly r = acc.take();
    if (max_span && r.span() > *max_span) {
        throw SupportOverflow("product exponent span " + std::to_string(r.span()) +
                              " exceeds cap " + std::to_string(*max_span));
    }
    return r;
}

Rational lp_eval_int(const LaurentPoly& p, const Integer& z0) {
    if (z0 == 0) throw std::domain_error("lp_eval_int: evaluation point must be nonzero");
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer power = boost::multiprecision::pow(z0, static_cast<unsigned>(e < 0 ? -e : e));
        if (e >= 0) {
            sum += Rational(c * power);
        } else {
            sum += Rational(c) / Rational(power);
        }
    }
    return sum;
}

Integer lp_eval_unit(const LaurentPoly& p, int z0) {
    if (z0 != 1 && z0 != -1) throw std::domain_error("lp_eval_unit: z0 must be +1 or -1");
    Integer sum = 0;
    for (const auto& [e, c] : p.terms()) {
        if (z0 == -1 && (e % 2 != 0)) {
            sum -= c;
        } else {
            sum += c;
        }
    }
    return sum;
}

LaurentPoly lp_invert_var(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> terms(p.terms().rbegin(), p.terms().rend());
    for (auto& t : terms) t.first = -t.first;
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly geometric_z_sum(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("geometric_z_sum: n must be nonnegative");
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (std::int64_t e = 0; e < n; ++e) terms.emplace_back(e, 1);
    return LaurentPoly::from_terms(std::move(terms));
}

void LaurentAccumulator::add_product(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return;
    products_.push_back({&p, &q});
}

void LaurentAccumulator::add(const LaurentPoly& p) {
    if (!p.is_zero()) sums_.push_back(&p);
}

LaurentPoly LaurentAccumulator::take() {
    Exponent lo = std::numeric_limits<Exponent>::max();
    Exponent hi = std::numeric_limits<Exponent>::min();
    for (const auto& [p, q] : products_) {
        lo = std::min(lo, p->min_exp() + q->min_exp());
        hi = std::max(hi, p->max_exp() + q->max_exp());
    }
    for (const auto* p : sums_) {
        lo = std::min(lo, p->min_exp());
        hi = std::max(hi, p->max_exp());
    }
    LaurentPoly result;
    if (lo > hi) {
        products_.clear();
        sums_.clear();
        return result;
    }
    std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [p, q] : products_) {
        for (const auto& [ep, cp] : p->terms()) {
            for (const auto& [eq, cq] : q->terms()) {
                dense[static_cast<std::size_t>(ep + eq - lo)] += cp * cq;
            }
        }
    }
    for (const auto* p : sums_) {
        for (const auto& [e, c] : p->terms()) dense[static_cast<std::size_t>(e - lo)] += c;
    }
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) terms.emplace_back(lo + static_cast<Exponent>(i), std::move(dense[i]));
    }
    products_.clear();
    sums_.clear();
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace qhecke
