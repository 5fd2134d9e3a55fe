#include "qhecke/bailey.hpp"

#include "qhecke/errors.hpp"

namespace qhecke {

namespace {

Monomial mono(int sign, Exponent z, int q) { return {sign, z, q}; }

QSeries aq_inv(int n, Order N) { return inv_pochhammer(mono(1, 1, 1), n, N); }
QSeries q_inv(int n, Order N) { return inv_pochhammer(mono(1, 0, 1), n, N); }

// c * a^e q^k as a series.
QSeries aq_term(const Integer& c, Exponent e, int k, Order N) {
    return QSeries::term(LaurentPoly::monomial(c, e), k, N);
}

BaileyReport compare(const std::string& check, std::int64_t index, const QSeries& lhs,
                     const QSeries& rhs) {
    BaileyReport r{check, true, std::nullopt};
    if (auto m = first_mismatch(lhs, rhs)) {
        m->index = index;
        r.ok = false;
        r.mismatch = m;
    }
    return r;
}

}  // namespace

void require(const BaileyReport& r) {
    if (r.ok) return;
    throw VerificationFailed(r.check + " fails at " + describe(*r.mismatch));
}

BaileyPair pair1() {
    BaileyPair p;
    p.name = "pair1";
    p.alpha = [](int n, Order N) {
        if (n == 0) return QSeries::one(N);
        return aq_term(1, n, n * n + n, N) - aq_term(1, n - 1, n * n - n, N);
    };
    p.beta = [](int n, Order N) {
        return qs_shift_q(q_inv(n, N) * aq_inv(n, N), n);
    };
    return p;
}

BaileyPair limit_transform(const BaileyPair& p) {
    BaileyPair t;
    t.name = p.name + "'";
    t.cleared_by_one_minus_a = p.cleared_by_one_minus_a;
    auto alpha = p.alpha;
    auto beta = p.beta;
    t.alpha = [alpha](int n, Order N) {
        return alpha(n, N) * LaurentPoly::monomial(1, n) * QSeries::term(LaurentPoly(1), n * n, N);
    };
    t.beta = [beta](int n, Order N) {
        QSeries sum(N);
        for (int j = 0; j <= n && j * j <= N; ++j) {
            sum += qs_shift_q(beta(j, N) * q_inv(n - j, N), j * j) * LaurentPoly::monomial(1, j);
        }
        return sum;
    };
    return t;
}

BaileyReport verify_pair(const BaileyPair& p, int n_max, Order N) {
    for (int n = 0; n <= n_max; ++n) {
        QSeries rhs(N);
        for (int r = 0; r <= n; ++r) rhs += p.alpha(r, N) * q_inv(n - r, N) * aq_inv(n + r, N);
        BaileyReport rep = compare("Bailey pair " + p.name, n, p.beta(n, N), rhs);
        if (!rep.ok) return rep;
    }
    return {"Bailey pair " + p.name, true, std::nullopt};
}

BaileyReport verify_limit_sum(const BaileyPair& p, Order N) {
    QSeries lhs(N);
    QSeries sum(N);
    for (int j = 0; j * j <= N; ++j) {
        const LaurentPoly aj = LaurentPoly::monomial(1, j);
        lhs += qs_shift_q(p.beta(j, N), j * j) * aj;
        sum += qs_shift_q(p.alpha(j, N), j * j) * aj;
    }
    return compare("limit sum " + p.name, 0, lhs, inv_pochhammer(mono(1, 1, 1), kInfinity, N) * sum);
}

BaileyReport verify_A1(int n_max, Order N) {
    for (int n = 0; n <= n_max; ++n) {
        QSeries lhs(N);
        QSeries rhs(N);
        for (int j = 0; j <= n; ++j) {
            const LaurentPoly aj = LaurentPoly::monomial(1, j);
            lhs += qs_shift_q(q_inv(n - j, N) * q_inv(j, N) * aq_inv(j, N), j * j + j) * aj;
            rhs += qs_shift_q(q_inv(n - j, N), j * (j + 1) / 2) *
                   LaurentPoly::monomial(j % 2 == 0 ? 1 : -1, j);
        }
        rhs = rhs * aq_inv(n, N);
        BaileyReport rep = compare("A1", n, lhs, rhs);
        if (!rep.ok) return rep;
    }
    return {"A1", true, std::nullopt};
}

BaileyReport verify_slater_cleared(int n_max, Order N) {
    for (int n = 0; n <= n_max; ++n) {
        QSeries lhs(N);
        for (int r = 0; r <= n; ++r) {
            QSeries t = mul_binomial(q_inv(n - r, N) * aq_inv(n + r, N), mono(1, 1, 2 * r));
            lhs += qs_shift_q(t, r * r - r) * LaurentPoly::monomial(1, r);
        }
        QSeries rhs = n == 0 ? mul_binomial(QSeries::one(N), mono(1, 1, 0))
                             : q_inv(n, N) * aq_inv(n - 1, N);
        BaileyReport rep = compare("slaterid (cleared)", n, lhs, rhs);
        if (!rep.ok) return rep;
    }
    return {"slaterid (cleared)", true, std::nullopt};
}

QSeries niceid_lhs(int k, Order N) {
    QSeries sum(N);
    for (int j = 0; j * j + j * k <= N; ++j) {
        QSeries inner(N);
        for (int n = 0; n <= j; ++n) {
            QSeries t = qs_shift_q(q_inv(j + k, N) * q_inv(j - n, N), n * (n + 1) / 2 + n * k);
            if (n % 2 == 0) {
                inner += t;
            } else {
                inner -= t;
            }
        }
        sum += qs_shift_q(inner, j * j + j * k);
    }
    return sum;
}

QSeries niceid_rhs(int k, Order N) {
    QSeries theta(N);
    for (int r = 0; 3 * r * r + 3 * r * k + r <= N; ++r) {
        theta.at(3 * r * r + 3 * r * k + r) += LaurentPoly(1);
    }
    for (int r = 1; 3 * r * r + 3 * r * k - r - k <= N; ++r) {
        theta.at(3 * r * r + 3 * r * k - r - k) -= LaurentPoly(1);
    }
    return inv_pochhammer(mono(1, 0, 1), kInfinity, N) * theta;
}

BaileyReport verify_niceid(int k_max, Order N) {
    for (int k = 0; k <= k_max; ++k) {
        BaileyReport rep = compare("niceid", k, niceid_lhs(k, N), niceid_rhs(k, N));
        if (!rep.ok) return rep;
    }
    return {"niceid", true, std::nullopt};
}

QSeries ffw_lhs(Order N) {
    return pochhammer(mono(1, 0, 1), kInfinity, N) * inv_pochhammer(mono(1, -1, 1), kInfinity, N);
}

QSeries ffw_rhs(Order N) {
    QSeries sum = QSeries::one(N);
    QSeries t = QSeries::one(N);  // 1/(q)_n
    const LaurentPoly one_minus_zinv = LaurentPoly(1) - LaurentPoly::monomial(1, -1);
    for (int n = 1; n * (n + 1) / 2 <= N; ++n) {
        t = div_binomial(t, mono(1, 0, n));
        QSeries term = qs_shift_q(div_binomial(t, mono(1, -1, n)), n * (n + 1) / 2) * one_minus_zinv;
        if (n % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

}  // namespace qhecke
