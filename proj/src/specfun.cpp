#include "qhecke/specfun.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qhecke/errors.hpp"

namespace qhecke {

namespace {

Monomial mono(int sign, Exponent z, int q) { return {sign, z, q}; }

// f * (1 - z q^k)^-1 (1 - z^-1 q^k)^-1
QSeries div_pair(const QSeries& f, int k) {
    return div_binomial(div_binomial(f, mono(1, 1, k)), mono(1, -1, k));
}

}  // namespace

QSeries build_R(Order N) {
    QSeries sum(N);
    QSeries d = QSeries::one(N);
    for (int n = 0; n * n <= N; ++n) {
        if (n > 0) d = div_pair(d, n);
        sum += qs_shift_q(d, n * n);
    }
    return sum;
}

QSeries build_H(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);
    for (int n = 0; n * (n + 1) / 2 <= N; ++n) {
        if (n > 0) t = div_pair(mul_binomial(t, mono(-1, 0, n - 1)), n);
        sum += qs_shift_q(t, n * (n + 1) / 2);
    }
    return sum;
}

namespace {

// sum_n sign^n (numerator;q^2)_n q^{n^2} / ((zq^2;q^2)_n (z^-1 q^2;q^2)_n) with
// numerator factor (1 - num_sign q^{2k-1}).
QSeries base2_rank_sum(Order N, int alternating, int num_sign) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);
    for (int n = 0; n * n <= N; ++n) {
        if (n > 0) t = div_pair(mul_binomial(t, mono(num_sign, 0, 2 * n - 1)), 2 * n);
        QSeries term = qs_shift_q(t, n * n);
        if (alternating < 0 && n % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

}  // namespace

QSeries build_K(Order N) { return base2_rank_sum(N, -1, 1); }

QSeries build_N2_rank(Order N) { return base2_rank_sum(N, 1, -1); }

QSeries build_g_cleared(Order N) {
    QSeries sum(N);
    for (int n = 0; n * n <= N; ++n) {
        const Order left = N - n * n;
        QSeries den = pochhammer(mono(1, 1, 1), n, left) * pochhammer(mono(1, -1, 1), n, left);
        QSeries term = qs_invert(den);
        QSeries shifted(N);
        for (int k = 0; k <= left; ++k) shifted.at(k + n * n) = term[k];
        sum += shifted;
    }
    return sum;
}

QSeries build_f_mock3(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);
    for (int n = 0; n * n <= N; ++n) {
        if (n > 0) {
            t = div_binomial(div_binomial(t, mono(-1, 0, n)), mono(-1, 0, n));
        }
        sum += qs_shift_q(t, n * n);
    }
    return sum;
}

QSeries build_mu_mock2(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);
    for (int n = 0; n * n <= N; ++n) {
        if (n > 0) {
            t = mul_binomial(t, mono(1, 0, 2 * n - 1));
            t = div_binomial(div_binomial(t, mono(-1, 0, 2 * n)), mono(-1, 0, 2 * n));
        }
        QSeries term = qs_shift_q(t, n * n);
        if (n % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

QSeries build_S_def(Order N) {
    // P_n = (q^{n+1})_inf / ((zq^n)_inf (z^-1 q^n)_inf), descending from P_{N+1} = 1.
    QSeries sum(N);
    QSeries p = QSeries::one(N);
    for (int n = N; n >= 1; --n) {
        p = div_pair(mul_binomial(p, mono(1, 0, n + 1)), n);
        sum += qs_shift_q(p, n);
    }
    return sum;
}

QSeries build_S_formula(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);  // 1/(q)_n
    for (int n = 1; n * (n + 1) / 2 <= N; ++n) {
        t = div_binomial(t, mono(1, 0, n));
        QSeries term = div_binomial(t, mono(1, -1, n)) * geometric_z_sum(n);
        term = qs_shift_q(term, n * (n + 1) / 2);
        if (n % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return inv_pochhammer(mono(1, 1, 1), kInfinity, N) * sum;
}

QSeries build_SBar_def(Order N) {
    QSeries sum(N);
    QSeries p = QSeries::one(N);
    for (int n = N; n >= 1; --n) {
        p = div_pair(mul_binomial(p, mono(1, 0, 2 * n + 2)), n);
        sum += qs_shift_q(p, n);
    }
    return sum;
}

QSeries build_S2_def(Order N) {
    QSeries sum(N);
    QSeries p = QSeries::one(N);
    for (int n = N / 2; n >= 1; --n) {
        p = mul_binomial(mul_binomial(p, mono(1, 0, 2 * n + 2)), mono(-1, 0, 2 * n + 1));
        p = div_pair(p, 2 * n);
        sum += qs_shift_q(p, 2 * n);
    }
    return sum;
}

QSeries build_crank_style(CrankKind kind, Order N) {
    switch (kind) {
        case CrankKind::Plain:
            return pochhammer(mono(1, 0, 1), kInfinity, N) *
                   inv_pochhammer(mono(1, 1, 1), kInfinity, N) *
                   inv_pochhammer(mono(1, -1, 1), kInfinity, N);
        case CrankKind::Overpartition:
            return pochhammer(mono(-1, 0, 1), kInfinity, N) *
                   pochhammer(mono(1, 0, 1), kInfinity, N) *
                   inv_pochhammer(mono(1, 1, 1), kInfinity, N) *
                   inv_pochhammer(mono(1, -1, 1), kInfinity, N);
        case CrankKind::M2:
            return pochhammer(mono(-1, 0, 1), kInfinity, N, 2) *
                   pochhammer(mono(1, 0, 2), kInfinity, N, 2) *
                   inv_pochhammer(mono(1, 1, 2), kInfinity, N, 2) *
                   inv_pochhammer(mono(1, -1, 2), kInfinity, N, 2);
    }
    throw InternalAssertion("build_crank_style: bad kind");
}

QSeries build_partial_theta(Order N) {
    QSeries f(N);
    for (int n = 0; n * (n + 1) / 2 <= N; ++n) {
        f.at(n * (n + 1) / 2) += LaurentPoly::monomial(n % 2 == 0 ? 1 : -1, n);
    }
    return f;
}

namespace {

// 1 + 2 sum_{j>=1} (-1)^j z^{step j} q^{j^2}
QSeries false_theta_rhs(Order N, int step) {
    QSeries f = QSeries::one(N);
    for (int j = 1; j * j <= N; ++j) {
        f.at(j * j) += LaurentPoly::monomial(j % 2 == 0 ? 2 : -2, static_cast<Exponent>(step) * j);
    }
    return f;
}

QSeries false_t1a_lhs(Order N) {
    // A_n = (-z;q)_{n+1} / (zq)_n, kept modulo z^{N-n+1}.
    QSeries sum(N);
    QSeries a = mul_binomial(QSeries::one(N), mono(-1, 1, 0));
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            a = div_binomial(mul_binomial(a, mono(-1, 1, n)), mono(1, 1, n));
            a = qs_truncate_z_above(a, N - n);
        }
        sum += a * LaurentPoly::monomial(n % 2 == 0 ? 1 : -1, n);
    }
    return qs_truncate_z_above(sum, N);
}

QSeries false_t2_lhs(Order N) {
    // B_n = (z;q^2)_{n+1} (q;q^2)_n / (-zq;q)_{2n+1}
    QSeries sum(N);
    QSeries b = div_binomial(mul_binomial(QSeries::one(N), mono(1, 1, 0)), mono(-1, 1, 1));
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            b = mul_binomial(mul_binomial(b, mono(1, 1, 2 * n)), mono(1, 0, 2 * n - 1));
            b = div_binomial(div_binomial(b, mono(-1, 1, 2 * n)), mono(-1, 1, 2 * n + 1));
            b = qs_truncate_z_above(b, N - n);
        }
        sum += b * LaurentPoly::monomial(1, n);
    }
    return qs_truncate_z_above(sum, N);
}

QSeries raml1_lhs(Order N) {
    // C_n = (z;q^2)_n / ((zq;q)_n (q)_n)
    QSeries sum(N);
    QSeries c = QSeries::one(N);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            c = mul_binomial(c, mono(1, 1, 2 * n - 2));
            c = div_binomial(div_binomial(c, mono(1, 1, n)), mono(1, 0, n));
        }
        sum += qs_shift_q(c, n);
    }
    return pochhammer(mono(1, 0, 1), kInfinity, N) * pochhammer(mono(1, 1, 1), kInfinity, N, 2) *
           sum;
}

QSeries raml1a_lhs(Order N, bool signed_weight) {
    // D_n = (-zq)_{2n} / ((z^2 q^2;q^2)_n (q^2;q^2)_n)
    QSeries sum(N);
    QSeries d = QSeries::one(N);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            d = mul_binomial(mul_binomial(d, mono(-1, 1, 2 * n - 1)), mono(-1, 1, 2 * n));
            d = div_binomial(div_binomial(d, mono(1, 2, 2 * n)), mono(1, 0, 2 * n));
        }
        sum += signed_weight ? qs_shift_q(d, n) * LaurentPoly::monomial(n % 2 == 0 ? 1 : -1, n)
                             : qs_shift_q(d, n);
    }
    return pochhammer(mono(1, 1, 1), kInfinity, N) * inv_pochhammer(mono(-1, 0, 1), kInfinity, N) *
           sum;
}

QSeries entry931_lhs(Order N) {
    // E_n = (-zq;q^2)_n / (-zq^2;q^2)_n
    QSeries sum(N);
    QSeries e = QSeries::one(N);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            e = div_binomial(mul_binomial(e, mono(-1, 1, 2 * n - 1)), mono(-1, 1, 2 * n));
        }
        sum += qs_shift_q(e, n) * LaurentPoly::monomial(n % 2 == 0 ? 1 : -1, n);
    }
    return sum;
}

using SideBuilder = std::function<QSeries(Order)>;

const std::map<std::string, SideBuilder>& side_table() {
    static const std::map<std::string, SideBuilder> table = {
        {"falseT1a.lhs", false_t1a_lhs},
        {"falseT1a.rhs",
         [](Order N) { return qs_truncate_z_above(false_theta_rhs(N, 2), N); }},
        {"falseT2.lhs", false_t2_lhs},
        {"falseT2.rhs", [](Order N) { return qs_truncate_z_above(false_theta_rhs(N, 1), N); }},
        {"falseT2a.lhs", false_t2_lhs},
        {"falseT2a.rhs", [](Order N) { return qs_truncate_z_above(raml1_lhs(N), N); }},
        {"RAML1.lhs", raml1_lhs},
        {"RAML1.rhs", [](Order N) { return false_theta_rhs(N, 1); }},
        {"RAML1A.lhs", [](Order N) { return raml1a_lhs(N, true); }},
        {"RAML1A.rhs", build_partial_theta},
        {"RAML1A.corrected.lhs", [](Order N) { return raml1a_lhs(N, false); }},
        {"RAML1B.lhs", [](Order N) { return raml1a_lhs(N, true); }},
        {"RAML1B.rhs", entry931_lhs},
        {"RAML1B.corrected.lhs", [](Order N) { return raml1a_lhs(N, false); }},
        {"Entry931.lhs", entry931_lhs},
        {"Entry931.rhs", build_partial_theta},
    };
    return table;
}

}  // namespace

QSeries build_false_theta_sides(const std::string& id, Order N) {
    const auto& table = side_table();
    auto it = table.find(id);
    if (it == table.end()) throw UnknownSeriesId("unknown series side: " + id);
    return it->second(N);
}

std::vector<std::string> false_theta_side_ids() {
    std::vector<std::string> ids;
    for (const auto& [k, v] : side_table()) ids.push_back(k);
    return ids;
}

QSeries build_spt_series(Order N) {
    QSeries sum(N);
    for (int n = 1; n <= N; ++n) {
        for (int k = n; k <= N; k += n) sum.at(k) += LaurentPoly(n);
    }
    for (int n = 1; n * (3 * n + 1) / 2 <= N; ++n) {
        QSeries t = mul_binomial(QSeries::one(N), mono(-1, 0, n));
        t = div_binomial(div_binomial(t, mono(1, 0, n)), mono(1, 0, n));
        t = qs_shift_q(t, n * (3 * n + 1) / 2);
        if (n % 2 == 1) {
            sum -= t;
        } else {
            sum += t;
        }
    }
    return inv_pochhammer(mono(1, 0, 1), kInfinity, N) * sum;
}

QSeries build_spt_series_product(Order N) {
    QSeries sum(N);
    QSeries poch = QSeries::one(N);  // (q)_{n-1}
    for (int n = 1; n <= N; ++n) {
        if (n > 1) poch = mul_binomial(poch, mono(1, 0, n - 1));
        sum += qs_shift_q(div_binomial(poch, mono(1, 0, n)), n);
    }
    return inv_pochhammer(mono(1, 0, 1), kInfinity, N) * sum;
}

QSeries build_sptbar_series(Order N) {
    QSeries sum(N);
    QSeries p = QSeries::one(N);  // (-q^{n+1})_inf / (q^{n+1})_inf
    for (int n = N; n >= 1; --n) {
        if (n + 1 <= N) p = div_binomial(mul_binomial(p, mono(-1, 0, n + 1)), mono(1, 0, n + 1));
        QSeries t = div_binomial(div_binomial(p, mono(1, 0, n)), mono(1, 0, n));
        sum += qs_shift_q(t, n);
    }
    return sum;
}

QSeries build_m2spt_series(Order N) {
    QSeries sum(N);
    QSeries p = QSeries::one(N);  // (-q^{2n+1};q^2)_inf / (q^{2n+2};q^2)_inf
    for (int n = N / 2; n >= 1; --n) {
        p = div_binomial(mul_binomial(p, mono(-1, 0, 2 * n + 1)), mono(1, 0, 2 * n + 2));
        QSeries t = div_binomial(div_binomial(p, mono(1, 0, 2 * n)), mono(1, 0, 2 * n));
        sum += qs_shift_q(t, 2 * n);
    }
    return sum;
}

namespace {

const std::map<std::string, std::function<QSeries(Order)>>& named_table() {
    static const std::map<std::string, std::function<QSeries(Order)>> table = {
        {"R", build_R},
        {"H", build_H},
        {"K", build_K},
        {"G_CLEARED", build_g_cleared},
        {"F_MOCK3", build_f_mock3},
        {"MU_MOCK2", build_mu_mock2},
        {"S_DEF", build_S_def},
        {"S_FORMULA", build_S_formula},
        {"SBAR_DEF", build_SBar_def},
        {"S2_DEF", build_S2_def},
        {"CRANK_STYLE", [](Order N) { return build_crank_style(CrankKind::Plain, N); }},
        {"NB_RANK", build_H},
        {"MB_CRANK", [](Order N) { return build_crank_style(CrankKind::Overpartition, N); }},
        {"N2_RANK", build_N2_rank},
        {"M2_CRANK", [](Order N) { return build_crank_style(CrankKind::M2, N); }},
        {"PARTIAL_THETA", build_partial_theta},
        {"SPT", build_spt_series},
        {"SPTBAR", build_sptbar_series},
        {"M2SPT", build_m2spt_series},
    };
    return table;
}

}  // namespace

std::vector<std::string> series_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : named_table()) names.push_back(k);
    for (const auto& id : false_theta_side_ids()) names.push_back(id);
    return names;
}

QSeries build_named_series(const std::string& name, Order N) {
    const auto& table = named_table();
    auto it = table.find(name);
    if (it != table.end()) return it->second(N);
    return build_false_theta_sides(name, N);
}

}  // namespace qhecke
