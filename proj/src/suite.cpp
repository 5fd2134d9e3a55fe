#include "qhecke/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "qhecke/bailey.hpp"
#include "qhecke/errors.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/specfun.hpp"

namespace qhecke {

namespace {

Monomial mono(int sign, Exponent z, int q) { return {sign, z, q}; }

QSeries prod(int sign, Exponent z, int q, Order N, int step = 1) {
    return pochhammer(mono(sign, z, q), kInfinity, N, step);
}
QSeries inv_prod(int sign, Exponent z, int q, Order N, int step = 1) {
    return inv_pochhammer(mono(sign, z, q), kInfinity, N, step);
}

QSeries q_inf(Order N) { return prod(1, 0, 1, N); }
QSeries q2_inf(Order N) { return prod(1, 0, 2, N, 2); }

// (zq)_inf (z^-1 q)_inf
QSeries z_pair(Order N) { return prod(1, 1, 1, N) * prod(1, -1, 1, N); }
// (zq^2;q^2)_inf (z^-1 q^2;q^2)_inf
QSeries z_pair2(Order N) { return prod(1, 1, 2, N, 2) * prod(1, -1, 2, N, 2); }

LaurentPoly zpoly(std::initializer_list<std::pair<Exponent, long long>> terms) {
    std::vector<LaurentPoly::Term> t;
    for (const auto& [e, c] : terms) t.emplace_back(e, Integer(c));
    return LaurentPoly::from_terms(std::move(t));
}

const LaurentPoly& one_plus_z() {
    static const LaurentPoly p = zpoly({{0, 1}, {1, 1}});
    return p;
}
const LaurentPoly& one_plus_zinv() {
    static const LaurentPoly p = zpoly({{-1, 1}, {0, 1}});
    return p;
}
// (1 - z)(1 - z^-1) = -z^-1 + 2 - z
const LaurentPoly& pole_pair() {
    static const LaurentPoly p = zpoly({{-1, -1}, {0, 2}, {1, -1}});
    return p;
}

SeriesBuilder tmpl(const std::string& id) {
    return [id](Order N) { return eval_template(template_catalog(id), N); };
}

SeriesBuilder named(const std::string& name) {
    return [name](Order N) { return build_named_series(name, N); };
}

// sum_{n>=0} q^{step n(n+1)/2}
QSeries triangular(Order N, int step = 1) {
    QSeries f(N);
    for (int n = 0; step * n * (n + 1) / 2 <= N; ++n) f.at(step * n * (n + 1) / 2) += LaurentPoly(1);
    return f;
}

QSeries signed_theta(Order N) {
    QSeries f = QSeries::one(N);
    for (int n = 1; n * n <= N; ++n) f.at(n * n) += LaurentPoly(n % 2 == 0 ? 2 : -2);
    return f;
}

// ---- two-variable left sides ----

QSeries newrank_lhs(Order N) { return z_pair(N) * q_inf(N) * build_R(N); }
QSeries conj1_lhs(Order N) { return one_plus_z() * (z_pair(N) * q_inf(N) * build_H(N)); }
QSeries conj2_lhs(Order N) { return z_pair2(N) * q2_inf(N) * build_K(N); }
QSeries newsid_lhs(Order N) { return pole_pair() * (z_pair(N) * q_inf(N) * build_S_def(N)); }

QSeries conj1s1_rhs(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);  // (z)_n (z^-1)_n / (q^2;q^2)_n
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            t = mul_binomial(mul_binomial(t, mono(1, 1, n - 1)), mono(1, -1, n - 1));
            t = div_binomial(t, mono(1, 0, 2 * n));
        }
        sum += qs_shift_q(t, n);
    }
    return one_plus_z() * (q2_inf(N) * q_inf(N) * sum);
}

QSeries conj2s1_rhs(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);  // (zq;q^2)_n (z^-1 q;q^2)_n / ((q;q^2)_n (q^2;q^2)_n)
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            t = mul_binomial(mul_binomial(t, mono(1, 1, 2 * n - 1)), mono(1, -1, 2 * n - 1));
            t = div_binomial(div_binomial(t, mono(1, 0, 2 * n - 1)), mono(1, 0, 2 * n));
        }
        sum += qs_shift_q(t, n);
    }
    return q_inf(N) * inv_prod(-1, 0, 1, N) * sum;
}

QSeries newsb_lhs(Order N) {
    return one_plus_z() * (pole_pair() * (z_pair(N) * q_inf(N) * build_SBar_def(N)));
}

QSeries news2_lhs(Order N) {
    return pole_pair() * (z_pair2(N) * q2_inf(N) * qs_substitute_neg_q(build_S2_def(N)));
}

QSeries andid_lhs(Order N) {
    const QSeries q = q_inf(N);
    return q * q * inv_prod(1, 1, 1, N) * inv_prod(1, -1, 1, N);
}

QSeries mortid1_lhs(Order N) {
    QSeries sum(N);
    QSeries t = div_binomial(QSeries::one(N), mono(1, 0, 1));
    for (int n = 0; 2 * n <= N; ++n) {
        if (n > 0) {
            t = mul_binomial(mul_binomial(t, mono(-1, 1, 2 * n - 1)), mono(-1, -1, 2 * n - 1));
            t = div_binomial(t, mono(1, 0, 2 * n + 1));
        }
        sum += qs_shift_q(t, 2 * n);
    }
    return one_plus_zinv() * (q_inf(N) * sum);
}

// den_sign = 1 gives the printed (q;q)_{2n+1}, -1 the corrected (-q;q)_{2n+1}.
QSeries mortid2_lhs(Order N, int den_sign) {
    QSeries sum(N);
    QSeries t = div_binomial(QSeries::one(N), mono(den_sign, 0, 1));
    for (int n = 0; 2 * n <= N; ++n) {
        if (n > 0) {
            t = mul_binomial(mul_binomial(t, mono(1, 1, 2 * n - 1)), mono(1, -1, 2 * n - 1));
            t = div_binomial(div_binomial(t, mono(den_sign, 0, 2 * n)), mono(den_sign, 0, 2 * n + 1));
        }
        sum += qs_shift_q(t, 2 * n);
    }
    const QSeries pre = prod(-1, 0, 1, N, 4) * prod(-1, 0, 3, N, 4) * prod(1, 0, 4, N, 4);
    return one_plus_zinv() * (pre * sum);
}

QSeries mortid3_printed_lhs(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);  // (-zq;q)_n (-z^-1 q;q^2)_n / (q;q^2)_n
    for (int n = 0; n + 1 <= N; ++n) {
        if (n > 0) {
            t = mul_binomial(mul_binomial(t, mono(-1, 1, n)), mono(-1, -1, 2 * n - 1));
            t = div_binomial(t, mono(1, 0, 2 * n - 1));
        }
        sum += qs_shift_q(t, n + 1);
    }
    return one_plus_zinv() * (prod(1, 0, 1, N, 2) * q_inf(N) * sum);
}

QSeries mortid3_corrected_lhs(Order N) {
    QSeries sum(N);
    QSeries t = div_binomial(QSeries::one(N), mono(1, 0, 1));  // (-zq)_n (-z^-1 q)_n / (q;q^2)_{n+1}
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            t = mul_binomial(mul_binomial(t, mono(-1, 1, n)), mono(-1, -1, n));
            t = div_binomial(t, mono(1, 0, 2 * n + 1));
        }
        sum += qs_shift_q(t, n);
    }
    return one_plus_zinv() * (prod(1, 0, 1, N, 2) * q_inf(N) * sum);
}

// (1+z) sum (-zq)_n / (zq)_n (-z)^n, kept modulo z^(N+1)
QSeries rogfin_lhs(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) t = div_binomial(mul_binomial(t, mono(-1, 1, n)), mono(1, 1, n));
        sum += t * LaurentPoly::monomial(n % 2 == 0 ? 1 : -1, n);
    }
    return qs_truncate_z_above(one_plus_z() * sum, N);
}

QSeries rogfin_rhs(Order N) {
    QSeries f(N);
    for (int n = 0; n * n <= N; ++n) {
        const int s = n % 2 == 0 ? 1 : -1;
        f.at(n * n) += LaurentPoly::monomial(s, 2 * n);
        if (n * n + 2 * n + 1 <= N) f.at(n * n + 2 * n + 1) += LaurentPoly::monomial(-s, 2 * n + 2);
    }
    return qs_truncate_z_above(f, N);
}

// ---- one-variable left sides ----

QSeries hrnewv2_lhs(Order N) {
    QSeries sum(N);
    QSeries t = QSeries::one(N);  // 1/(-q;q)_n
    for (int n = 1; n * (n + 1) / 2 <= N; ++n) {
        t = div_binomial(t, mono(-1, 0, n));
        sum += qs_shift_q(div_binomial(t, mono(-1, 0, n)), n * (n + 1) / 2);
    }
    return triangular(N) * sum;
}

QSeries mortid1b_lhs(Order N) {
    QSeries sum(N);
    QSeries p = QSeries::one(N);  // (q;q^2)_n
    for (int n = 0; 2 * n <= N; ++n) {
        if (n > 0) p = mul_binomial(p, mono(1, 0, 2 * n - 1));
        sum += qs_shift_q(div_binomial(p, mono(1, 0, 2 * n + 1)), 2 * n);
    }
    return q_inf(N) * sum;
}

QSeries mortid2b_lhs(Order N) {
    QSeries sum(N);
    QSeries p = QSeries::one(N);  // (-q;q^2)_n / (-q^2;q^2)_n
    for (int n = 0; 2 * n <= N; ++n) {
        if (n > 0) p = div_binomial(mul_binomial(p, mono(-1, 0, 2 * n - 1)), mono(-1, 0, 2 * n));
        sum += qs_shift_q(div_binomial(p, mono(-1, 0, 2 * n + 1)), 2 * n);
    }
    return triangular(N) * sum;
}

QSeries mortid3b_lhs(Order N) {
    QSeries sum(N);
    QSeries p = div_binomial(QSeries::one(N), mono(1, 0, 1));  // (q)_n^2 / (q;q^2)_{n+1}
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            p = mul_binomial(mul_binomial(p, mono(1, 0, n)), mono(1, 0, n));
            p = div_binomial(p, mono(1, 0, 2 * n + 1));
        }
        sum += qs_shift_q(p, n);
    }
    return signed_theta(N) * sum;
}

// ---- finite families ----

std::optional<Mismatch> tag(std::optional<Mismatch> m, std::int64_t index) {
    if (m) m->index = index;
    return m;
}

constexpr int kFamilyMax = 10;

QSeries sparse_term(const Integer& c, Exponent z, int q, Order N) {
    return QSeries::term(LaurentPoly::monomial(c, z), q, N);
}

std::optional<Mismatch> check_fjtpv1(Order N) {
    for (int n = 0; n <= kFamilyMax; ++n) {
        const QSeries lhs = one_plus_z() * (pochhammer(mono(1, 1, 0), n, N) *
                                            pochhammer(mono(1, -1, 0), n, N));
        const QSeries q2n = pochhammer(mono(1, 0, 1), 2 * n, N);
        QSeries rhs(N);
        for (int j = -n; j <= n + 1; ++j) {
            const QSeries coeff = q2n * inv_pochhammer(mono(1, 0, 1), n + j, N) *
                                  inv_pochhammer(mono(1, 0, 1), n - j + 1, N);
            const int s = (j + 1) % 2 == 0 ? 1 : -1;
            const QSeries mono_part = sparse_term(s, j, (j * j - 3 * j + 2) / 2, N) -
                                      sparse_term(s, j, (j * j + j) / 2, N);
            rhs += coeff * mono_part;
        }
        if (auto m = first_mismatch(lhs, rhs)) return tag(m, n);
    }
    return std::nullopt;
}

std::optional<Mismatch> check_fjtp(Order N, int step) {
    for (int n = 0; n <= kFamilyMax; ++n) {
        QSeries lhs = step == 1 ? pochhammer(mono(1, 1, 0), n, N) * pochhammer(mono(1, -1, 1), n, N)
                                : pochhammer(mono(1, 1, 1), n, N, 2) *
                                      pochhammer(mono(1, -1, 1), n, N, 2);
        QSeries rhs(N);
        for (int j = -n; j <= n; ++j) {
            const int qe = step == 1 ? j * (j - 1) / 2 : j * j;
            rhs += gauss_binomial(2 * n, n + j, step, N) *
                   sparse_term(j % 2 == 0 ? 1 : -1, j, qe, N);
        }
        if (auto m = first_mismatch(lhs, rhs)) return tag(m, n);
    }
    return std::nullopt;
}

FamilyCheck bailey_family(std::function<BaileyReport(Order)> f) {
    return [f](Order N) -> std::optional<Mismatch> {
        BaileyReport r = f(N);
        if (r.ok) return std::nullopt;
        return r.mismatch;
    };
}

// ---- catalog ----

IdentityRecord pair_record(std::string id, SeriesBuilder lhs, SeriesBuilder rhs, Order order,
                           Variables v, std::string note = {}, std::string group = {}) {
    IdentityRecord r;
    r.id = std::move(id);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.default_order = order;
    r.variables = v;
    r.cleared_note = std::move(note);
    r.variant_group = std::move(group);
    return r;
}

IdentityRecord family_record(std::string id, FamilyCheck f, Order order, Variables v,
                             std::string note = {}) {
    IdentityRecord r;
    r.id = std::move(id);
    r.family = std::move(f);
    r.default_order = order;
    r.variables = v;
    r.cleared_note = std::move(note);
    return r;
}

SeriesBuilder specialized(SeriesBuilder f, int z0, int scale = 1) {
    return [f, z0, scale](Order N) { return qs_specialize_z(f(N), z0) * LaurentPoly(scale); };
}

constexpr auto Z = Variables::Z_AND_Q;
constexpr auto Q = Variables::Q_ONLY;
constexpr Order kTwoVar = 50;
constexpr Order kTwoVarLate = 40;
constexpr Order kOneVar = 300;

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> c;
    auto add = [&c](IdentityRecord r) { c.push_back(std::move(r)); };

    // Hecke-Rogers products.
    add(pair_record("HR1", [](Order N) { return q_inf(N) * q_inf(N); }, tmpl("HR1"), kOneVar, Q));
    for (const char* id : {"HR2", "HR3", "HR4"}) {
        add(pair_record(id, [](Order N) { return q_inf(N) * q2_inf(N); }, tmpl(id), kOneVar, Q));
    }
    add(pair_record("MILid", tmpl("MILid.lhs"), tmpl("MILid.rhs"), kOneVar, Q));
    add(pair_record("cor1", [](Order N) { return q_inf(N) * q_inf(N); }, tmpl("cor1"), kOneVar, Q));

    // Specialisations of the universal functions.
    add(pair_record("R1", specialized(build_R, 1), [](Order N) { return inv_prod(1, 0, 1, N); },
                    kOneVar, Q));
    add(pair_record("H1", specialized(build_H, 1),
                    [](Order N) {
                        const QSeries i = inv_prod(1, 0, 1, N);
                        return q2_inf(N) * i * i;
                    },
                    kOneVar, Q));
    add(pair_record("K1", specialized(build_K, 1),
                    [](Order N) {
                        const QSeries i = inv_prod(1, 0, 2, N, 2);
                        return q_inf(N) * i * i;
                    },
                    kOneVar, Q));
    add(pair_record("K1b",
                    [](Order N) { return qs_substitute_neg_q(qs_specialize_z(build_K(N), 1)); },
                    [](Order N) { return prod(-1, 0, 1, N, 2) * inv_prod(1, 0, 2, N, 2); },
                    kOneVar, Q));
    add(pair_record("fdef", build_f_mock3, specialized(build_R, -1), kOneVar, Q));
    add(pair_record("gR", build_g_cleared, build_R, kTwoVar, Z,
                    "(1-x)(x g(x,q) + 1) compared with R(x,q)"));

    // Two-variable generalisations.
    add(pair_record("NEWrankid", newrank_lhs, tmpl("NEWrankid"), kTwoVar, Z));
    add(pair_record("CONJ1a", conj1_lhs, tmpl("CONJ1a"), kTwoVar, Z));
    add(pair_record("CONJ1b", conj1_lhs, tmpl("CONJ1b"), kTwoVar, Z));
    add(pair_record("CONJ2", conj2_lhs, tmpl("CONJ2"), kTwoVar, Z));
    add(pair_record("CONJ1a=CONJ1b", tmpl("CONJ1a"), tmpl("CONJ1b"), 60, Z));
    add(pair_record("NEWrankid@z=1", specialized(tmpl("NEWrankid"), 1), tmpl("HR1"), 200, Q));
    add(pair_record("CONJ1a@z=1", specialized(tmpl("CONJ1a"), 1), specialized(tmpl("HR2"), 1, 2),
                    200, Q));
    add(pair_record("CONJ1b@z=1", specialized(tmpl("CONJ1b"), 1), specialized(tmpl("HR3"), 1, 2),
                    200, Q));
    add(pair_record("CONJ2@z=1", specialized(tmpl("CONJ2"), 1), tmpl("HR4"), 200, Q));
    add(pair_record("NEWrankid@z=-1", specialized(tmpl("NEWrankid"), -1), tmpl("HRf"), 200, Q));
    add(pair_record("CONJ2@z=-1", specialized(tmpl("CONJ2"), -1), tmpl("HRmu"), 200, Q));

    // Mock theta consequences.
    add(pair_record("HRf", build_f_mock3,
                    [](Order N) {
                        const QSeries i = inv_prod(1, 0, 2, N, 2);
                        return q_inf(N) * i * i * eval_template(template_catalog("HRf"), N);
                    },
                    kOneVar, Q));
    add(pair_record("HRfv2", [](Order N) { return triangular(N) * build_f_mock3(N); },
                    tmpl("HRfv2"), kOneVar, Q));
    add(pair_record("HRmu", build_mu_mock2,
                    [](Order N) {
                        const QSeries i = inv_prod(1, 0, 4, N, 4);
                        return q2_inf(N) * i * i * eval_template(template_catalog("HRmu"), N);
                    },
                    kOneVar, Q));
    add(pair_record("HRmuv2", [](Order N) { return triangular(N, 2) * build_mu_mock2(N); },
                    tmpl("HRmuv2"), kOneVar, Q));
    add(pair_record("HRnewv2", hrnewv2_lhs, tmpl("HRnewv2"), kOneVar, Q));

    // spt-crank.
    add(pair_record("Szqid2", build_S_def, build_S_formula, kTwoVar, Z));
    add(pair_record("FFWid", ffw_lhs, ffw_rhs, kTwoVar, Z));
    add(pair_record("NEWSid", newsid_lhs, tmpl("NEWSid"), kTwoVar, Z));
    add(pair_record("EQNEWSid", newsid_lhs, tmpl("EQNEWSid"), kTwoVar, Z));
    add(pair_record("SRids", newrank_lhs,
                    [](Order N) { return newsid_lhs(N) + q_inf(N) * q_inf(N); }, kTwoVar, Z));
    add(pair_record("NEWSPTid",
                    [](Order N) {
                        const QSeries q = q_inf(N);
                        return q * q * q * build_spt_series(N);
                    },
                    tmpl("NEWSPTid"), kOneVar, Q));
    add(pair_record("SPHR1", tmpl("SPHR1.lhs"), tmpl("SPHR1.rhs"), 60, Z));
    add(pair_record("SPHR2", tmpl("SPHR2.lhs"), tmpl("SPHR2.rhs"), 60, Z));

    // Bailey machinery.
    add(family_record("pair1", bailey_family([](Order N) { return verify_pair(pair1(), 8, N); }),
                      kTwoVarLate, Z, "a occupies the Laurent variable"));
    add(family_record("pair1-limit",
                      bailey_family([](Order N) {
                          return verify_pair(limit_transform(pair1()), 8, N);
                      }),
                      kTwoVarLate, Z, "a occupies the Laurent variable"));
    add(family_record("baileypairlimsum",
                      bailey_family([](Order N) { return verify_limit_sum(pair1(), N); }),
                      kTwoVarLate, Z, "a occupies the Laurent variable"));
    add(family_record("A1", bailey_family([](Order N) { return verify_A1(12, N); }), kTwoVarLate,
                      Z, "n <= 12"));
    add(family_record("slaterid", bailey_family([](Order N) { return verify_slater_cleared(8, N); }),
                      kTwoVarLate, Z,
                      "both sides times (1-a): (a)_{n+r+1} -> (aq)_{n+r}, (a)_n -> (1-a)(aq)_{n-1}"));
    add(family_record("niceid", bailey_family([](Order N) { return verify_niceid(10, N); }), 200,
                      Q, "k <= 10"));

    // Finite Jacobi triple products.
    add(family_record("fJTPv1", check_fjtpv1, 132, Z, "n <= 10"));
    add(family_record("fJTP", [](Order N) { return check_fjtp(N, 1); }, 132, Z, "n <= 10"));
    add(family_record("fJTP2", [](Order N) { return check_fjtp(N, 2); }, 240, Z, "n <= 10"));

    // False theta and related.
    for (const char* id : {"RAML1A", "RAML1B"}) {
        const std::string s = id;
        add(pair_record(s, named(s + ".lhs"), named(s + ".rhs"), kTwoVarLate, Z,
                        "summand as printed: (-zq;q)_{2n} (-1)^n z^n q^n / ((z^2q^2;q^2)_n (q^2;q^2)_n)",
                        s));
        add(pair_record(s + ".corrected", named(s + ".corrected.lhs"), named(s + ".rhs"),
                        kTwoVarLate, Z,
                        "summand (-zq;q)_{2n} q^n / ((z^2q^2;q^2)_n (q^2;q^2)_n)", s));
    }
    for (const char* id : {"RAML1", "Entry931"}) {
        const std::string s = id;
        add(pair_record(s, named(s + ".lhs"), named(s + ".rhs"), kTwoVarLate, Z));
    }
    for (const char* id : {"falseT1a", "falseT2", "falseT2a"}) {
        const std::string s = id;
        add(pair_record(s, named(s + ".lhs"), named(s + ".rhs"), kTwoVarLate, Z,
                        "power series in z, compared modulo z^(order+1)"));
    }
    add(pair_record("ROGFIN", rogfin_lhs, rogfin_rhs, kTwoVarLate, Z,
                    "alpha = -zq, beta = zq, tau = -z; both sides times (1+z), modulo z^(order+1)"));
    add(pair_record("CONJ1s1", conj1_lhs, conj1s1_rhs, kTwoVarLate, Z));
    add(pair_record("CONJ2s1", conj2_lhs, conj2s1_rhs, kTwoVarLate, Z));

    // Overpartition and M2 analogues.
    add(pair_record("SBid", [](Order N) { return pole_pair() * build_SBar_def(N); },
                    [](Order N) {
                        return build_H(N) - build_crank_style(CrankKind::Overpartition, N);
                    },
                    kTwoVarLate, Z, "(1-z)(1-z^-1) SBar = NBar - MBar"));
    add(pair_record("NEWSBid", newsb_lhs, tmpl("NEWSBid"), kTwoVarLate, Z));
    add(pair_record("SBcorid",
                    [](Order N) {
                        const QSeries q = q_inf(N);
                        return q * q * q * build_sptbar_series(N);
                    },
                    tmpl("SBcorid"), kOneVar, Q));
    add(pair_record("S2id", [](Order N) { return pole_pair() * build_S2_def(N); },
                    [](Order N) { return build_N2_rank(N) - build_crank_style(CrankKind::M2, N); },
                    kTwoVarLate, Z, "(1-z)(1-z^-1) S2 = N2 - M2"));
    add(pair_record("NEWS2id", news2_lhs, tmpl("NEWS2id"), kTwoVarLate, Z));
    add(pair_record("NEWS2id2", news2_lhs,
                    [](Order N) { return conj2_lhs(N) - q_inf(N) * q2_inf(N); }, kTwoVarLate, Z));
    add(pair_record("NEWM2SPTid",
                    [](Order N) {
                        const QSeries q = q2_inf(N);
                        return q * q * q * qs_substitute_neg_q(build_m2spt_series(N));
                    },
                    tmpl("NEWM2SPTid"), kOneVar, Q));

    // Other two-variable Hecke-type identities.
    add(pair_record("ANDID", andid_lhs, tmpl("ANDID"), kTwoVar, Z,
                    "both sides times (1-z^-1); the m=-n diagonal telescopes to 1"));
    add(pair_record("MORTID1", mortid1_lhs, tmpl("MORTID1"), kTwoVarLate, Z));
    add(pair_record("MORTID1B", mortid1b_lhs, tmpl("MORTID1B"), 200, Q,
                    "weight as printed: 2n - 6n + 1", "MORTID1B"));
    add(pair_record("MORTID1B.corrected", mortid1b_lhs, tmpl("MORTID1B.corrected"), 200, Q,
                    "weight 2n - 6m + 1", "MORTID1B"));
    add(pair_record("MORTID2", [](Order N) { return mortid2_lhs(N, 1); }, tmpl("MORTID2"),
                    kTwoVarLate, Z, "denominator as printed: (q;q)_{2n+1}", "MORTID2"));
    add(pair_record("MORTID2.corrected", [](Order N) { return mortid2_lhs(N, -1); },
                    tmpl("MORTID2"), kTwoVarLate, Z, "denominator (-q;q)_{2n+1}", "MORTID2"));
    add(pair_record("MORTID2B", mortid2b_lhs, tmpl("MORTID2B"), 200, Q));
    add(pair_record("MORTID3", mortid3_printed_lhs, tmpl("MORTID3"), kTwoVarLate, Z,
                    "summand as printed: (-zq;q)_n (-z^-1 q;q^2)_n q^(n+1) / (q;q^2)_n", "MORTID3"));
    add(pair_record("MORTID3.corrected", mortid3_corrected_lhs, tmpl("MORTID3"), kTwoVarLate, Z,
                    "summand (-zq;q)_n (-z^-1 q;q)_n q^n / (q;q^2)_(n+1)", "MORTID3"));
    add(pair_record("MORTID3B", mortid3b_lhs, tmpl("MORTID3B"), 200, Q));

    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return c;
}

std::vector<IdentityRecord> build_fixtures() {
    std::vector<IdentityRecord> f;
    // NEWrankid with the sign of its n = 1 summand flipped.
    f.push_back(pair_record("NEWrankid-mutated", newrank_lhs,
                            [](Order N) {
                                HeckeTemplate t = template_catalog("NEWrankid");
                                t.id = "NEWrankid-mutated";
                                t.terms[0].weight = [](std::int64_t n, std::int64_t) {
                                    return Integer(n == 1 ? -1 : 1);
                                };
                                return eval_template(t, N);
                            },
                            kTwoVar, Z));
    // HR1 with its doubled exponent shifted by one: evaluation must refuse it.
    f.push_back(pair_record("HR1-half-integer", [](Order N) { return q_inf(N) * q_inf(N); },
                            [](Order N) {
                                HeckeTemplate t = template_catalog("HR1");
                                t.id = "HR1-half-integer";
                                t.terms[0].q2.c0 += t.terms[0].q2.den;
                                return eval_template(t, N);
                            },
                            kOneVar, Q));
    return f;
}

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

const std::vector<IdentityRecord>& registry_catalog() {
    static const std::vector<IdentityRecord> catalog = build_catalog();
    return catalog;
}

const IdentityRecord& lookup_record(const std::string& id) {
    for (const auto& r : registry_catalog()) {
        if (r.id == id) return r;
    }
    static const std::vector<IdentityRecord> fixtures = build_fixtures();
    for (const auto& r : fixtures) {
        if (r.id == id) return r;
    }
    throw UnknownIdentity("unknown identity: " + id);
}

VerifyReport verify_record(const IdentityRecord& rec, std::optional<Order> order) {
    VerifyReport rep;
    rep.id = rec.id;
    rep.order = order.value_or(rec.default_order);
    rep.variant_group = rec.variant_group;
    const double start = now_ms();
    if (rec.family) {
        rep.first_mismatch = rec.family(rep.order);
    } else {
        const QSeries lhs = rec.lhs(rep.order);
        const QSeries rhs = rec.rhs(rep.order);
        check_support(lhs);
        check_support(rhs);
        rep.first_mismatch = first_mismatch(lhs, rhs);
    }
    rep.ok = !rep.first_mismatch.has_value();
    rep.elapsed_ms = now_ms() - start;
    return rep;
}

VerifyReport verify_identity(const std::string& id, std::optional<Order> order) {
    return verify_record(lookup_record(id), order);
}

std::vector<VerifyReport> verify_many(const std::vector<std::string>& ids,
                                      const OrderOverrides& orders, int parallel) {
    std::vector<const IdentityRecord*> recs;
    for (const auto& id : ids) recs.push_back(&lookup_record(id));
    std::sort(recs.begin(), recs.end(), [](auto* a, auto* b) { return a->id < b->id; });
    std::vector<VerifyReport> out(recs.size());
    std::vector<std::exception_ptr> errors(recs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < recs.size(); i = next++) {
            const auto& r = *recs[i];
            const auto ov = r.variables == Variables::Z_AND_Q ? orders.two_variable
                                                              : orders.one_variable;
            try {
                out[i] = verify_record(r, ov);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int k = std::max(1, std::min<int>(parallel, static_cast<int>(recs.size())));
    if (k == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < k; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

bool passes(const VerifyReport& r, const std::vector<VerifyReport>& all) {
    if (r.ok) return true;
    if (r.variant_group.empty()) return false;
    return std::any_of(all.begin(), all.end(), [&](const VerifyReport& o) {
        return o.variant_group == r.variant_group && o.ok;
    });
}

std::vector<VerifyReport> variant_outcomes(const std::string& group) {
    std::vector<VerifyReport> out;
    for (const auto& r : registry_catalog()) {
        if (r.variant_group == group) out.push_back(verify_record(r));
    }
    return out;
}

// ---- sequences ----

namespace {

std::vector<Integer> a_values(int n_max) {
    const QSeries q = q_inf(n_max);
    return qs_to_integers(q * q * q * build_spt_series(n_max));
}

// value(step * i + 1) = base(i)
std::vector<Integer> dilate(const std::vector<Integer>& base, int step, int n_max) {
    std::vector<Integer> out(static_cast<std::size_t>(n_max) + 1, Integer(0));
    for (std::size_t i = 0; i < base.size(); ++i) {
        const std::size_t k = step * i + 1;
        if (k <= static_cast<std::size_t>(n_max)) out[k] = base[i];
    }
    return out;
}

}  // namespace

std::vector<std::string> sequence_names() {
    return {"spt", "sptBar", "m2spt", "a", "alpha", "beta"};
}

std::vector<Integer> sequence_values(const std::string& name, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    if (name == "spt") return qs_to_integers(build_spt_series(n_max));
    if (name == "sptBar") return qs_to_integers(build_sptbar_series(n_max));
    if (name == "m2spt") return qs_to_integers(build_m2spt_series(n_max));
    if (name == "a") return a_values(n_max);
    if (name == "alpha") {
        const int m = std::max(0, (n_max - 1) / 12);
        return dilate(a_values(m), 12, n_max);
    }
    if (name == "beta") {
        const int m = std::max(0, (n_max - 1) / 8);
        const QSeries t = q2_inf(m);
        const QSeries inner = t * t * t * qs_substitute_neg_q(build_m2spt_series(m));
        return dilate(qs_to_integers(inner), 8, n_max);
    }
    throw std::invalid_argument("unknown sequence: " + name);
}

// ---- congruences ----

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

CongruenceRule congruence_rule(const std::string& name, int ell) {
    if (name == "congs35") return {"congs35", CongruenceKind::A5, 5, 1};
    if (name == "heckecong") {
        if (!is_prime(ell) || (ell % 12 != 5 && ell % 12 != 7)) {
            throw std::invalid_argument("heckecong needs a prime ell = +-5 mod 12");
        }
        return {"heckecong", CongruenceKind::Alpha, ell, ell % 12 == 5 ? 1 : -1};
    }
    if (name == "M2heckecong") {
        if (!is_prime(ell) || (ell % 8 != 3 && ell % 8 != 5)) {
            throw std::invalid_argument("M2heckecong needs a prime ell = +-3 mod 8");
        }
        return {"M2heckecong", CongruenceKind::Beta, ell, ell % 8 == 3 ? 1 : -1};
    }
    throw std::invalid_argument("unknown congruence rule: " + name);
}

CongruenceReport check_congruence(const CongruenceRule& rule, int n_max) {
    CongruenceReport rep;
    rep.rule = rule.name;
    rep.ell = rule.ell;
    rep.n_max = n_max;
    if (rule.kind == CongruenceKind::A5) {
        const auto a = a_values(5 * n_max + 2);
        for (int n = 0; n <= n_max; ++n) {
            const Integer lhs = a[5 * n + 2];
            const Integer rhs = n % 5 == 0 ? Integer(-25 * a[n / 5]) : Integer(0);
            ++rep.checked;
            if (lhs != rhs) rep.violations.push_back({n, lhs, rhs});
        }
        return rep;
    }
    const auto v = sequence_values(rule.kind == CongruenceKind::Alpha ? "alpha" : "beta", n_max);
    const Integer ell2 = Integer(rule.ell) * rule.ell;
    for (int n = 1; static_cast<std::int64_t>(rule.ell) * n <= n_max; ++n) {
        const Integer lhs = v[static_cast<std::size_t>(rule.ell * n)];
        const Integer div = n % rule.ell == 0 ? v[static_cast<std::size_t>(n / rule.ell)] : Integer(0);
        const Integer rhs = -rule.sign * ell2 * div;
        ++rep.checked;
        if (lhs != rhs) rep.violations.push_back({n, lhs, rhs});
    }
    return rep;
}

}  // namespace qhecke
