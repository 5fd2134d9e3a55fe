// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qhecke/bailey.hpp"
#include "qhecke/combinat.hpp"
#include "qhecke/errors.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/milne.hpp"
#include "qhecke/qseries.hpp"
#include "qhecke/specfun.hpp"
#include "qhecke/suite.hpp"

using namespace qhecke;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

void record(Outcome& o, const std::string& id, Order order) {
    const VerifyReport r = verify_identity(id, order);
    std::string what = id + "@" + std::to_string(order);
    if (r.first_mismatch) what += " (" + describe(*r.first_mismatch) + ")";
    o.require(r.ok, what);
}

// Verifies every member of a printed/corrected group; passes when one member does.
void group(Outcome& o, const std::string& g) {
    const auto v = variant_outcomes(g);
    bool any = false;
    std::string failed;
    for (const auto& r : v) {
        any = any || r.ok;
        if (!r.ok) failed += (failed.empty() ? "" : ", ") + r.id;
    }
    o.require(any, g + ": no variant verifies (unresolved discrepancy)");
    if (any && !failed.empty()) o.notes.push_back(g + " verified corrected; printed form fails: " + failed);
}

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " " << n << ": " << title << " [" << secs << " s]";
    for (const auto& note : o.notes) line << "\n       " << note;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
}

oracle::Bi fabc_brute(int a, int b, int c, int N) {
    oracle::Bi out;
    for (int r = -2 * N - 2; r <= 2 * N + 2; ++r) {
        for (int s = -2 * N - 2; s <= 2 * N + 2; ++s) {
            if ((r >= 0) != (s >= 0)) continue;
            // x = z q, y = z^-1 q
            const long long e = 1LL * a * r * (r - 1) / 2 + 1LL * b * r * s +
                                1LL * c * s * (s - 1) / 2 + r + s;
            if (e > N) continue;
            int sign = r >= 0 ? 1 : -1;
            if ((r + s) % 2 != 0) sign = -sign;
            out[{static_cast<int>(e), r - s}] += sign;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

oracle::Bi to_bi(const QSeries& f) {
    oracle::Bi out;
    for (int k = 0; k <= f.order(); ++k) {
        for (const auto& [e, c] : f[k].terms()) out[{k, e}] = c;
    }
    return out;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::vector<LaurentPoly::Term> t;
    for (int i = 0, k = static_cast<int>(rng() % 6); i < k; ++i) {
        t.emplace_back(static_cast<Exponent>(rng() % 5) - 2, Integer(static_cast<int>(rng() % 41) - 20));
    }
    return LaurentPoly::from_terms(std::move(t));
}

}  // namespace

int main() {
    report(1, "spt table: spt(1..6) and spt(1000)", [] {
        Outcome o;
        const auto spt = sequence_values("spt", 1000);
        const std::vector<Integer> head = {1, 3, 5, 10, 14, 26};
        for (int n = 1; n <= 6; ++n) o.require(spt[n] == head[n - 1], "spt(" + std::to_string(n) + ")");
        o.require(spt[1000] == Integer("600656570957882248155746472836274"), "spt(1000)");
        o.require(build_spt_series(300) == build_spt_series_product(300),
                  "divisor-sum and product forms agree to 300");
        return o;
    });

    report(2, "a(n) table", [] {
        Outcome o;
        const auto a = sequence_values("a", 1000);
        const std::vector<std::pair<int, int>> expected = {
            {1, 1},   {3, -4},      {5, -1},     {6, 9},     {8, 1},      {9, 4},
            {10, -16}, {13, -4}, {990, -1936}, {995, -900}, {996, -49}, {1000, -705}};
        for (const auto& [n, v] : expected) {
            o.require(a[n] == v, "a(" + std::to_string(n) + ") = " + a[n].str());
        }
        return o;
    });

    report(3, "congruences: a(5n+2), alpha for l = 5, 7, 17, beta for l = 3, 5, 11", [] {
        Outcome o;
        const auto c = check_congruence(congruence_rule("congs35"), 199);
        o.require(c.ok() && c.checked == 200, "a(5n+2) = -25 a(n/5), n <= 199");
        for (int ell : {5, 7, 17}) {
            const auto r = check_congruence(congruence_rule("heckecong", ell), 2000);
            o.require(r.ok() && r.checked > 0, "alpha, l = " + std::to_string(ell));
        }
        for (int ell : {3, 5, 11}) {
            const auto r = check_congruence(congruence_rule("M2heckecong", ell), 2000);
            o.require(r.ok() && r.checked > 0, "beta, l = " + std::to_string(ell));
        }
        return o;
    });

    report(4, "two-variable generalisations and their z = +-1 specialisations", [] {
        Outcome o;
        for (const char* id : {"NEWrankid", "CONJ1a", "CONJ1b", "CONJ2"}) record(o, id, 50);
        for (const char* id : {"NEWrankid@z=1", "CONJ1a@z=1", "CONJ1b@z=1", "CONJ2@z=1",
                               "NEWrankid@z=-1", "CONJ2@z=-1", "HR1", "HR2", "HR3", "HR4", "HRf",
                               "HRfv2", "HRmu", "HRmuv2"}) {
            record(o, id, 200);
        }
        return o;
    });

    report(5, "spt-crank identities", [] {
        Outcome o;
        record(o, "NEWSid", 50);
        record(o, "EQNEWSid", 50);
        record(o, "NEWSPTid", 300);
        for (const char* id : {"cor1", "HRnewv2", "SPHR1", "SPHR2", "SRids", "Szqid2"}) {
            record(o, id, lookup_record(id).default_order);
        }
        return o;
    });

    report(6, "finite triple products, false theta family, overpartition and M2 analogues", [] {
        Outcome o;
        for (const char* id : {"fJTPv1", "fJTP", "fJTP2"}) record(o, id, lookup_record(id).default_order);
        for (const char* id : {"RAML1", "ROGFIN", "falseT1a", "falseT2", "falseT2a", "Entry931", "CONJ1s1",
                               "CONJ2s1", "SBid", "S2id", "NEWSBid", "NEWS2id", "NEWS2id2"}) {
            record(o, id, 40);
        }
        group(o, "RAML1A");
        group(o, "RAML1B");
        record(o, "SBcorid", 300);
        record(o, "NEWM2SPTid", 300);
        return o;
    });

    report(7, "ANDID, f_{a,b,c} evaluator, MORTID family", [] {
        Outcome o;
        record(o, "ANDID", 50);
        for (auto [a, b, c] : {std::tuple{1, 3, 1}, std::tuple{2, 3, 2}}) {
            const QSeries f = eval_fabc(a, b, c, {1, 1, 1}, {1, -1, 1}, 30);
            o.require(to_bi(f) == fabc_brute(a, b, c, 30),
                      "fabc(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ") vs double loop");
        }
        record(o, "MORTID1", 40);
        group(o, "MORTID2");
        group(o, "MORTID3");
        record(o, "MORTID2B", 200);
        record(o, "MORTID3B", 200);
        group(o, "MORTID1B");
        return o;
    });

    report(8, "Bailey machinery", [] {
        Outcome o;
        o.require(verify_pair(pair1(), 8, 40).ok, "pair1, n <= 8");
        o.require(verify_pair(limit_transform(pair1()), 8, 40).ok, "limit transform, n <= 8");
        o.require(verify_A1(12, 40).ok, "A1, n <= 12");
        o.require(verify_slater_cleared(8, 40).ok, "slater cleared, n <= 8");
        o.require(verify_niceid(10, 100).ok, "niceid, k <= 10");
        o.require(verify_limit_sum(pair1(), 40).ok, "limit sum");
        return o;
    });

    report(9, "Milne bijection to Q <= 300 and RHS(CONJ1a) = RHS(CONJ1b)", [] {
        Outcome o;
        const MilneReport m = verify_milne(300);
        o.require(m.maps_into_s2, "T maps into S2");
        o.require(m.injective, "injective");
        o.require(m.surjective, "surjective");
        o.require(m.preserves_q, "Q preserved");
        o.require(m.l_relations, "L relations");
        o.require(m.parity, "parity");
        record(o, "CONJ1a=CONJ1b", 60);
        return o;
    });

    report(10, "brute-force oracles for n <= 14", [] {
        Outcome o;
        const int cap = kDefaultOracleCap;
        const QSeries R = build_R(cap), H = build_H(cap), K = build_K(cap);
        const QSeries spt = build_spt_series(cap), m2 = build_m2spt_series(cap);
        for (int n = 0; n <= cap; ++n) {
            auto poly = [](const std::map<int, Integer>& d, bool neg) {
                std::vector<LaurentPoly::Term> t;
                for (const auto& [m, c] : d) t.emplace_back(m, neg ? Integer(-c) : c);
                return LaurentPoly::from_terms(std::move(t));
            };
            const std::string at = " at n = " + std::to_string(n);
            o.require(R[n] == poly(rank_distribution(RankKind::N, n), false), "R" + at);
            o.require(H[n] == poly(rank_distribution(RankKind::NBar, n), false), "H" + at);
            o.require(K[n] == poly(rank_distribution(RankKind::N2, n), n % 2 == 1), "K" + at);
            if (n >= 1) {
                o.require(spt[n] == LaurentPoly(spt_oracle(n)), "spt" + at);
                o.require(m2[n] == LaurentPoly(m2spt_oracle(n)), "m2spt" + at);
            }
        }
        return o;
    });

    report(11, "randomized properties (>= 1000 cases each)", [] {
        Outcome o;
        std::mt19937_64 rng(1729);
        int bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const Order N = 1 + static_cast<int>(rng() % 8);
            std::vector<LaurentPoly> c(N + 1);
            for (auto& p : c) p = random_poly(rng);
            c[0] = LaurentPoly::monomial(rng() % 2 ? 1 : -1, static_cast<Exponent>(rng() % 5) - 2);
            const QSeries f = QSeries::from_coeffs(c);
            if (f * qs_invert(f) != QSeries::one(N)) ++bad;
        }
        o.require(bad == 0, "qs_invert contract");
        bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
            if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a * b != b * a ||
                a + b != b + a || !(a - a).is_zero()) {
                ++bad;
            }
        }
        o.require(bad == 0, "ring axioms");
        bad = 0;
        int cases = 0;
        while (cases < 1000) {
            const long long a = static_cast<long long>(rng() % 401) - 200;
            const long long n = 1 + static_cast<long long>(rng() % 5000);
            const long long m = 1 + static_cast<long long>(rng() % 5000);
            const long long r = ((a % 4) + 4) % 4;
            if (a == 0 || (r != 0 && r != 1)) continue;
            const long long period = a < 0 ? -a : a;
            if (kronecker(a, n + period) != kronecker(a, n)) ++bad;
            if (kronecker(a, n * m) != kronecker(a, n) * kronecker(a, m)) ++bad;
            ++cases;
        }
        o.require(bad == 0, "Kronecker periodicity and multiplicativity");
        bad = 0;
        const auto ids = template_ids();
        for (int i = 0; i < 1000; ++i) {
            const HeckeTemplate t = template_catalog(ids[rng() % ids.size()]);
            const std::int64_t n = static_cast<std::int64_t>(rng() % 41);
            const std::int64_t m = static_cast<std::int64_t>(rng() % (2 * n + 1)) - n;
            try {
                for (const auto& c : contributions_at(t, n, m)) {
                    if (c.q2 % 2 != 0) ++bad;
                }
            } catch (const InternalAssertion&) {
                ++bad;
            }
            HeckeTemplate shifted = t;
            for (auto& term : shifted.terms) term.q2.c0 += term.q2.den;
            try {
                eval_template(shifted, 10);
                ++bad;
            } catch (const HalfIntegerExponent&) {
            }
        }
        o.require(bad == 0, "template exponent integrality");
        return o;
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
