#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qhecke/errors.hpp"
#include "qhecke/hecke.hpp"

using namespace qhecke;

namespace {

long long powmod(long long b, long long e, long long m) {
    long long r = 1;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// (a | p) for an odd prime p by Euler's criterion.
int legendre(long long a, long long p) {
    const long long r = powmod(a, (p - 1) / 2, p);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

// Kronecker symbol assembled from the factorisation of n.
int kronecker_oracle(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    auto symbol_at = [a](long long p) {
        if (p != 2) return legendre(a, p);
        const long long r = ((a % 8) + 8) % 8;
        return (a % 2 == 0) ? 0 : ((r == 1 || r == 7) ? 1 : -1);
    };
    for (long long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            n /= p;
            result *= symbol_at(p);
        }
    }
    if (n > 1) result *= symbol_at(n);
    return result;
}

}  // namespace

TEST(Kronecker, Examples) {
    EXPECT_EQ(kronecker(-4, 7), -1);
    EXPECT_EQ(kronecker(12, 6), 0);
    EXPECT_EQ(kronecker(12, 11), 1);
    EXPECT_EQ(kronecker(12, 5), -1);
    EXPECT_EQ(kronecker(12, 1), 1);
    EXPECT_EQ(kronecker(12, 7), -1);
}

TEST(KroneckerProperty, MatchesFactorisationTable) {
    int cases = 0;
    for (long long a = -60; a <= 60; ++a) {
        for (long long n = -150; n <= 150; ++n) {
            ASSERT_EQ(kronecker(a, n), kronecker_oracle(a, n)) << a << " " << n;
            ++cases;
        }
    }
    EXPECT_GE(cases, 1000);
}

TEST(KroneckerProperty, PeriodicityAndMultiplicativity) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long long> A(-200, 200), N(1, 5000);
    int periodic = 0;
    for (int i = 0; i < 3000; ++i) {
        const long long a = A(rng), m = N(rng), n = N(rng);
        ASSERT_EQ(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
        if (a != 0 && (((a % 4) + 4) % 4 == 0 || ((a % 4) + 4) % 4 == 1)) {
            const long long period = a < 0 ? -a : a;
            ASSERT_EQ(kronecker(a, n + period), kronecker(a, n)) << a << " " << n;
            ++periodic;
        }
        if (n % 2 == 1) {
            const long long b = A(rng);
            ASSERT_EQ(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
        }
    }
    EXPECT_GE(periodic, 1000);
    // The character used by the alpha congruences.
    for (int n = 1; n < 1200; ++n) {
        const int r = n % 12;
        const int expected = (r == 1 || r == 11) ? 1 : ((r == 5 || r == 7) ? -1 : 0);
        ASSERT_EQ(kronecker(12, n), expected) << n;
    }
}

TEST(Templates, LowOrderValues) {
    const QSeries hr1 = qs_specialize_z(eval_template(template_catalog("HR1"), 20), 1);
    oracle::Dense e = oracle::product(-1, 1, 1, 20);
    e = oracle::mul(e, e);
    EXPECT_EQ(qs_to_integers(hr1), std::vector<Integer>(e.begin(), e.end()));

    EXPECT_EQ(eval_template(template_catalog("NEWrankid"), 3)[0], LaurentPoly(1));
    const LaurentPoly s1 = eval_template(template_catalog("NEWSid"), 3)[1];
    EXPECT_EQ(s1, LaurentPoly::monomial(-1, -1) + LaurentPoly(2) + LaurentPoly::monomial(-1, 1));
}

TEST(Templates, CatalogCoversIds) {
    const auto ids = template_ids();
    EXPECT_GE(ids.size(), 30u);
    for (const auto& id : ids) EXPECT_EQ(template_catalog(id).id, id);
    EXPECT_THROW(template_catalog("no-such-template"), UnknownIdentity);
}

TEST(Templates, EvaluationIsStableUnderTruncation) {
    for (const auto& id : template_ids()) {
        const QSeries big = eval_template(template_catalog(id), 40);
        const QSeries small = eval_template(template_catalog(id), 25);
        ASSERT_EQ(big.truncated(25), small) << id;
    }
}

TEST(Templates, WitnessFailureIsReported) {
    HeckeTemplate t = template_catalog("HR1");
    t.witness = {100, 0, 0, 1};
    EXPECT_THROW(eval_template(t, 10), NonTerminating);
    t.witness = {0, 0, 0, 1};
    EXPECT_THROW(eval_template(t, 10), NonTerminating);
}

TEST(TemplatesProperty, ExponentIntegrality) {
    std::mt19937_64 rng(2718);
    const auto ids = template_ids();
    int checked = 0, fired = 0;
    for (int i = 0; i < 4000; ++i) {
        const HeckeTemplate base = template_catalog(ids[rng() % ids.size()]);
        const std::int64_t n = static_cast<std::int64_t>(rng() % 41);
        const std::int64_t m = static_cast<std::int64_t>(rng() % (2 * n + 1)) - n;
        ASSERT_NO_THROW(contributions_at(base, n, m)) << base.id << " " << n << " " << m;
        for (const auto& c : contributions_at(base, n, m)) ASSERT_EQ(c.q2 % 2, 0);

        // Shifting the doubled exponent by one must be refused wherever a term is live.
        HeckeTemplate bad = base;
        bool live = false;
        for (auto& term : bad.terms) {
            term.q2.c0 += term.q2.den;
            if (!term.region(n, m)) continue;
            bool vanishes = false;
            for (const auto& ch : term.chars) {
                if (kronecker(ch.top, ch.var == KroneckerChar::Var::N ? n : m) == 0) vanishes = true;
            }
            live = live || !vanishes;
        }
        bool threw = false;
        try {
            contributions_at(bad, n, m);
        } catch (const HalfIntegerExponent&) {
            threw = true;
        }
        ASSERT_EQ(threw, live) << base.id << " " << n << " " << m;
        ++checked;
        fired += threw;
    }
    EXPECT_GE(checked, 1000);
    EXPECT_GE(fired, 100);
}

namespace {

oracle::Bi fabc_brute(int a, int b, int c, const Monomial& x, const Monomial& y, int N) {
    oracle::Bi out;
    for (int r = -2 * N - 2; r <= 2 * N + 2; ++r) {
        for (int s = -2 * N - 2; s <= 2 * N + 2; ++s) {
            if ((r >= 0) != (s >= 0)) continue;
            const long long e = static_cast<long long>(a) * r * (r - 1) / 2 +
                                static_cast<long long>(b) * r * s +
                                static_cast<long long>(c) * s * (s - 1) / 2 +
                                static_cast<long long>(x.q_exp) * r + static_cast<long long>(y.q_exp) * s;
            if (e > N) continue;
            int sign = r >= 0 ? 1 : -1;
            if ((r + s) % 2 != 0) sign = -sign;
            if (x.sign < 0 && r % 2 != 0) sign = -sign;
            if (y.sign < 0 && s % 2 != 0) sign = -sign;
            out[{static_cast<int>(e), x.z_exp * r + y.z_exp * s}] += sign;
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

}  // namespace

TEST(Fabc, MatchesDoubleLoop) {
    const Order N = 30;
    const std::vector<std::pair<Monomial, Monomial>> args = {
        {{1, 0, 1}, {1, 0, 1}}, {{1, 1, 1}, {1, -1, 1}}, {{-1, 1, 2}, {1, -1, 1}},
        {{1, 0, 2}, {-1, 2, 3}}};
    for (const auto& [a, b, c] : {std::tuple{1, 3, 1}, std::tuple{2, 3, 2}}) {
        for (const auto& [x, y] : args) {
            ASSERT_EQ(to_bi(eval_fabc(a, b, c, x, y, N)), fabc_brute(a, b, c, x, y, N))
                << a << b << c;
        }
    }
    EXPECT_EQ(eval_fabc(1, 3, 1, {1, 0, 1}, {1, 0, 1}, 5)[0], LaurentPoly(1));
    EXPECT_THROW(eval_fabc(0, 3, 1, {1, 0, 1}, {1, 0, 1}, 5), NonTerminating);
}
