#include "qhecke/milne.hpp"

#include <cstdlib>
#include <set>

#include "qhecke/errors.hpp"

namespace qhecke {

namespace {

std::string show(const LatticePoint& p) {
    return "(" + std::to_string(p.m) + ", " + std::to_string(p.n) + ")";
}

constexpr std::size_t kMaxCounterexamples = 20;

}  // namespace

bool in_S1(const LatticePoint& p) { return p.n >= 2 * std::llabs(p.m); }
bool in_S2(const LatticePoint& p) { return p.n >= 3 * std::llabs(p.m); }

std::int64_t Q1_doubled(const LatticePoint& p) { return p.n * p.n - 2 * p.m * p.m + p.n; }
std::int64_t Q2_doubled(const LatticePoint& p) { return p.n * p.n - 8 * p.m * p.m + p.n; }

std::int64_t L11(const LatticePoint& p) { return p.n - 2 * std::llabs(p.m) + 1; }
std::int64_t L12(const LatticePoint& p) { return 2 * std::llabs(p.m) - p.n; }
std::int64_t L21(const LatticePoint& p) { return p.n - 4 * std::llabs(p.m) + 1; }
std::int64_t L22(const LatticePoint& p) { return 4 * std::llabs(p.m) - p.n; }

LatticePoint milne_T(const LatticePoint& p) {
    if (!in_S1(p)) throw NotInRegion("milne_T: " + show(p) + " is not in S1");
    if (p.m < 0) {
        const LatticePoint r = milne_T({-p.m, p.n});
        return {-r.m, r.n};
    }
    if (p.m % 2 == 0) return {p.m / 2, p.n};
    // n - 3m/2 + 1/2 on doubled coordinates.
    const std::int64_t twice = 2 * p.n - 3 * p.m + 1;
    if (twice % 2 != 0) throw InternalAssertion("milne_T: half-integer image at " + show(p));
    return {twice / 2, 3 * p.n - 4 * p.m + 1};
}

MilneReport verify_milne(std::int64_t q_cap) {
    MilneReport rep;
    rep.q_cap = q_cap;
    auto fail = [&rep](bool& flag, const std::string& what) {
        flag = false;
        if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back(what);
    };
    const std::int64_t cap2 = 2 * q_cap;
    std::set<LatticePoint> images;
    // On S1, Q1 >= n^2/4 + n/2.
    for (std::int64_t n = 0; n * n + 2 * n <= 4 * q_cap; ++n) {
        for (std::int64_t m = -n / 2; m <= n / 2; ++m) {
            const LatticePoint p{m, n};
            if (Q1_doubled(p) > cap2) continue;
            ++rep.points_s1;
            const LatticePoint t = milne_T(p);
            if (!in_S2(t)) fail(rep.maps_into_s2, "T" + show(p) + " = " + show(t) + " not in S2");
            if (!images.insert(t).second) fail(rep.injective, "T is not injective at " + show(p));
            if (Q2_doubled(t) != Q1_doubled(p)) fail(rep.preserves_q, "Q2(T" + show(p) + ") != Q1");
            const bool even = (m % 2 == 0);
            const bool l_ok = even ? (L21(t) == L11(p) && L22(t) == L12(p))
                                   : (L21(t) == L12(p) && L22(t) == L11(p));
            if (!l_ok) fail(rep.l_relations, "L relations fail at " + show(p));
            if (((t.n - (m + n)) % 2) != 0) fail(rep.parity, "parity fails at " + show(p));
        }
    }
    // On S2, Q2 >= n^2/18 + n/2.
    for (std::int64_t n = 0; n * n + 9 * n <= 18 * q_cap; ++n) {
        for (std::int64_t m = -n / 3; m <= n / 3; ++m) {
            const LatticePoint p{m, n};
            if (Q2_doubled(p) > cap2) continue;
            ++rep.points_s2;
            if (!images.count(p)) fail(rep.surjective, show(p) + " has no preimage");
        }
    }
    return rep;
}

}  // namespace qhecke
