#pragma once

// Plain dense arithmetic used as an independent reference in the tests. Nothing
// here touches the library's series types.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Dense = std::vector<Int>;  // coefficients of q^0..q^N

inline Dense one(int N) {
    Dense d(N + 1, 0);
    d[0] = 1;
    return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
    const int N = static_cast<int>(std::min(a.size(), b.size())) - 1;
    Dense r(N + 1, 0);
    for (int i = 0; i <= N; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// f * (1 + c q^k)
inline Dense times_binomial(const Dense& f, int c, int k) {
    Dense r = f;
    for (int i = static_cast<int>(f.size()) - 1; i >= k; --i) r[i] += c * f[i - k];
    return r;
}

// f / (1 + c q^k), k >= 1
inline Dense over_binomial(const Dense& f, int c, int k) {
    Dense r = f;
    for (std::size_t i = k; i < r.size(); ++i) r[i] -= c * r[i - k];
    return r;
}

// prod_{j>=0} (1 + c q^{start + j step}) truncated to order N
inline Dense product(int c, int start, int step, int N) {
    Dense r = one(N);
    for (int k = start; k <= N; k += step) r = times_binomial(r, c, k);
    return r;
}

inline Dense inv_product(int c, int start, int step, int N) {
    Dense r = one(N);
    for (int k = start; k <= N; k += step) r = over_binomial(r, c, k);
    return r;
}

inline Dense shift(const Dense& f, int s) {
    Dense r(f.size(), 0);
    for (std::size_t i = 0; i + s < f.size(); ++i) r[i + s] = f[i];
    return r;
}

inline void add_to(Dense& a, const Dense& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) a[i] += b[i];
}

// Partition numbers from Euler's pentagonal recurrence.
inline std::vector<Int> partition_numbers(int N) {
    std::vector<Int> p(N + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            const int sign = k % 2 == 1 ? 1 : -1;
            p[n] += sign * p[n - g1];
            const int g2 = k * (3 * k + 1) / 2;
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

// Two-variable dense series: (q-power, z-power) -> coefficient.
using Bi = std::map<std::pair<int, long long>, Int>;

inline Bi bi_mul(const Bi& a, const Bi& b, int N) {
    Bi r;
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            const int q = ka.first + kb.first;
            if (q > N) continue;
            r[{q, ka.second + kb.second}] += va * vb;
        }
    }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

// 1 / (1 - z^e q^k) expanded as a geometric series, k >= 1
inline Bi bi_geometric(long long e, int k, int N) {
    Bi r;
    for (int j = 0; j * k <= N; ++j) r[{j * k, j * e}] = 1;
    return r;
}

}  // namespace oracle
