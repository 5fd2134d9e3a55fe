#include "qhecke/compare.hpp"

#include <algorithm>

namespace qhecke {

std::optional<Mismatch> first_mismatch(const QSeries& lhs, const QSeries& rhs) {
    const Order n = std::min(lhs.order(), rhs.order());
    for (int k = 0; k <= n; ++k) {
        if (lhs[k] == rhs[k]) continue;
        const LaurentPoly d = lhs[k] - rhs[k];
        const Exponent e = d.terms().front().first;
        return Mismatch{k, e, lhs[k].coeff(e), rhs[k].coeff(e), std::nullopt};
    }
    return std::nullopt;
}

std::string describe(const Mismatch& m) {
    std::string s;
    if (m.index) s += "index " + std::to_string(*m.index) + ", ";
    s += "q^" + std::to_string(m.q_power) + " z^" + std::to_string(m.z_power) + ": lhs " +
         m.lhs.str() + ", rhs " + m.rhs.str();
    return s;
}

}  // namespace qhecke
