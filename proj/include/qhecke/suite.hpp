#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qhecke/compare.hpp"
#include "qhecke/qseries.hpp"

namespace qhecke {

enum class Variables { Z_AND_Q, Q_ONLY };

using SeriesBuilder = std::function<QSeries(Order)>;
/// Checks a parametrised family at the given order; returns its first mismatch.
using FamilyCheck = std::function<std::optional<Mismatch>(Order)>;

struct IdentityRecord {
    std::string id;
    SeriesBuilder lhs;  // empty for family records
    SeriesBuilder rhs;
    FamilyCheck family;
    Order default_order = 50;
    Variables variables = Variables::Z_AND_Q;
    std::string cleared_note;
    /// Non-empty for printed/corrected variants of one display; the group
    /// passes when at least one member verifies.
    std::string variant_group;
};

struct VerifyReport {
    std::string id;
    bool ok = false;
    Order order = 0;
    std::optional<Mismatch> first_mismatch;
    double elapsed_ms = 0;
    std::string variant_group;
};

/// All in-scope identities, sorted by id.
const std::vector<IdentityRecord>& registry_catalog();
/// Catalog lookup that also resolves test fixtures such as "NEWrankid-mutated".
/// Throws UnknownIdentity.
const IdentityRecord& lookup_record(const std::string& id);

VerifyReport verify_record(const IdentityRecord& rec, std::optional<Order> order = std::nullopt);
VerifyReport verify_identity(const std::string& id, std::optional<Order> order = std::nullopt);

struct OrderOverrides {
    std::optional<Order> two_variable;
    std::optional<Order> one_variable;
};

/// Verifies the given records with up to `parallel` worker threads; results in id order.
std::vector<VerifyReport> verify_many(const std::vector<std::string>& ids,
                                      const OrderOverrides& orders, int parallel);

/// A group-aware pass flag: a failing variant passes when a sibling verifies.
bool passes(const VerifyReport& r, const std::vector<VerifyReport>& all);

/// Outcome of every member of a variant group, verified at default order.
std::vector<VerifyReport> variant_outcomes(const std::string& group);

// Integer sequences. Index i of the result is the value at i, for 0 <= i <= n_max.
// spt, sptBar, m2spt: smallest-part counts. a: (q)_inf^3 sum spt(n) q^n.
// alpha, beta: the dilated sequences used by the Hecke-type congruences.
std::vector<Integer> sequence_values(const std::string& name, int n_max);
std::vector<std::string> sequence_names();

enum class CongruenceKind { A5, Alpha, Beta };

struct CongruenceRule {
    std::string name;
    CongruenceKind kind = CongruenceKind::A5;
    int ell = 5;
    int sign = 1;  // value(ell n) + sign * ell^2 value(n/ell) = 0
};

/// "congs35", or "heckecong"/"M2heckecong" with a prime ell in the admissible
/// residue classes. Throws std::invalid_argument.
CongruenceRule congruence_rule(const std::string& name, int ell = 0);

struct CongruenceViolation {
    std::int64_t n = 0;
    Integer lhs = 0;
    Integer rhs = 0;
};

struct CongruenceReport {
    std::string rule;
    int ell = 0;
    int n_max = 0;
    std::int64_t checked = 0;
    std::vector<CongruenceViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// congs35 checks 0 <= n <= n_max; the alpha/beta rules check every n with
/// ell * n <= n_max.
CongruenceReport check_congruence(const CongruenceRule& rule, int n_max);

}  // namespace qhecke
