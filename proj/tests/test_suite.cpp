#include <gtest/gtest.h>

#include <set>

#include "qhecke/errors.hpp"
#include "qhecke/report.hpp"
#include "qhecke/suite.hpp"

using namespace qhecke;

namespace {

std::vector<std::string> all_ids() {
    std::vector<std::string> ids;
    for (const auto& r : registry_catalog()) ids.push_back(r.id);
    return ids;
}

}  // namespace

TEST(Suite, CatalogShape) {
    const auto& cat = registry_catalog();
    EXPECT_GE(cat.size(), 45u);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EXPECT_TRUE(seen.insert(cat[i].id).second) << cat[i].id;
        if (i > 0) EXPECT_LT(cat[i - 1].id, cat[i].id);
        if (cat[i].variables == Variables::Z_AND_Q) {
            EXPECT_GE(cat[i].default_order, 30) << cat[i].id;
        } else {
            EXPECT_GE(cat[i].default_order, 200) << cat[i].id;
        }
        EXPECT_TRUE(cat[i].family || (cat[i].lhs && cat[i].rhs)) << cat[i].id;
    }
    EXPECT_EQ(lookup_record("CONJ2").variables, Variables::Z_AND_Q);
    EXPECT_THROW(lookup_record("no-such-identity"), UnknownIdentity);
    EXPECT_EQ(seen.count("NEWrankid-mutated"), 0u);
    for (const char* id : {"SBid", "S2id", "ANDID", "slaterid"}) {
        EXPECT_FALSE(lookup_record(id).cleared_note.empty()) << id;
    }
}

TEST(Suite, EveryIdentityVerifiesAtDefaultOrder) {
    const auto results = verify_many(all_ids(), {}, 4);
    std::set<std::string> printed_failures;
    for (const auto& r : results) {
        EXPECT_TRUE(passes(r, results)) << r.id << " " << describe(*r.first_mismatch);
        if (!r.ok) printed_failures.insert(r.id);
    }
    // Only the printed forms of the typo variants disagree with their right sides.
    EXPECT_EQ(printed_failures,
              (std::set<std::string>{"MORTID1B", "MORTID2", "MORTID3", "RAML1A", "RAML1B"}));
}

TEST(Suite, HarnessSelfTest) {
    const VerifyReport r = verify_identity("NEWrankid-mutated", 50);
    ASSERT_FALSE(r.ok);
    ASSERT_TRUE(r.first_mismatch.has_value());
    EXPECT_EQ(r.first_mismatch->q_power, 1);
    EXPECT_THROW(verify_identity("HR1-half-integer"), HalfIntegerExponent);
}

TEST(Suite, OrderOverride) {
    const VerifyReport r = verify_identity("HR1", 100);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.order, 100);
    const auto many = verify_many({"HR1", "CONJ2"}, {std::optional<Order>(31), std::optional<Order>(201)}, 1);
    ASSERT_EQ(many.size(), 2u);
    EXPECT_EQ(many[0].id, "CONJ2");
    EXPECT_EQ(many[0].order, 31);
    EXPECT_EQ(many[1].order, 201);
}

TEST(Suite, ParallelRunsAgree) {
    const auto ids = select_ids("[A-H]*");
    RunConfig cfg;
    cfg.timing = false;
    const auto serial = make_report(cfg, verify_many(ids, {}, 1)).dump();
    const auto parallel = make_report(cfg, verify_many(ids, {}, 6)).dump();
    EXPECT_EQ(serial, parallel);
}

TEST(Suite, VariantGroups) {
    for (const char* g : {"MORTID1B", "MORTID2", "MORTID3", "RAML1A", "RAML1B"}) {
        const auto v = variant_outcomes(g);
        ASSERT_EQ(v.size(), 2u) << g;
        EXPECT_FALSE(v[0].ok) << g;
        EXPECT_TRUE(v[1].ok) << g;
        EXPECT_TRUE(passes(v[0], v));
    }
    const VerifyReport lone{"X", false, 10, std::nullopt, 0, ""};
    EXPECT_FALSE(passes(lone, {lone}));
}

TEST(Suite, Sequences) {
    const auto spt = sequence_values("spt", 1000);
    EXPECT_EQ(std::vector<Integer>(spt.begin() + 1, spt.begin() + 7),
              (std::vector<Integer>{1, 3, 5, 10, 14, 26}));
    EXPECT_EQ(spt[1000], Integer("600656570957882248155746472836274"));

    const auto a = sequence_values("a", 1000);
    const std::vector<std::pair<int, int>> expected = {{1, 1},      {3, -4},     {5, -1},
                                                       {6, 9},      {8, 1},      {9, 4},
                                                       {10, -16},   {13, -4},    {990, -1936},
                                                       {995, -900}, {996, -49},  {1000, -705}};
    for (const auto& [n, v] : expected) EXPECT_EQ(a[n], v) << n;

    const auto alpha = sequence_values("alpha", 200);
    for (int i = 0; 12 * i + 1 <= 200; ++i) EXPECT_EQ(alpha[12 * i + 1], a[i]);
    EXPECT_EQ(alpha[2], 0);
    const auto beta = sequence_values("beta", 100);
    EXPECT_EQ(beta.size(), 101u);
    EXPECT_EQ(beta[1], 0);
    EXPECT_EQ(beta[17], 1);
    EXPECT_THROW(sequence_values("nope", 10), std::invalid_argument);
    for (const auto& name : sequence_names()) EXPECT_EQ(sequence_values(name, 30).size(), 31u);
}

TEST(Suite, ASubsequenceAtFivePlusTwo) {
    // sum a(5n+2) q^n starts -25 q^5 + 100 q^15 + 25 q^25 - 225 q^30
    const auto a = sequence_values("a", 5 * 30 + 2);
    for (int n = 0; n <= 30; ++n) {
        Integer expected = 0;
        if (n == 5) expected = -25;
        if (n == 15) expected = 100;
        if (n == 25) expected = 25;
        if (n == 30) expected = -225;
        EXPECT_EQ(a[5 * n + 2], expected) << n;
    }
}

TEST(Suite, Congruences) {
    const auto c35 = check_congruence(congruence_rule("congs35"), 199);
    EXPECT_TRUE(c35.ok());
    EXPECT_EQ(c35.checked, 200);
    for (int ell : {5, 7, 17}) {
        EXPECT_TRUE(check_congruence(congruence_rule("heckecong", ell), 2000).ok()) << ell;
    }
    for (int ell : {3, 5, 11}) {
        EXPECT_TRUE(check_congruence(congruence_rule("M2heckecong", ell), 2000).ok()) << ell;
    }
    EXPECT_EQ(congruence_rule("heckecong", 5).sign, 1);
    EXPECT_EQ(congruence_rule("heckecong", 7).sign, -1);
    EXPECT_EQ(congruence_rule("M2heckecong", 3).sign, 1);
    EXPECT_EQ(congruence_rule("M2heckecong", 5).sign, -1);
    EXPECT_THROW(congruence_rule("heckecong", 11), std::invalid_argument);
    EXPECT_THROW(congruence_rule("heckecong", 25), std::invalid_argument);
    EXPECT_THROW(congruence_rule("M2heckecong", 7), std::invalid_argument);
    EXPECT_THROW(congruence_rule("other"), std::invalid_argument);
}

TEST(Suite, WrongSignIsDetected) {
    CongruenceRule r = congruence_rule("heckecong", 5);
    r.sign = -r.sign;
    EXPECT_FALSE(check_congruence(r, 2000).ok());
    CongruenceRule b = congruence_rule("M2heckecong", 3);
    b.sign = -b.sign;
    EXPECT_FALSE(check_congruence(b, 2000).ok());
}
