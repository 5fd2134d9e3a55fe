#include <gtest/gtest.h>

#include "qhecke/report.hpp"

using namespace qhecke;
using nlohmann::ordered_json;

TEST(Report, RoundTrip) {
    RunConfig cfg;
    cfg.timing = false;
    cfg.filter = "MORTID*";
    const auto results = verify_many(select_ids(cfg.filter), {}, 2);
    ordered_json seqs = ordered_json::array({sequence_json("spt", sequence_values("spt", 20))});
    ordered_json congs =
        ordered_json::array({congruence_json(check_congruence(congruence_rule("congs35"), 50))});
    const ordered_json rep = make_report(cfg, results, seqs, congs);
    const std::string text = rep.dump(2);
    EXPECT_EQ(ordered_json::parse(text).dump(2), text);
    EXPECT_EQ(rep["version"], kReportVersion);
    EXPECT_TRUE(report_passes(rep));
    for (const auto& r : rep["results"]) EXPECT_EQ(r["elapsed_ms"], 0);
    const ordered_json again = make_report(cfg, verify_many(select_ids(cfg.filter), {}, 1), seqs, congs);
    EXPECT_EQ(again.dump(2), text);
}

TEST(Report, SchemaFields) {
    RunConfig cfg;
    const auto results = verify_many({"HR1", "NEWrankid-mutated"}, {}, 1);
    const ordered_json rep = make_report(cfg, results);
    ASSERT_EQ(rep["results"].size(), 2u);
    const auto& hr1 = rep["results"][0];
    EXPECT_EQ(hr1["id"], "HR1");
    EXPECT_EQ(hr1["ok"], true);
    EXPECT_EQ(hr1["order"], 300);
    EXPECT_FALSE(hr1.contains("first_mismatch"));
    const auto& bad = rep["results"][1];
    EXPECT_EQ(bad["ok"], false);
    EXPECT_EQ(bad["first_mismatch"]["q_power"], 1);
    EXPECT_FALSE(report_passes(rep));
    EXPECT_FALSE(rep.contains("sequences"));
}

TEST(Report, GlobSelection) {
    EXPECT_TRUE(id_matches("HR*", "HR1"));
    EXPECT_TRUE(id_matches("HR?", "HRf"));
    EXPECT_FALSE(id_matches("HR?", "HRfv2"));
    EXPECT_TRUE(id_matches("HR?", "HR4"));
    EXPECT_EQ(select_ids("CONJ1?").size(), 2u);
    EXPECT_TRUE(select_ids("zzz*").empty());
}
