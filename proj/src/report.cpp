#include "qhecke/report.hpp"

#include <fnmatch.h>

#include <map>
#include <sstream>

namespace qhecke {

using nlohmann::ordered_json;

bool id_matches(const std::string& pattern, const std::string& id) {
    return fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

std::vector<std::string> select_ids(const std::string& pattern) {
    std::vector<std::string> ids;
    for (const auto& r : registry_catalog()) {
        if (id_matches(pattern, r.id)) ids.push_back(r.id);
    }
    return ids;
}

namespace {

ordered_json opt_order(const std::optional<Order>& o) {
    return o ? ordered_json(*o) : ordered_json(nullptr);
}

}  // namespace

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["order_two_variable"] = opt_order(cfg.orders.two_variable);
    j["order_one_variable"] = opt_order(cfg.orders.one_variable);
    j["order_table"] = opt_order(cfg.table_order);
    j["filter"] = cfg.filter;
    j["oracle_cap"] = cfg.oracle_cap;
    j["parallel"] = cfg.parallel;
    j["timing"] = cfg.timing;
    return j;
}

ordered_json result_json(const VerifyReport& r, bool timing) {
    ordered_json j;
    j["id"] = r.id;
    j["ok"] = r.ok;
    j["order"] = r.order;
    if (!r.variant_group.empty()) j["variant_group"] = r.variant_group;
    if (r.first_mismatch) {
        const Mismatch& m = *r.first_mismatch;
        ordered_json mj;
        mj["q_power"] = m.q_power;
        mj["z_power"] = m.z_power;
        mj["lhs"] = m.lhs.str();
        mj["rhs"] = m.rhs.str();
        if (m.index) mj["index"] = *m.index;
        j["first_mismatch"] = mj;
    }
    j["elapsed_ms"] = timing ? static_cast<std::int64_t>(r.elapsed_ms + 0.5) : 0;
    return j;
}

ordered_json sequence_json(const std::string& name, const std::vector<Integer>& values) {
    ordered_json j;
    j["name"] = name;
    ordered_json vals = ordered_json::array();
    for (const auto& v : values) vals.push_back(v.str());
    j["values"] = vals;
    return j;
}

ordered_json congruence_json(const CongruenceReport& r) {
    ordered_json j;
    j["rule"] = r.rule;
    j["ell"] = r.ell;
    j["n_max"] = r.n_max;
    j["checked"] = r.checked;
    j["ok"] = r.ok();
    ordered_json v = ordered_json::array();
    for (const auto& x : r.violations) {
        v.push_back({{"n", x.n}, {"lhs", x.lhs.str()}, {"rhs", x.rhs.str()}});
    }
    j["violations"] = v;
    return j;
}

ordered_json make_report(const RunConfig& cfg, const std::vector<VerifyReport>& results,
                         const ordered_json& sequences, const ordered_json& congruences) {
    ordered_json j;
    j["version"] = kReportVersion;
    j["config"] = config_json(cfg);
    ordered_json res = ordered_json::array();
    for (const auto& r : results) res.push_back(result_json(r, cfg.timing));
    j["results"] = res;
    if (!sequences.is_null()) j["sequences"] = sequences;
    if (!congruences.is_null()) j["congruences"] = congruences;
    return j;
}

bool report_passes(const ordered_json& report) {
    std::map<std::string, bool> group_ok;
    for (const auto& r : report.at("results")) {
        if (r.contains("variant_group")) {
            group_ok[r["variant_group"]] = group_ok[r["variant_group"]] || r["ok"].get<bool>();
        }
    }
    for (const auto& r : report.at("results")) {
        if (r["ok"].get<bool>()) continue;
        if (r.contains("variant_group") && group_ok[r["variant_group"]]) continue;
        return false;
    }
    if (report.contains("congruences")) {
        for (const auto& c : report["congruences"]) {
            if (!c["ok"].get<bool>()) return false;
        }
    }
    return true;
}

std::string text_line(const VerifyReport& r, bool timing) {
    std::ostringstream out;
    out << (r.ok ? "ok   " : "FAIL ") << r.id << " order=" << r.order;
    if (r.first_mismatch) out << " first mismatch: " << describe(*r.first_mismatch);
    if (!r.ok && !r.variant_group.empty()) out << " [variant of " << r.variant_group << "]";
    if (timing) out << " (" << static_cast<std::int64_t>(r.elapsed_ms + 0.5) << " ms)";
    return out.str();
}

}  // namespace qhecke
