#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhecke/combinat.hpp"
#include "qhecke/suite.hpp"

namespace qhecke {

inline constexpr const char* kReportVersion = "1.0";

struct RunConfig {
    OrderOverrides orders;
    std::optional<Order> table_order;
    std::string filter = "*";
    int oracle_cap = kDefaultOracleCap;
    int parallel = 1;
    std::string format = "text";
    bool timing = true;
};

/// Shell-style glob match on identity ids.
bool id_matches(const std::string& pattern, const std::string& id);
std::vector<std::string> select_ids(const std::string& pattern);

nlohmann::ordered_json config_json(const RunConfig& cfg);
nlohmann::ordered_json result_json(const VerifyReport& r, bool timing);
nlohmann::ordered_json sequence_json(const std::string& name, const std::vector<Integer>& values);
nlohmann::ordered_json congruence_json(const CongruenceReport& r);

/// {version, config, results[, sequences][, congruences]}
nlohmann::ordered_json make_report(const RunConfig& cfg, const std::vector<VerifyReport>& results,
                                   const nlohmann::ordered_json& sequences = nullptr,
                                   const nlohmann::ordered_json& congruences = nullptr);

/// True when every result passes (variant-group aware) and every congruence holds.
bool report_passes(const nlohmann::ordered_json& report);

std::string text_line(const VerifyReport& r, bool timing);

}  // namespace qhecke
