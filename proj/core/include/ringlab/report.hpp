#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/extend.hpp"
#include "ringlab/harness.hpp"

namespace ringlab {

inline constexpr const char* kReportSchema = "ringlab/1";

/// runtime_ms is included only on request so reports stay byte-stable.
nlohmann::json to_json(const Verdict& v, bool timings = false);
nlohmann::json report_json(const std::vector<Verdict>& verdicts, std::uint64_t seed, bool timings = false);
/// Checks the fields and value domains written by report_json.
bool is_valid_report(const nlohmann::json& report, std::string* why = nullptr);

/// One row per verdict plus status totals.
std::string summary_table(const std::vector<Verdict>& verdicts);

nlohmann::json to_json(const ExtensionReport& rep);

}  // namespace ringlab
