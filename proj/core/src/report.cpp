#include "ringlab/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <sstream>

namespace ringlab {

namespace {

nlohmann::json checks_json(const std::vector<Check>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}};
    if (c.inconclusive) j["inconclusive"] = true;
    out.push_back(std::move(j));
  }
  return out;
}

bool fail_with(std::string* why, std::string text) {
  if (why != nullptr) *why = std::move(text);
  return false;
}

}  // namespace

nlohmann::json to_json(const Verdict& v, bool timings) {
  nlohmann::json j{
      {"theorem", v.theorem},
      {"instance", v.instance},
      {"status", to_string(v.status)},
      {"confidence", to_string(v.confidence)},
      {"hypotheses", checks_json(v.hypotheses)},
      {"conclusions", checks_json(v.conclusions)},
      {"witnesses", v.witnesses},
      {"note", v.note},
  };
  if (timings) j["runtime_ms"] = v.runtime_ms;
  return j;
}

nlohmann::json report_json(const std::vector<Verdict>& verdicts, std::uint64_t seed, bool timings) {
  nlohmann::json list = nlohmann::json::array();
  std::map<std::string, std::size_t> totals;
  for (const auto& s : {Status::Pass, Status::Fail, Status::HypothesisViolation, Status::Inconclusive}) {
    totals[to_string(s)] = 0;
  }
  for (const auto& v : verdicts) {
    list.push_back(to_json(v, timings));
    ++totals[to_string(v.status)];
  }
  return nlohmann::json{{"schema", kReportSchema}, {"seed", seed}, {"totals", totals}, {"verdicts", std::move(list)}};
}

bool is_valid_report(const nlohmann::json& r, std::string* why) {
  if (!r.is_object()) return fail_with(why, "report is not an object");
  if (r.value("schema", "") != kReportSchema) return fail_with(why, "schema is not ringlab/1");
  if (!r.contains("seed") || !r["seed"].is_number_unsigned()) return fail_with(why, "seed missing");
  if (!r.contains("verdicts") || !r["verdicts"].is_array()) return fail_with(why, "verdicts missing");
  static const std::array<const char*, 4> statuses = {"PASS", "FAIL", "HYPOTHESIS-VIOLATION", "INCONCLUSIVE"};
  for (const auto& v : r["verdicts"]) {
    for (const char* key : {"theorem", "instance", "status", "confidence", "note"}) {
      if (!v.contains(key) || !v[key].is_string()) return fail_with(why, std::string("verdict field ") + key);
    }
    const auto status = v["status"].get<std::string>();
    if (std::find(statuses.begin(), statuses.end(), status) == statuses.end()) {
      return fail_with(why, "unknown status " + status);
    }
    const auto conf = v["confidence"].get<std::string>();
    if (conf != "exhaustive" && conf != "probes") return fail_with(why, "unknown confidence " + conf);
    for (const char* key : {"hypotheses", "conclusions"}) {
      if (!v.contains(key) || !v[key].is_array()) return fail_with(why, std::string("verdict field ") + key);
      for (const auto& c : v[key]) {
        if (!c.contains("name") || !c["name"].is_string() || !c.contains("holds") || !c["holds"].is_boolean()) {
          return fail_with(why, "malformed check");
        }
      }
    }
    if (status == "PASS") {
      for (const auto& h : v["hypotheses"]) {
        if (!h["holds"].get<bool>()) return fail_with(why, "PASS with a failing hypothesis");
      }
    }
    if (!v.contains("witnesses") || !v["witnesses"].is_object()) return fail_with(why, "verdict field witnesses");
  }
  return true;
}

std::string summary_table(const std::vector<Verdict>& verdicts) {
  std::size_t wi = 8;
  std::size_t wt = 7;
  for (const auto& v : verdicts) {
    wi = std::max(wi, v.instance.size());
    wt = std::max(wt, v.theorem.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(wi)) << "instance" << "  " << std::setw(static_cast<int>(wt))
      << "theorem" << "  " << std::setw(20) << "status" << "  confidence\n";
  std::map<Status, std::size_t> totals;
  for (const auto& v : verdicts) {
    out << std::setw(static_cast<int>(wi)) << v.instance << "  " << std::setw(static_cast<int>(wt)) << v.theorem
        << "  " << std::setw(20) << to_string(v.status) << "  " << to_string(v.confidence) << "\n";
    ++totals[v.status];
  }
  out << "\n" << verdicts.size() << " verdicts:";
  for (const auto& s : {Status::Pass, Status::Fail, Status::HypothesisViolation, Status::Inconclusive}) {
    out << " " << to_string(s) << "=" << totals[s];
  }
  out << "\n";
  return out.str();
}

nlohmann::json to_json(const ExtensionReport& rep) {
  auto opt = [](const std::optional<Ideal>& I) -> nlohmann::json {
    return I ? nlohmann::json(I->labels()) : nlohmann::json(nullptr);
  };
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : rep.witnesses) witnesses.push_back(w.labels());
  return nlohmann::json{
      {"kind", to_string(rep.kind)},
      {"conductor", opt(rep.conductor)},
      {"crucial_max", opt(rep.crucial_max)},
      {"critical_ideal", opt(rep.critical_ideal)},
      {"case_ideals", std::move(witnesses)},
      {"dimension", rep.dimension ? nlohmann::json(*rep.dimension) : nlohmann::json(nullptr)},
      {"conductor_maximal", rep.conductor_maximal},
      {"inert_match", rep.inert_match},
      {"decomposed_match", rep.decomposed_match},
      {"ramified_match", rep.ramified_match},
  };
}

}  // namespace ringlab
