#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/instance.hpp"
#include "ringlab/limits.hpp"

namespace ringlab {

enum class Status { Pass, Fail, HypothesisViolation, Inconclusive };
enum class Confidence { Exhaustive, Probes };
std::string to_string(Status s);
std::string to_string(Confidence c);

struct Check {
  std::string name;
  bool holds = false;
  std::string detail;
  /// A bounded search could not decide; holds is false in that case.
  bool inconclusive = false;
};

struct Verdict {
  std::string theorem;
  std::string instance;
  Status status = Status::Inconclusive;
  Confidence confidence = Confidence::Exhaustive;
  std::vector<Check> hypotheses;
  /// Empty unless every hypothesis held.
  std::vector<Check> conclusions;
  nlohmann::json witnesses = nlohmann::json::object();
  std::string note;
  double runtime_ms = 0.0;

  const Check* first_failing_hypothesis() const;
};

/// Checker ids in catalog order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(std::string_view id);
bool supports(std::string_view theorem, Setting setting);

/// The shipped instances, ordered by id.
std::vector<Instance> catalog();
std::optional<Instance> catalog_instance(std::string_view id);

/// Throws PreconditionError for an unknown id or a setting mismatch.
Verdict verify(const std::string& theorem, const Instance& inst, std::uint64_t seed = 0, const Limits& limits = {});

/// The instance's listed checks, or every compatible one when the list is
/// empty. Listed checks must be compatible.
std::vector<Verdict> verify_instance(const Instance& inst, std::uint64_t seed = 0, const Limits& limits = {});

/// Instances are processed on up to `jobs` threads; the result is ordered by
/// instance id, then by checker order.
std::vector<Verdict> verify_all(const std::vector<Instance>& instances, std::uint64_t seed = 0, unsigned jobs = 1,
                                const Limits& limits = {});

}  // namespace ringlab
