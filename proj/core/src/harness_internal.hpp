#pragma once

// Shared plumbing for the checker translation units.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/extend.hpp"
#include "ringlab/funcfield.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/instance.hpp"

namespace ringlab::detail {

class VerdictBuilder {
 public:
  VerdictBuilder(std::string theorem, std::string instance, Confidence confidence);

  void hypothesis(std::string name, bool holds, std::string detail = {});
  void hypothesis(std::string name, const ProbeReport& rep);
  void hypothesis_inconclusive(std::string name, std::string detail);
  /// No hypothesis failed or was left undecided.
  bool hypotheses_hold() const;

  void conclusion(std::string name, bool holds, std::string detail = {});
  void conclusion(std::string name, const ProbeReport& rep);
  void conclusion_inconclusive(std::string name, std::string detail);

  nlohmann::json& witnesses() { return v_.witnesses; }
  void note(std::string text);
  Verdict finish();

 private:
  Verdict v_;
};

nlohmann::json labels_json(const Ideal& I);
nlohmann::json labels_json(const SubringHandle& S);

/// Per (seed, instance, theorem) stream, so a checker draws the same
/// samples whether it runs alone or inside a full sweep.
std::uint64_t derive_seed(std::uint64_t seed, const Instance& inst, std::string_view theorem);

class FiniteEnv {
 public:
  FiniteEnv(const Instance& inst, const Limits& limits);

  const Instance& inst;
  Limits limits;
  FiniteContext ctx;
  std::mt19937_64 rng;

  /// M = (R :_R T).
  const Ideal& M();
  const ExtensionReport& base_report();
  const ExtensionReport& fixed_report();
  bool minimal_integral();
  /// |O_t| for every element of T.
  std::size_t orbit_size(Elem t);

  /// Riding assumption: sigma(R) ⊆ R for every generator.
  void require_invariance(VerdictBuilder& b);
  /// R^G ≠ T^G, with the witness element when it holds.
  void require_fixed_rings_differ(VerdictBuilder& b);
  /// char(R^G / (M ∩ R^G)) ∤ n_r for every r in R.
  void require_char_condition(VerdictBuilder& b, const Ideal& M);

 private:
  std::optional<Ideal> conductor_;
  std::optional<ExtensionReport> base_;
  std::optional<ExtensionReport> fixed_;
  std::vector<std::size_t> orbit_sizes_;
};

using FiniteChecker = void (*)(FiniteEnv&, VerdictBuilder&);
/// nullptr when the theorem has no finite checker.
FiniteChecker finite_checker(std::string_view theorem);

struct FuncEnv {
  FuncEnv(const Instance& inst);

  const Instance& inst;
  FuncFieldContext ctx;
  std::mt19937_64 rng;
};

using FuncChecker = void (*)(FuncEnv&, VerdictBuilder&);
FuncChecker funcfield_checker(std::string_view theorem);

bool is_minimal_kind(ExtensionKind k);

}  // namespace ringlab::detail
