#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/action.hpp"
#include "ringlab/funcfield.hpp"
#include "ringlab/limits.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

enum class Setting { Finite, FuncField };
std::string to_string(Setting s);

/// One verification instance: T from a construction expression, R inside
/// it, and G generated by the listed actions.
struct Instance {
  std::string id;
  std::string ring;
  /// Named subring ("all", "prime", "diag", "base", "subfield(d)"), used
  /// when gens is empty. Ignored for funcfield instances.
  std::string subring = "all";
  std::optional<std::vector<std::string>> gens;
  std::vector<std::string> action;
  std::vector<std::string> checks;  ///< empty means every compatible check
  std::optional<std::string> expected;
  std::vector<std::string> tags;
  std::uint64_t seed = 0;

  Setting setting() const;
  bool has_tag(std::string_view tag) const;
};

/// Reads the instance file format
///   {"ring": ..., "subring": "diag" | {"gens": [...]}, "action": [...],
///    "checks": [...], "seed": n, "id": ..., "expected": ..., "tags": [...]}
/// Throws ParseError naming the offending field.
Instance instance_from_json(const nlohmann::json& j, std::string default_id = "instance");
nlohmann::json to_json(const Instance& inst);
/// Parse errors carry the line and column reported by the JSON reader.
Instance load_instance_file(const std::string& path);
Instance parse_instance_text(std::string_view text, std::string default_id = "instance");

struct FiniteContext {
  RingPtr T;
  SubringHandle whole;
  SubringHandle R;
  ActionGroup G;
  bool invariant = false;
  SubringHandle TG;
  SubringHandle RG;  ///< R ∩ T^G, a subring even when R is not invariant
};
FiniteContext resolve_finite(const Instance& inst, const Limits& limits = {});

struct FuncFieldContext {
  DVRWitness V;
  SubstGroup G;
  int span = 6;  ///< probe valuations in [-span, span]
};
FuncFieldContext resolve_funcfield(const Instance& inst);

}  // namespace ringlab
