#include "ringlab/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ringlab/construct.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"

namespace ringlab {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("instance field '" + field + "': " + what);
}

std::string string_field(const json& j, const std::string& field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_field(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

std::string to_string(Setting s) { return s == Setting::Finite ? "finite" : "funcfield"; }

Setting Instance::setting() const {
  return Expr::parse(ring).is_call("funcfield") ? Setting::FuncField : Setting::Finite;
}

bool Instance::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

Instance instance_from_json(const json& j, std::string default_id) {
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  static const std::vector<std::string> known = {"id", "ring", "subring", "action", "checks",
                                                 "seed", "expected", "tags"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) field_error(key, "unknown field");
  }

  Instance inst;
  inst.id = j.contains("id") ? string_field(j["id"], "id") : std::move(default_id);
  if (!j.contains("ring")) field_error("ring", "missing");
  inst.ring = string_field(j["ring"], "ring");
  try {
    Expr::parse(inst.ring);
  } catch (const ParseError& e) {
    field_error("ring", e.what());
  }

  if (j.contains("subring")) {
    const json& s = j["subring"];
    if (s.is_string()) {
      inst.subring = s.get<std::string>();
    } else if (s.is_object()) {
      if (!s.contains("gens") || s.size() != 1) field_error("subring", "object form must be {\"gens\": [...]}");
      inst.gens = string_list(s["gens"], "subring.gens");
    } else {
      field_error("subring", "expected a name or {\"gens\": [...]}");
    }
  }
  if (j.contains("action")) {
    const json& a = j["action"];
    inst.action = a.is_string() ? std::vector<std::string>{a.get<std::string>()} : string_list(a, "action");
  }
  if (j.contains("checks")) inst.checks = string_list(j["checks"], "checks");
  if (j.contains("tags")) inst.tags = string_list(j["tags"], "tags");
  if (j.contains("expected")) inst.expected = string_field(j["expected"], "expected");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<std::int64_t>() < 0)
      field_error("seed", "expected a nonnegative integer");
    inst.seed = j["seed"].get<std::uint64_t>();
  }
  return inst;
}

json to_json(const Instance& inst) {
  json j;
  j["id"] = inst.id;
  j["ring"] = inst.ring;
  if (inst.gens) {
    j["subring"] = json{{"gens", *inst.gens}};
  } else {
    j["subring"] = inst.subring;
  }
  j["action"] = inst.action;
  j["checks"] = inst.checks;
  j["seed"] = inst.seed;
  if (inst.expected) j["expected"] = *inst.expected;
  j["tags"] = inst.tags;
  return j;
}

Instance parse_instance_text(std::string_view text, std::string default_id) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  return instance_from_json(j, std::move(default_id));
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string id = path;
  if (auto slash = id.find_last_of('/'); slash != std::string::npos) id = id.substr(slash + 1);
  if (auto dot = id.rfind(".json"); dot != std::string::npos && dot + 5 == id.size()) id.resize(dot);
  return parse_instance_text(buf.str(), id);
}

FiniteContext resolve_finite(const Instance& inst, const Limits& limits) {
  if (inst.setting() != Setting::Finite) throw PreconditionError("instance " + inst.id + " is not finite");
  RingPtr T = build_ring(inst.ring, limits);
  SubringHandle whole = SubringHandle::whole(T);
  SubringHandle R = inst.gens ? generated_subring(T, *inst.gens) : named_subring(T, Expr::parse(inst.subring));

  std::vector<Automorphism> gens;
  for (const auto& a : inst.action) gens.push_back(parse_automorphism(T, Expr::parse(a)));
  ActionGroup G = close_group(T, std::move(gens), limits);

  const bool invariant = is_invariant_subring(R, G);
  SubringHandle TG = fixed_subring(whole, G);
  SubringHandle RG = SubringHandle::from_members(T, R.members().intersect(TG.members()));
  return FiniteContext{T, whole, R, std::move(G), invariant, std::move(TG), std::move(RG)};
}

FuncFieldContext resolve_funcfield(const Instance& inst) {
  const Expr e = Expr::parse(inst.ring);
  if (!e.is_call("funcfield")) throw PreconditionError("instance " + inst.id + " is not a funcfield instance");
  if (e.args.size() < 2 || e.args.size() > 3) throw ParseError("funcfield(p, center[, span]) expects 2 or 3 arguments");
  const std::int64_t p = e.arg(0).as_integer();
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p)))
    throw ConstructionError("funcfield: characteristic must be a prime below 65536");
  const auto up = static_cast<std::uint32_t>(p);
  FpPoly center = FpPoly::parse(up, e.arg(1).to_string());
  int span = 6;
  if (e.args.size() == 3) {
    const std::int64_t s = e.arg(2).as_integer();
    if (s < 3 || s > 24) throw ParseError("funcfield: probe span must lie in [3, 24]");
    span = static_cast<int>(s);
  }
  std::vector<AffineSubst> gens;
  for (const auto& a : inst.action) gens.push_back(parse_subst(up, Expr::parse(a)));
  return FuncFieldContext{DVRWitness(up, std::move(center)), SubstGroup(up, std::move(gens)), span};
}

}  // namespace ringlab
