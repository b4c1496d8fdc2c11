#include "ringlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <thread>

#include "harness_internal.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

namespace detail {

VerdictBuilder::VerdictBuilder(std::string theorem, std::string instance, Confidence confidence) {
  v_.theorem = std::move(theorem);
  v_.instance = std::move(instance);
  v_.confidence = confidence;
}

void VerdictBuilder::hypothesis(std::string name, bool holds, std::string detail) {
  v_.hypotheses.push_back(Check{std::move(name), holds, std::move(detail), false});
}

void VerdictBuilder::hypothesis(std::string name, const ProbeReport& rep) {
  if (rep.verdict == ProbeVerdict::Inconclusive) {
    hypothesis_inconclusive(std::move(name), rep.detail);
  } else {
    hypothesis(std::move(name), rep.holds(), rep.detail);
  }
}

void VerdictBuilder::hypothesis_inconclusive(std::string name, std::string detail) {
  v_.hypotheses.push_back(Check{std::move(name), false, std::move(detail), true});
}

bool VerdictBuilder::hypotheses_hold() const {
  return std::all_of(v_.hypotheses.begin(), v_.hypotheses.end(), [](const Check& c) { return c.holds; });
}

void VerdictBuilder::conclusion(std::string name, bool holds, std::string detail) {
  v_.conclusions.push_back(Check{std::move(name), holds, std::move(detail), false});
}

void VerdictBuilder::conclusion(std::string name, const ProbeReport& rep) {
  if (rep.verdict == ProbeVerdict::Inconclusive) {
    conclusion_inconclusive(std::move(name), rep.detail);
  } else {
    conclusion(std::move(name), rep.holds(), rep.detail);
  }
}

void VerdictBuilder::conclusion_inconclusive(std::string name, std::string detail) {
  v_.conclusions.push_back(Check{std::move(name), false, std::move(detail), true});
}

void VerdictBuilder::note(std::string text) {
  if (!v_.note.empty()) v_.note += "; ";
  v_.note += text;
}

Verdict VerdictBuilder::finish() {
  auto failed = [](const Check& c) { return !c.holds && !c.inconclusive; };
  auto undecided = [](const Check& c) { return c.inconclusive; };
  const auto& H = v_.hypotheses;
  const auto& C = v_.conclusions;
  if (std::any_of(H.begin(), H.end(), failed)) {
    v_.status = Status::HypothesisViolation;
    v_.conclusions.clear();
    const Check* first = v_.first_failing_hypothesis();
    note("first failing hypothesis: " + first->name + (first->detail.empty() ? "" : " (" + first->detail + ")"));
  } else if (std::any_of(H.begin(), H.end(), undecided)) {
    v_.status = Status::Inconclusive;
    v_.conclusions.clear();
  } else if (C.empty()) {
    v_.status = Status::Inconclusive;
    note("no conclusion was evaluated");
  } else if (std::any_of(C.begin(), C.end(), failed)) {
    v_.status = Status::Fail;
  } else if (std::any_of(C.begin(), C.end(), undecided)) {
    v_.status = Status::Inconclusive;
  } else {
    v_.status = Status::Pass;
  }
  return std::move(v_);
}

nlohmann::json labels_json(const Ideal& I) { return I.labels(); }

nlohmann::json labels_json(const SubringHandle& S) {
  nlohmann::json out = nlohmann::json::array();
  S.members().for_each([&](Elem e) { out.push_back(S.ring().label(e)); });
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, const Instance& inst, std::string_view theorem) {
  // FNV-1a over the names, then a splitmix64 finalizer.
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  feed(inst.id);
  feed(theorem);
  std::uint64_t z = h ^ (seed * 0x9E3779B97F4A7C15ULL) ^ (inst.seed + 0x632BE59BD9B4E019ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

namespace {

using detail::FiniteEnv;
using detail::FuncEnv;
using detail::VerdictBuilder;

void require_known(const std::string& theorem) {
  if (!is_theorem_id(theorem)) throw PreconditionError("unknown theorem id '" + theorem + "'");
}

void require_compatible(const std::string& theorem, const Instance& inst) {
  require_known(theorem);
  if (!supports(theorem, inst.setting())) {
    throw PreconditionError("theorem " + theorem + " does not apply to the " + to_string(inst.setting()) +
                            " instance " + inst.id);
  }
}

template <typename Run>
Verdict guarded(const std::string& theorem, const Instance& inst, Confidence confidence, Run&& run) {
  const auto start = std::chrono::steady_clock::now();
  VerdictBuilder b(theorem, inst.id, confidence);
  Verdict v;
  try {
    run(b);
    v = b.finish();
  } catch (const CapExceeded& e) {
    v = b.finish();
    v.status = Status::Inconclusive;
    v.conclusions.clear();
    v.note = std::string("size cap reached: ") + e.what();
  } catch (const PreconditionError& e) {
    if (confidence != Confidence::Probes) throw;
    // Bounded sampling outside its supported range (d = 1, other centers).
    v = b.finish();
    v.status = Status::Inconclusive;
    v.conclusions.clear();
    v.note = std::string("probe sampling unavailable: ") + e.what();
  } catch (const Error& e) {
    v = b.finish();
    v.status = Status::Fail;
    v.note = std::string("checker error: ") + e.what();
  }
  v.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

Verdict run_finite(FiniteEnv& env, const std::string& theorem, std::uint64_t seed) {
  env.rng.seed(detail::derive_seed(seed, env.inst, theorem));
  const auto checker = detail::finite_checker(theorem);
  return guarded(theorem, env.inst, Confidence::Exhaustive, [&](VerdictBuilder& b) { checker(env, b); });
}

Verdict run_funcfield(FuncEnv& env, const std::string& theorem, std::uint64_t seed) {
  env.rng.seed(detail::derive_seed(seed, env.inst, theorem));
  const auto checker = detail::funcfield_checker(theorem);
  return guarded(theorem, env.inst, Confidence::Probes, [&](VerdictBuilder& b) { checker(env, b); });
}

Instance make(std::string id, std::string ring, std::string subring, std::vector<std::string> action,
              std::optional<std::string> expected, std::vector<std::string> tags) {
  Instance inst;
  inst.id = std::move(id);
  inst.ring = std::move(ring);
  inst.subring = std::move(subring);
  inst.action = std::move(action);
  inst.expected = std::move(expected);
  inst.tags = std::move(tags);
  return inst;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::HypothesisViolation: return "HYPOTHESIS-VIOLATION";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(Confidence c) { return c == Confidence::Exhaustive ? "exhaustive" : "probes"; }

const Check* Verdict::first_failing_hypothesis() const {
  for (const auto& h : hypotheses) {
    if (!h.holds && !h.inconclusive) return &h;
  }
  return nullptr;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "lemma_2_1", "lemma_2_2a", "lemma_2_2b", "lemma_2_2c",        "prop_2_3", "lemma_2_4", "thm_2_5_consistency",
      "thm_2_6",   "example_2_8", "lemma_3_1", "lemma_3_2",         "lemma_3_4_witness", "prop_3_5",  "thm_3_6",
      "prop_4_1",  "prop_4_2",   "prop_4_3",   "cor_4_4",           "lemma_4_6", "thm_4_7",   "prop_4_9",
      "cor_4_10",
  };
  return ids;
}

bool is_theorem_id(std::string_view id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool supports(std::string_view theorem, Setting setting) {
  return setting == Setting::Finite ? detail::finite_checker(theorem) != nullptr
                                    : detail::funcfield_checker(theorem) != nullptr;
}

std::vector<Instance> catalog() {
  std::vector<Instance> out = {
      make("inert_positive", "gf(2,6)", "subfield(3)", {"frobenius(2)"}, "MinimalInert", {"positive"}),
      make("decomposed_positive", "prod(gf(3,2),gf(3,2))", "diag", {"componentwise(frobenius,frobenius)"},
           "MinimalDecomposed", {"positive"}),
      make("ramified_positive", "idealization(gf(3,2),self)", "base", {"componentwise(frobenius,frobenius)"},
           "MinimalRamified", {"positive"}),
      make("collapse_inert", "gf(2,2)", "prime", {"frobenius"}, "MinimalInert", {"collapse"}),
      make("collapse_decomposed", "prod(gf(5,1),gf(5,1))", "diag", {"swap"}, "MinimalDecomposed", {"collapse"}),
      make("collapse_ramified", "idealization(gf(5,1),self)", "base", {"componentwise(id,scale(4))"},
           "MinimalRamified", {"collapse"}),
      make("char_violation", "idealization(gf(2,2),self)", "base", {"componentwise(frobenius,frobenius)"},
           "MinimalRamified", {"negative-test"}),
      make("equal_rings", "gf(2,2)", "all", {"frobenius"}, "TrivialEqual", {}),
      make("zmod4_cyclic", "idealization(zmod(4),cyclic([2]))", "base", {}, "MinimalRamified", {}),
      make("decomposed_trivial_group", "prod(gf(2,1),gf(2,1))", "diag", {}, "MinimalDecomposed", {}),
      make("tower_gf16", "gf(2,4)", "prime", {"frobenius(2)"}, "NotMinimal", {"non-minimal"}),
      make("cube_gf2", "prod(prod(gf(2,1),gf(2,1)),gf(2,1))", "prime", {}, "NotMinimal", {"non-minimal"}),
      make("free_module", "idealization(gf(3,1),free(2))", "base", {}, "NotMinimal", {"non-minimal"}),
      make("ff_p5_scale2", "funcfield(5,x)", "all", {"scale(2)"}, std::nullopt, {"positive"}),
      make("ff_p7_scale3", "funcfield(7,x)", "all", {"scale(3)"}, std::nullopt, {"positive"}),
      make("ff_translate_negative", "funcfield(5,x)", "all", {"translate(1)"}, std::nullopt, {"negative-test"}),
  };
  // Swap does not preserve F_4 x F_2 inside F_4 x F_4.
  Instance swap_negative = make("swap_negative", "prod(gf(2,2),gf(2,2))", "", {"swap"}, std::nullopt,
                                {"negative-test"});
  swap_negative.gens = std::vector<std::string>{"([0,1],[0,0])"};
  out.push_back(std::move(swap_negative));
  std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) { return a.id < b.id; });
  return out;
}

std::optional<Instance> catalog_instance(std::string_view id) {
  for (auto& inst : catalog()) {
    if (inst.id == id) return inst;
  }
  return std::nullopt;
}

Verdict verify(const std::string& theorem, const Instance& inst, std::uint64_t seed, const Limits& limits) {
  require_compatible(theorem, inst);
  if (inst.setting() == Setting::Finite) {
    FiniteEnv env(inst, limits);
    return run_finite(env, theorem, seed);
  }
  FuncEnv env(inst);
  return run_funcfield(env, theorem, seed);
}

std::vector<Verdict> verify_instance(const Instance& inst, std::uint64_t seed, const Limits& limits) {
  std::vector<std::string> checks;
  if (inst.checks.empty()) {
    for (const auto& id : theorem_ids()) {
      if (supports(id, inst.setting())) checks.push_back(id);
    }
  } else {
    for (const auto& id : inst.checks) require_compatible(id, inst);
    checks = inst.checks;
  }
  std::vector<Verdict> out;
  if (inst.setting() == Setting::Finite) {
    FiniteEnv env(inst, limits);
    for (const auto& id : checks) out.push_back(run_finite(env, id, seed));
  } else {
    FuncEnv env(inst);
    for (const auto& id : checks) out.push_back(run_funcfield(env, id, seed));
  }
  return out;
}

std::vector<Verdict> verify_all(const std::vector<Instance>& instances, std::uint64_t seed, unsigned jobs,
                                const Limits& limits) {
  std::vector<std::size_t> order(instances.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return instances[a].id < instances[b].id; });

  std::vector<std::vector<Verdict>> results(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      try {
        results[i] = verify_instance(instances[order[i]], seed, limits);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(instances.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Verdict> out;
  for (auto& r : results) {
    for (auto& v : r) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ringlab
