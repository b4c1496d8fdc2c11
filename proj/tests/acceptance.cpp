// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/extend.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/instance.hpp"
#include "ringlab/report.hpp"
#include "ringlab/subring.hpp"

using namespace ringlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

const std::vector<Verdict>& sweep() {
  static const std::vector<Verdict> v = verify_all(catalog(), 0, 1);
  return v;
}

const Verdict* find(const std::string& theorem, const std::string& instance) {
  for (const auto& v : sweep()) {
    if (v.theorem == theorem && v.instance == instance) return &v;
  }
  return nullptr;
}

std::vector<Instance> finite_instances() {
  std::vector<Instance> out;
  for (auto& i : catalog()) {
    if (i.setting() == Setting::Finite) out.push_back(std::move(i));
  }
  return out;
}

Outcome axioms_and_closures() {
  Outcome o;
  std::vector<std::string> exprs{"zmod(1)", "zmod(12)", "zmod(256)", "gf(2,8)", "gf(3,4)", "gf(5,3)",
                                 "prod(zmod(4),gf(2,2))", "quotient(zmod(36),[6])", "idealization(gf(3,2),self)",
                                 "idealization(zmod(8),cyclic([4]))", "prod(gf(2,2),gf(2,2))"};
  for (const auto& inst : finite_instances()) exprs.push_back(inst.ring);
  for (const auto& e : exprs) {
    const auto T = build_ring(e);
    if (T->order() > 256) continue;
    const auto bad = find_axiom_violation(*T);
    o.require(!bad, e + ": " + bad.value_or(""));
    // subring_closure fixpoints are closed subrings.
    for (Elem seed = 0; seed < T->order(); seed += std::max<Elem>(1, static_cast<Elem>(T->order() / 16))) {
      const std::vector<Elem> s{seed};
      const auto S = subring_closure(T, s);
      const auto again = subring_closure(T, S.members().members());
      o.require(S == again, e + ": closure not a fixpoint");
      o.require(S.contains(seed), e + ": closure misses its seed");
    }
  }
  return o;
}

Outcome classification_consistency() {
  Outcome o;
  for (const auto& inst : finite_instances()) {
    const auto* v = find("thm_2_5_consistency", inst.id);
    o.require(v && v->status == Status::Pass, inst.id + ": thm_2_5_consistency not PASS");
    const auto ctx = resolve_finite(inst);
    const auto rep = classify_extension(ctx.R, ctx.whole);
    const bool minimal = is_minimal_extension(ctx.R, ctx.whole);
    const int matches = int(rep.inert_match) + int(rep.decomposed_match) + int(rep.ramified_match);
    o.require(!minimal || matches == 1, inst.id + ": case count " + std::to_string(matches));
  }
  return o;
}

Outcome same_kind_after_fixing() {
  Outcome o;
  const std::map<std::string, std::string> kinds{{"inert_positive", "MinimalInert"},
                                                 {"decomposed_positive", "MinimalDecomposed"},
                                                 {"ramified_positive", "MinimalRamified"}};
  for (const auto& [id, kind] : kinds) {
    const auto* v = find("thm_2_6", id);
    o.require(v && v->status == Status::Pass, id + ": thm_2_6 not PASS");
    if (!v) continue;
    o.require(v->witnesses.value("kind", "") == kind && v->witnesses.value("fixed_kind", "") == kind,
              id + ": kind changed");
    const auto ctx = resolve_finite(*catalog_instance(id));
    const auto fixed = classify_extension(ctx.RG, ctx.TG);
    o.require(fixed.crucial_max && fixed.crucial_max->members == conductor(ctx.RG, ctx.TG).members,
              id + ": fixed crucial ideal differs from the fixed conductor");
  }
  return o;
}

Outcome collapse_examples() {
  Outcome o;
  for (const char* id : {"collapse_inert", "collapse_decomposed", "collapse_ramified"}) {
    const auto ctx = resolve_finite(*catalog_instance(id));
    o.require(ctx.RG == ctx.TG, std::string(id) + ": R^G ≠ T^G");
    const auto* v = find("thm_2_6", id);
    o.require(v && v->status == Status::HypothesisViolation, std::string(id) + ": thm_2_6 not a violation");
    const auto* e = find("example_2_8", id);
    o.require(e && e->status == Status::Pass, std::string(id) + ": example_2_8 not PASS");
    for (const char* t : {"thm_2_6", "prop_4_3", "cor_4_4"}) {
      const auto* w = find(t, id);
      o.require(w && w->status != Status::Pass, std::string(id) + ": " + t + " claims minimality");
    }
  }
  return o;
}

Outcome exhaustive_instance_checks() {
  Outcome o;
  for (const char* t : {"lemma_2_1", "lemma_2_2a", "lemma_2_2b", "lemma_2_2c", "prop_2_3", "lemma_3_1", "lemma_3_2"}) {
    int passes = 0;
    for (const auto& inst : finite_instances()) {
      const auto* v = find(t, inst.id);
      o.require(v && (v->status == Status::Pass || v->status == Status::HypothesisViolation),
                inst.id + ": " + t + " is " + (v ? to_string(v->status) : "missing"));
      passes += v && v->status == Status::Pass;
    }
    o.require(passes > 0, std::string(t) + " never passes");
  }
  const auto* iso = find("prop_2_3", "inert_positive");
  o.require(iso && iso->witnesses.contains("phi") && !iso->witnesses["phi"].empty(), "no explicit isomorphism");
  return o;
}

Outcome symmetrization_certificates() {
  Outcome o;
  int full = 0;
  for (const auto& inst : finite_instances()) {
    const auto* v = find("lemma_2_4", inst.id);
    o.require(v && v->status != Status::Fail && v->status != Status::Inconclusive, inst.id + ": lemma_2_4");
    if (!v || v->status != Status::Pass) continue;
    o.require(v->witnesses.value("instances", 0) == 100, inst.id + ": not 100 instances");
    const auto ctx = resolve_finite(inst);
    const bool unit = ctx.T->is_unit(ctx.T->from_integer(static_cast<std::int64_t>(ctx.G.order())));
    bool has_full = false;
    for (const auto& c : v->conclusions) has_full = has_full || c.name == "full-group certificates replay";
    o.require(has_full == unit, inst.id + ": full-group mode mismatch");
    full += has_full;
  }
  o.require(full > 0, "full-group mode never exercised");
  return o;
}

Outcome funcfield_suite() {
  Outcome o;
  for (const char* id : {"ff_p5_scale2", "ff_p7_scale3"}) {
    for (const auto& t : theorem_ids()) {
      if (!supports(t, Setting::FuncField)) continue;
      const auto* v = find(t, id);
      o.require(v && v->status == Status::Pass && v->confidence == Confidence::Probes,
                std::string(id) + ": " + t + " is " + (v ? to_string(v->status) : "missing"));
    }
  }
  return o;
}

Outcome integrality_filters_pairs() {
  Outcome o;
  for (const auto& inst : finite_instances()) {
    if (inst.has_tag("negative-test") && !resolve_finite(inst).invariant) continue;
    const auto ctx = resolve_finite(inst);
    const auto* p41 = find("prop_4_1", inst.id);
    o.require(p41 && p41->status == Status::Pass, inst.id + ": prop_4_1");
    const auto* l46 = find("lemma_4_6", inst.id);
    o.require(l46 && l46->status == Status::Pass, inst.id + ": lemma_4_6");
    if (ctx.T->order() <= 64) {
      const auto* p49 = find("prop_4_9", inst.id);
      o.require(p49 && p49->status == Status::Pass, inst.id + ": prop_4_9");
    }
  }
  for (const char* id : {"ff_p5_scale2", "ff_p7_scale3"}) {
    for (const char* t : {"prop_4_2", "lemma_4_6", "thm_4_7"}) {
      const auto* v = find(t, id);
      o.require(v && v->status == Status::Pass, std::string(id) + ": " + t);
    }
  }
  return o;
}

Outcome deterministic_reports() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "ringlab_acceptance";
  std::filesystem::create_directories(dir);
  std::string bytes[2];
  for (int i = 0; i < 2; ++i) {
    const auto path = (dir / ("run" + std::to_string(i) + ".json")).string();
    std::ostringstream out, err;
    const int code = cli::run_cli({"verify", "--all", "--seed", "0", "--report", path}, out, err);
    o.require(code == 0, "verify --all exit " + std::to_string(code) + ": " + err.str());
    std::ifstream in(path, std::ios::binary);
    bytes[i].assign(std::istreambuf_iterator<char>(in), {});
  }
  o.require(!bytes[0].empty() && bytes[0] == bytes[1], "reports differ");
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "ring axioms and subring closure fixpoints", 10, axioms_and_closures},
      {2, "classification agrees with the minimality oracle", 30, classification_consistency},
      {3, "positive instances keep their kind after fixing", 60, same_kind_after_fixing},
      {4, "collapse instances give R^G = T^G and a hypothesis violation", 60, collapse_examples},
      {5, "exhaustive conductor, orbit, quotient and critical ideal checks", 60, exhaustive_instance_checks},
      {6, "symmetrization certificates replay", 60, symmetrization_certificates},
      {7, "function field probe suite", 10, funcfield_suite},
      {8, "integrality, filter and pair checks", 30, integrality_filters_pairs},
      {9, "byte-identical reports for a fixed seed", 120, deterministic_reports},
  };

  // The shared catalog sweep is timed separately so per-criterion limits
  // measure only their own work.
  const auto s0 = std::chrono::steady_clock::now();
  sweep();
  const double sweep_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
  std::printf("catalog sweep: %zu verdicts in %.2fs\n", sweep().size(), sweep_s);

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit_s) {
      o.ok = false;
      o.why = "took " + std::to_string(secs) + "s";
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.ok ? "" : " -- ", o.why.c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
