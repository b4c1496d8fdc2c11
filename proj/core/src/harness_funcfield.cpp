#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "harness_internal.hpp"
#include "ringlab/errors.hpp"

namespace ringlab::detail {

namespace {

constexpr std::size_t kAxiomPairs = 1000;
constexpr std::size_t kDegreeCap = 4;

SubstGroup trivial_group(const FuncEnv& e) { return SubstGroup(e.ctx.V.characteristic(), {}); }

std::vector<RationalFunction> probe_set(FuncEnv& e) {
  return probes(e.ctx.V, e.rng, -e.ctx.span, e.ctx.span);
}

std::vector<RationalFunction> fixed_probe_set(FuncEnv& e) {
  return fixed_probes(e.ctx.V, e.ctx.G, e.rng, -e.ctx.span, e.ctx.span);
}

// Product of the distinct images of the center, made monic.
RationalFunction center_orbit_product(const FuncEnv& e) {
  const RationalFunction f(e.ctx.V.center());
  std::vector<RationalFunction> images;
  for (const auto& s : e.ctx.G.members()) {
    RationalFunction img = s.apply(f);
    if (std::find(images.begin(), images.end(), img) == images.end()) images.push_back(std::move(img));
  }
  RationalFunction prod = RationalFunction::one(e.ctx.V.characteristic());
  for (const auto& i : images) prod = prod * i;
  return RationalFunction(prod.numerator().monic(), prod.denominator());
}

/// The critical-ideal witness for every sample outside the (fixed) ring.
ProbeReport critical_over(const DVRWitness& V, const SubstGroup& G, const std::vector<RationalFunction>& samples) {
  ProbeReport total;
  std::size_t targets = 0;
  for (const auto& t : samples) {
    if (t.is_zero() || V.valuation(t) >= Valuation::of(0)) continue;
    ++targets;
    ProbeReport r = critical_ideal_witness(V, G, t, samples);
    total.probes += r.probes;
    if (!r.holds()) return r;
  }
  total.detail = "Rad((R : t)) = maximal ideal for " + std::to_string(targets) + " elements t outside the ring, " +
                 std::to_string(total.probes) + " probe evaluations";
  return total;
}

void require_invariance(FuncEnv& e, VerdictBuilder& b) {
  std::string detail = "center " + e.ctx.V.center().to_string();
  for (const auto& g : e.ctx.G.generators()) detail += ", " + g.to_string();
  b.hypothesis("V is G-invariant", invariance_check(e.ctx.V, e.ctx.G), detail);
}

void require_locally_finite(FuncEnv& e, VerdictBuilder& b) {
  b.hypothesis("G is locally finite", true, "|G| = " + std::to_string(e.ctx.G.order()));
}

void require_strongly_locally_finite(FuncEnv& e, VerdictBuilder& b) {
  b.hypothesis("G is strongly locally finite", true,
               "|G| = " + std::to_string(e.ctx.G.order()) + ", so every prime has a finite orbit");
}

void require_fixed_rings_differ(FuncEnv& e, VerdictBuilder& b) {
  const RationalFunction t = center_orbit_product(e).inverse();
  const bool holds = e.ctx.G.fixes(t) && !e.ctx.V.contains(t);
  b.hypothesis("R^G ≠ T^G", holds, t.to_string() + (holds ? " in K^G \\ V^G" : " does not separate V^G from K^G"));
}

void require_critical_ideal(FuncEnv& e, VerdictBuilder& b, const std::vector<RationalFunction>& P) {
  b.hypothesis("m is the critical ideal of V ⊂ K", critical_over(e.ctx.V, trivial_group(e), P));
}

void require_valuation_pair(FuncEnv& e, VerdictBuilder& b) {
  b.hypothesis("(V, m) is a valuation pair of K", valuation_axioms_check(e.ctx.V, e.rng, kAxiomPairs));
}

// ---- checkers --------------------------------------------------------------

void lemma_3_1(FuncEnv& e, VerdictBuilder& b) {
  const auto P = probe_set(e);
  require_invariance(e, b);
  require_critical_ideal(e, b, P);
  require_fixed_rings_differ(e, b);
  if (!b.hypotheses_hold()) return;
  const auto FP = fixed_probe_set(e);
  b.conclusion("m ∩ V^G is the critical ideal of V^G ⊂ K^G", critical_over(e.ctx.V, e.ctx.G, FP));
  b.witnesses()["fixed_probes"] = FP.size();
}

void lemma_3_2(FuncEnv& e, VerdictBuilder& b) {
  const auto P = probe_set(e);
  require_invariance(e, b);
  require_critical_ideal(e, b, P);
  b.hypothesis("the critical ideal is maximal", true,
               "V/m ≅ F_p[x]/(" + e.ctx.V.center().to_string() + ") with an irreducible center");
  if (!b.hypotheses_hold()) return;
  b.conclusion("sigma(m) = m for all sigma in G", maximal_ideal_orbit_check(e.ctx.V, e.ctx.G, P));
}

void lemma_3_4_witness(FuncEnv& e, VerdictBuilder& b) {
  require_valuation_pair(e, b);
  if (!b.hypotheses_hold()) return;
  const auto P = probe_set(e);
  std::int64_t g = 0;
  for (const auto& t : P) {
    if (!t.is_zero()) g = std::gcd(g, e.ctx.V.valuation(t).value());
  }
  b.conclusion("(V, m) has rank 1", g == 1, "probe valuations generate " + std::to_string(g) + "Z");
  b.conclusion("m is the critical ideal of V ⊂ K", critical_over(e.ctx.V, trivial_group(e), P));
  b.witnesses()["probes"] = P.size();
}

void prop_3_5(FuncEnv& e, VerdictBuilder& b) {
  const auto P = probe_set(e);
  require_locally_finite(e, b);
  require_invariance(e, b);
  require_fixed_rings_differ(e, b);
  b.hypothesis("m is in Max(V)", true, "irreducible center " + e.ctx.V.center().to_string());
  if (invariance_check(e.ctx.V, e.ctx.G)) {
    b.hypothesis("O_m = {m}", maximal_ideal_orbit_check(e.ctx.V, e.ctx.G, P));
  } else {
    b.hypothesis("O_m = {m}", false, "not evaluated: V is not G-invariant");
  }
  require_valuation_pair(e, b);
  if (!b.hypotheses_hold()) return;
  const auto FP = fixed_probe_set(e);
  b.conclusion("(V^G, m ∩ V^G) is a valuation pair of K^G", valuation_pair_fixed_check(e.ctx.V, e.ctx.G, FP));
  b.witnesses()["value_group_generator"] = e.ctx.G.order();
}

void thm_3_6(FuncEnv& e, VerdictBuilder& b) {
  const auto P = probe_set(e);
  require_locally_finite(e, b);
  require_invariance(e, b);
  // d = 1 is excluded: the fixed extension is the original one.
  b.hypothesis("G is nontrivial", !e.ctx.G.is_trivial(), "|G| = " + std::to_string(e.ctx.G.order()));
  b.hypothesis("V ⊂ K is a minimal extension", overring_generation_check(e.ctx.V, P));
  b.hypothesis("V is integrally closed in K", integrally_closed_fixed_check(e.ctx.V, trivial_group(e), P, kDegreeCap, e.rng));
  if (!b.hypotheses_hold()) return;

  const auto FP = fixed_probe_set(e);
  const RationalFunction t = RationalFunction(e.ctx.V.center()).inverse();
  const RationalFunction tilde = center_orbit_product(e).inverse();
  const bool separated = !e.ctx.V.contains(t) && e.ctx.G.fixes(tilde) && !e.ctx.V.contains(tilde);
  b.conclusion("R^G ≠ T^G", separated, "orbit product of " + t.to_string() + " is " + tilde.to_string());
  b.conclusion("m ∩ V^G is the critical ideal of V^G ⊂ K^G", critical_over(e.ctx.V, e.ctx.G, FP));
  b.conclusion("sigma(m) = m for all sigma in G", maximal_ideal_orbit_check(e.ctx.V, e.ctx.G, P));
  b.conclusion("(V^G, m ∩ V^G) is a rank 1 valuation pair of K^G", valuation_pair_fixed_check(e.ctx.V, e.ctx.G, FP));
  b.conclusion("V^G is integrally closed in K^G",
               integrally_closed_fixed_check(e.ctx.V, e.ctx.G, FP, kDegreeCap, e.rng));
  b.witnesses()["separating_element"] = tilde.to_string();
}

void prop_4_2(FuncEnv& e, VerdictBuilder& b) {
  const auto P = probe_set(e);
  require_invariance(e, b);
  b.hypothesis("V is integrally closed in K", integrally_closed_fixed_check(e.ctx.V, trivial_group(e), P, kDegreeCap, e.rng));
  if (!b.hypotheses_hold()) return;
  const auto FP = fixed_probe_set(e);
  b.conclusion("V^G is integrally closed in K^G",
               integrally_closed_fixed_check(e.ctx.V, e.ctx.G, FP, kDegreeCap, e.rng));
}

void lemma_4_6(FuncEnv& e, VerdictBuilder& b) {
  require_invariance(e, b);
  require_strongly_locally_finite(e, b);
  if (!b.hypotheses_hold()) return;
  b.conclusion("I ∩ V^G is in F' for every I in F", filter_contraction_fixed_check(e.ctx.V, e.ctx.G, e.ctx.span));
}

void thm_4_7(FuncEnv& e, VerdictBuilder& b) {
  const auto P = probe_set(e);
  require_invariance(e, b);
  require_strongly_locally_finite(e, b);
  b.hypothesis("K = V_F (perfect localization, so F is a Gabriel filter)",
               perfect_localization_fixed_check(e.ctx.V, trivial_group(e), P));
  if (!b.hypotheses_hold()) return;
  const auto FP = fixed_probe_set(e);
  b.conclusion("K^G = (V^G)_F'", perfect_localization_fixed_check(e.ctx.V, e.ctx.G, FP));
}

void normal_pair_hypotheses(FuncEnv& e, VerdictBuilder& b, const std::vector<RationalFunction>& P) {
  b.hypothesis("V and K are the only rings between V and K", overring_generation_check(e.ctx.V, P));
  b.hypothesis("V is integrally closed in K", integrally_closed_fixed_check(e.ctx.V, trivial_group(e), P, kDegreeCap, e.rng));
}

void prop_4_9(FuncEnv& e, VerdictBuilder& b) {
  const auto P = probe_set(e);
  require_invariance(e, b);
  require_locally_finite(e, b);
  normal_pair_hypotheses(e, b, P);
  if (!b.hypotheses_hold()) return;
  const auto FP = fixed_probe_set(e);
  b.conclusion("(V^G, K^G) is an INC-pair", normal_pair_fixed_check(e.ctx.V, e.ctx.G, FP, e.rng));
}

void cor_4_10(FuncEnv& e, VerdictBuilder& b) {
  const auto P = probe_set(e);
  require_invariance(e, b);
  require_locally_finite(e, b);
  normal_pair_hypotheses(e, b, P);
  if (!b.hypotheses_hold()) return;
  const auto FP = fixed_probe_set(e);
  b.conclusion("(V^G, K^G) is a normal pair", normal_pair_fixed_check(e.ctx.V, e.ctx.G, FP, e.rng));
}

const std::map<std::string_view, FuncChecker>& funcfield_registry() {
  static const std::map<std::string_view, FuncChecker> reg = {
      {"lemma_3_1", lemma_3_1}, {"lemma_3_2", lemma_3_2}, {"lemma_3_4_witness", lemma_3_4_witness},
      {"prop_3_5", prop_3_5},   {"thm_3_6", thm_3_6},     {"prop_4_2", prop_4_2},
      {"lemma_4_6", lemma_4_6}, {"thm_4_7", thm_4_7},     {"prop_4_9", prop_4_9},
      {"cor_4_10", cor_4_10},
  };
  return reg;
}

}  // namespace

FuncEnv::FuncEnv(const Instance& instance) : inst(instance), ctx(resolve_funcfield(instance)) {}

FuncChecker funcfield_checker(std::string_view theorem) {
  const auto& reg = funcfield_registry();
  const auto it = reg.find(theorem);
  return it == reg.end() ? nullptr : it->second;
}

}  // namespace ringlab::detail
