#include <algorithm>
#include <map>
#include <string>

#include "harness_internal.hpp"
#include "ringlab/action.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/extend.hpp"
#include "ringlab/ideals.hpp"

namespace ringlab::detail {

namespace {

constexpr std::size_t kSymInstances = 100;

std::string set_text(const FiniteRing& T, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) out += ",";
    out += T.label(e);
    first = false;
  });
  return out + "}";
}

std::string ideal_text(const Ideal& I) { return set_text(I.ring.ring(), I.members); }

void not_evaluated(VerdictBuilder& b, std::string name, const std::string& why) {
  b.hypothesis(std::move(name), false, "not evaluated: " + why);
}

void require_finite_group(FiniteEnv& e, VerdictBuilder& b) {
  b.hypothesis("G is locally finite", true, "|G| = " + std::to_string(e.ctx.G.order()));
}

void require_strongly_locally_finite(FiniteEnv& e, VerdictBuilder& b) {
  b.hypothesis("G is strongly locally finite", true,
               "|G| = " + std::to_string(e.ctx.G.order()) + " and Spec(T) is finite");
}

void require_conductor_maximal(FiniteEnv& e, VerdictBuilder& b) {
  const Ideal& M = e.M();
  b.hypothesis("M = (R :_R T) is maximal in R", is_maximal(M), "M = " + ideal_text(M));
}

void require_minimal(FiniteEnv& e, VerdictBuilder& b) {
  const ExtensionReport& rep = e.base_report();
  b.hypothesis("R ⊂ T is an integral minimal extension", is_minimal_kind(rep.kind), to_string(rep.kind));
}

// ---- minimal extensions and their fixed rings -----------------------------

void lemma_2_1(FiniteEnv& e, VerdictBuilder& b) {
  require_finite_group(e, b);
  if (!b.hypotheses_hold()) return;
  const SubringHandle& TG = e.ctx.TG;
  std::size_t max_degree = 0;
  std::string failure;
  e.ctx.T->all().for_each([&](Elem t) {
    if (!failure.empty()) return;
    const std::size_t cap = e.orbit_size(t) + 1;
    const auto w = find_monic_witness(t, TG, cap);
    if (!w || !check_monic_witness(*w, TG)) {
      failure = "no monic relation over T^G of degree <= " + std::to_string(cap) + " for " + e.ctx.T->label(t);
      return;
    }
    max_degree = std::max(max_degree, w->degree());
  });
  b.conclusion("T is integral over T^G", failure.empty(),
               failure.empty() ? "monic relations of degree <= n_t + 1 for all " + std::to_string(e.ctx.T->order()) +
                                     " elements, max degree " + std::to_string(max_degree)
                               : failure);
  b.witnesses()["fixed_ring"] = labels_json(TG);
  b.witnesses()["max_degree"] = max_degree;
}

void lemma_2_2a(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_conductor_maximal(e, b);
  e.require_fixed_rings_differ(b);
  if (!b.hypotheses_hold()) return;
  const Ideal& M = e.M();
  const Ideal fixed = conductor(e.ctx.RG, e.ctx.TG);
  const ElementSet mR = M.members.intersect(e.ctx.RG.members());
  const ElementSet mT = M.members.intersect(e.ctx.TG.members());
  const FiniteRing& T = *e.ctx.T;
  b.conclusion("(R^G :_{R^G} T^G) = M ∩ R^G", fixed.members == mR,
               ideal_text(fixed) + " vs " + set_text(T, mR));
  b.conclusion("M ∩ R^G = M ∩ T^G", mR == mT, set_text(T, mR) + " vs " + set_text(T, mT));
  b.witnesses()["conductor"] = labels_json(M);
  b.witnesses()["fixed_conductor"] = labels_json(fixed);
}

void lemma_2_2b(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_conductor_maximal(e, b);
  if (!b.hypotheses_hold()) return;
  const auto orbit = ideal_orbit(e.M(), e.ctx.G);
  b.conclusion("O_M = {M}", orbit.size() == 1, std::to_string(orbit.size()) + " distinct image(s)");
  b.witnesses()["conductor"] = labels_json(e.M());
}

void lemma_2_2c(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_conductor_maximal(e, b);
  const Ideal& M = e.M();
  std::vector<Ideal> over;
  for (auto& N : spec(e.ctx.whole, e.limits)) {
    if (M.members.is_subset_of(N.members)) over.push_back(std::move(N));
  }
  b.hypothesis("some N in Spec(T) contains M", !over.empty(), std::to_string(over.size()) + " such prime(s)");
  if (!b.hypotheses_hold()) return;
  for (const auto& N : over) {
    const Ideal c = contract(N, e.ctx.R);
    b.conclusion("N ∩ R = M for N = " + ideal_text(N), c.members == M.members, "N ∩ R = " + ideal_text(c));
  }
  b.witnesses()["conductor"] = labels_json(M);
}

void prop_2_3(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  const Ideal& M = e.M();
  if (!e.ctx.invariant) {
    b.hypothesis("M = (R :_R T) is in Max(R)", is_maximal(M), "M = " + ideal_text(M));
    not_evaluated(b, "O_M = {M}", "R is not G-invariant");
    not_evaluated(b, "char(R^G/m) ∤ n_r for all r in R", "R is not G-invariant");
    return;
  }
  const FixedQuotientIso iso = fixed_quotient_iso_check(M, e.ctx.G);
  b.hypothesis("M = (R :_R T) is in Max(R)", iso.maximal, "M = " + ideal_text(M));
  b.hypothesis("O_M = {M}", iso.orbit_singleton);
  b.hypothesis("char(R^G/m) ∤ n_r for all r in R", iso.char_coprime, iso.char_witness);
  if (!b.hypotheses_hold()) return;
  b.conclusion("R^G/m ≅ (R/M)^G via r + m ↦ r + M", iso.isomorphism, iso.detail);
  nlohmann::json phi = nlohmann::json::array();
  for (const auto& [from, to] : iso.phi) phi.push_back({from, to});
  b.witnesses()["phi"] = std::move(phi);

  // Every other maximal ideal meeting the hypotheses as well.
  std::size_t extra = 0;
  for (const auto& N : max_ideals(e.ctx.R, e.limits)) {
    if (N == M) continue;
    const FixedQuotientIso other = fixed_quotient_iso_check(N, e.ctx.G);
    if (!other.hypotheses_hold()) continue;
    ++extra;
    b.conclusion("R^G/n ≅ (R/N)^G for N = " + ideal_text(N), other.isomorphism, other.detail);
  }
  b.witnesses()["other_maximal_ideals_checked"] = extra;
}

void lemma_2_4(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  const FiniteRing& T = *e.ctx.T;
  const std::uint64_t c = T.characteristic();
  std::string char_witness;
  T.all().for_each([&](Elem t) {
    if (char_witness.empty() && e.orbit_size(t) % c == 0) {
      char_witness = "char(T) = " + std::to_string(c) + " divides n_t = " + std::to_string(e.orbit_size(t)) +
                     " at t = " + T.label(t);
    }
  });
  const Elem order = T.from_integer(static_cast<std::int64_t>(e.ctx.G.order()));
  const bool group_unit = T.is_unit(order);
  b.hypothesis("char(T) ∤ n_t for all t in T, or |G| is a unit in T", char_witness.empty() || group_unit,
               char_witness.empty() ? "char(T) = " + std::to_string(c) : char_witness);
  if (!e.ctx.invariant) {
    not_evaluated(b, "m t ≠ 0 at every averaging stage", "R is not G-invariant");
    return;
  }

  std::vector<SymInstance> instances;
  std::vector<SymCertificate> orbit_certs;
  std::uniform_int_distribution<std::size_t> terms(1, 3);
  std::string vanished;
  for (std::size_t i = 0; i < kSymInstances; ++i) {
    SymInstance si = random_sym_instance(e.ctx.R, e.ctx.G, e.rng, terms(e.rng));
    SymCertificate cert = symmetrize_representation(si.t, si.terms, e.ctx.R, e.ctx.G, SymMode::Orbit);
    if (!cert.hypothesis_ok && vanished.empty()) vanished = cert.hypothesis_detail;
    instances.push_back(std::move(si));
    orbit_certs.push_back(std::move(cert));
  }
  b.hypothesis("m t ≠ 0 at every averaging stage", vanished.empty(),
               vanished.empty() ? "runtime check on " + std::to_string(kSymInstances) + " instances" : vanished);
  if (!b.hypotheses_hold()) return;

  std::size_t replayed = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (orbit_certs[i].verified && replay_certificate(instances[i].t, orbit_certs[i], e.ctx.R, e.ctx.G)) ++replayed;
  }
  b.conclusion("orbit-mode certificates replay", replayed == instances.size(),
               std::to_string(replayed) + "/" + std::to_string(instances.size()));

  if (group_unit) {
    std::size_t full = 0;
    for (const auto& si : instances) {
      const SymCertificate cert = symmetrize_representation(si.t, si.terms, e.ctx.R, e.ctx.G, SymMode::FullGroup);
      if (cert.hypothesis_ok && cert.verified && replay_certificate(si.t, cert, e.ctx.R, e.ctx.G)) ++full;
    }
    b.conclusion("full-group certificates replay", full == instances.size(),
                 std::to_string(full) + "/" + std::to_string(instances.size()));
  } else {
    b.note("full-group mode skipped: |G| = " + std::to_string(e.ctx.G.order()) + " is not a unit in T");
  }
  b.witnesses()["instances"] = instances.size();
  b.witnesses()["full_group_mode"] = group_unit;
  b.witnesses()["first_t"] = T.label(instances.front().t);
  b.witnesses()["first_m"] = orbit_certs.front().m;
}

void thm_2_5_consistency(FiniteEnv& e, VerdictBuilder& b) {
  b.hypothesis("R is a subring of T", e.ctx.R.is_subset_of(e.ctx.whole));
  if (!b.hypotheses_hold()) return;

  auto check_level = [&](const std::string& level, const SubringHandle& A, const SubringHandle& B,
                         const ExtensionReport* rep, const std::string& error) {
    if (rep == nullptr) {
      b.conclusion(level + ": classification is consistent", false, error);
      return;
    }
    const bool oracle = is_minimal_extension(A, B);
    b.conclusion(level + ": trichotomy agrees with the minimality oracle", is_minimal_kind(rep->kind) == oracle,
                 to_string(rep->kind) + ", oracle " + (oracle ? "minimal" : "not minimal"));
    const int matches = int(rep->inert_match) + int(rep->decomposed_match) + int(rep->ramified_match);
    b.conclusion(level + ": exactly one case matches iff minimal", (matches == 1) == oracle && matches <= 1,
                 std::to_string(matches) + " structural case(s) matched");
  };

  const ExtensionReport* base = nullptr;
  std::string base_error;
  try {
    base = &e.base_report();
  } catch (const Error& err) {
    base_error = err.what();
  }
  check_level("R ⊆ T", e.ctx.R, e.ctx.whole, base, base_error);
  if (base != nullptr) {
    b.witnesses()["kind"] = to_string(base->kind);
    if (e.inst.expected) {
      b.conclusion("kind matches the instance's expectation", to_string(base->kind) == *e.inst.expected,
                   "expected " + *e.inst.expected);
    }
  }
  if (e.ctx.invariant) {
    const ExtensionReport* fixed = nullptr;
    std::string fixed_error;
    try {
      fixed = &e.fixed_report();
    } catch (const Error& err) {
      fixed_error = err.what();
    }
    check_level("R^G ⊆ T^G", e.ctx.RG, e.ctx.TG, fixed, fixed_error);
    if (fixed != nullptr) b.witnesses()["fixed_kind"] = to_string(fixed->kind);
  }
}

void thm_2_6(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_minimal(e, b);
  e.require_fixed_rings_differ(b);
  e.require_char_condition(b, e.M());
  if (!b.hypotheses_hold()) return;

  const ExtensionReport& base = e.base_report();
  const ExtensionReport& fixed = e.fixed_report();
  b.conclusion("R^G ⊂ T^G is a minimal extension of the same type", fixed.kind == base.kind,
               to_string(base.kind) + " -> " + to_string(fixed.kind));
  const Ideal fc = conductor(e.ctx.RG, e.ctx.TG);
  b.conclusion("crucial maximal ideal of R^G ⊂ T^G is (R^G :_{R^G} T^G)",
               fixed.crucial_max.has_value() && fixed.crucial_max->members == fc.members, ideal_text(fc));
  const ElementSet m = e.M().members.intersect(e.ctx.RG.members());
  b.conclusion("(R^G :_{R^G} T^G) = M ∩ T^G", fc.members == e.M().members.intersect(e.ctx.TG.members()),
               set_text(*e.ctx.T, m));
  b.witnesses()["kind"] = to_string(base.kind);
  b.witnesses()["fixed_kind"] = to_string(fixed.kind);
  b.witnesses()["fixed_conductor"] = labels_json(fc);
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : fixed.witnesses) ws.push_back(labels_json(w));
  b.witnesses()["fixed_case_ideals"] = std::move(ws);
}

void example_2_8(FiniteEnv& e, VerdictBuilder& b) {
  b.hypothesis("instance is a listed collapse example", e.inst.has_tag("collapse"));
  e.require_invariance(b);
  require_minimal(e, b);
  require_finite_group(e, b);
  const Ideal& M = e.M();
  if (is_maximal(M)) {
    e.require_char_condition(b, M);
  } else {
    not_evaluated(b, "char(R^G/(M ∩ T^G)) ∤ n_r for all r in R", "M is not maximal");
  }
  if (!b.hypotheses_hold()) return;
  const bool equal = e.ctx.RG.members() == e.ctx.TG.members();
  b.conclusion("R^G = T^G", equal, "|R^G| = " + std::to_string(e.ctx.RG.size()) +
                                       ", |T^G| = " + std::to_string(e.ctx.TG.size()));
  b.conclusion("R^G ⊆ T^G is not a minimal extension", !is_minimal_extension(e.ctx.RG, e.ctx.TG),
               to_string(e.fixed_report().kind));
  b.witnesses()["fixed_ring"] = labels_json(e.ctx.TG);
}

// ---- critical ideals, finite setting --------------------------------------

void lemma_3_1(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  const auto P = critical_ideal(e.ctx.R, e.ctx.whole);
  b.hypothesis("a critical ideal P of R ⊂ T exists", P.has_value(), P ? "P = " + ideal_text(*P) : "");
  e.require_fixed_rings_differ(b);
  if (!b.hypotheses_hold()) return;
  const auto fixed = critical_ideal(e.ctx.RG, e.ctx.TG);
  const Ideal p = contract(*P, e.ctx.RG);
  b.conclusion("P ∩ R^G is the critical ideal of R^G ⊂ T^G", fixed.has_value() && fixed->members == p.members,
               fixed ? ideal_text(*fixed) + " vs " + ideal_text(p) : "R^G ⊂ T^G has no critical ideal");
  b.witnesses()["critical_ideal"] = labels_json(*P);
  b.witnesses()["fixed_critical_ideal"] = labels_json(p);
}

void lemma_3_2(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  const auto M = critical_ideal(e.ctx.R, e.ctx.whole);
  b.hypothesis("a critical ideal M of R ⊂ T exists", M.has_value(), M ? "M = " + ideal_text(*M) : "");
  b.hypothesis("the critical ideal is maximal", M && is_maximal(*M));
  if (!b.hypotheses_hold()) return;
  const auto orbit = ideal_orbit(*M, e.ctx.G);
  b.conclusion("sigma(M) = M for all sigma in G", orbit.size() == 1,
               std::to_string(orbit.size()) + " distinct image(s) under " + std::to_string(e.ctx.G.order()) +
                   " group elements");
  b.witnesses()["critical_ideal"] = labels_json(*M);
}

// ---- integrality, filters and pairs ----------------------------------------

void prop_4_1(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  const IntegralityReport base = is_integral_extension(e.ctx.R, e.ctx.whole);
  b.hypothesis("R ⊆ T is integral", base.integral);
  require_finite_group(e, b);
  if (!b.hypotheses_hold()) return;
  const IntegralityReport fixed = is_integral_extension(e.ctx.RG, e.ctx.TG);
  std::size_t max_degree = 0;
  std::size_t cycles = 0;
  for (const auto& w : fixed.witnesses) {
    max_degree = std::max(max_degree, w.degree());
    if (w.power_cycle) ++cycles;
  }
  b.conclusion("R^G ⊆ T^G is integral", fixed.integral,
               "monic witnesses for " + std::to_string(fixed.witnesses.size()) + " elements of T^G, max degree " +
                   std::to_string(max_degree));
  b.witnesses()["witnesses"] = fixed.witnesses.size();
  b.witnesses()["power_cycle_witnesses"] = cycles;
  b.witnesses()["max_degree"] = max_degree;
}

void prop_4_2(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  b.hypothesis("R is integrally closed in T", is_integrally_closed(e.ctx.R, e.ctx.whole));
  if (!b.hypotheses_hold()) return;
  b.conclusion("R^G is integrally closed in T^G", is_integrally_closed(e.ctx.RG, e.ctx.TG));
}

void unit_order_hypotheses(FiniteEnv& e, VerdictBuilder& b) {
  const FiniteRing& T = *e.ctx.T;
  const Elem n = T.from_integer(static_cast<std::int64_t>(e.ctx.G.order()));
  const bool unit_in_T = T.is_unit(n);
  const bool unit_in_R = unit_in_T && e.ctx.R.contains(*T.inverse(n));
  b.hypothesis("G is finite", true, "|G| = " + std::to_string(e.ctx.G.order()));
  b.hypothesis("|G| is a unit in R", unit_in_R);
  b.witnesses()["order_unit_in_R"] = unit_in_R;
  b.witnesses()["order_unit_in_T"] = unit_in_T;
}

void prop_4_3(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  b.hypothesis("R ⊂ T is a minimal extension", is_minimal_extension(e.ctx.R, e.ctx.whole));
  unit_order_hypotheses(e, b);
  e.require_fixed_rings_differ(b);
  if (!b.hypotheses_hold()) return;
  b.conclusion("R^G ⊂ T^G is a minimal extension", is_minimal_extension(e.ctx.RG, e.ctx.TG),
               to_string(e.fixed_report().kind));
}

void cor_4_4(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_minimal(e, b);
  unit_order_hypotheses(e, b);
  e.require_fixed_rings_differ(b);
  if (!b.hypotheses_hold()) return;
  const IntegralityReport fixed = is_integral_extension(e.ctx.RG, e.ctx.TG);
  const bool minimal = is_minimal_extension(e.ctx.RG, e.ctx.TG);
  b.conclusion("R^G ⊂ T^G is an integral minimal extension", fixed.integral && minimal,
               to_string(e.fixed_report().kind));
}

void lemma_4_6(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_strongly_locally_finite(e, b);
  if (!b.hypotheses_hold()) return;
  const auto filter = extension_filter(e.ctx.R, e.ctx.whole, e.limits);
  const CheckResult r = filter_contraction_check(e.ctx.R, e.ctx.whole, e.ctx.G, e.limits);
  b.conclusion("I ∩ R^G is in F' for every I in F", r.holds, r.detail);
  const bool only_unit = filter.size() == 1 && filter.front().is_unit_ideal();
  b.conclusion("F = {R} for the integral extension R ⊆ T", only_unit,
               std::to_string(filter.size()) + " ideal(s) in F");
  nlohmann::json f = nlohmann::json::array();
  for (const auto& I : filter) f.push_back(labels_json(I));
  b.witnesses()["filter"] = std::move(f);
}

void thm_4_7(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_strongly_locally_finite(e, b);
  const auto filter = extension_filter(e.ctx.R, e.ctx.whole, e.limits);
  const GabrielCheck g = is_gabriel_filter(filter, e.ctx.R, e.limits);
  b.hypothesis("F is a Gabriel filter", g.holds, g.failure);
  if (!b.hypotheses_hold()) return;
  const auto fixed_filter = extension_filter(e.ctx.RG, e.ctx.TG, e.limits);
  const GabrielCheck fg = is_gabriel_filter(fixed_filter, e.ctx.RG, e.limits);
  b.conclusion("F' is a Gabriel filter", fg.holds, fg.failure);
  const bool perfect = is_perfect_localization(e.ctx.R, e.ctx.whole);
  if (perfect) {
    b.conclusion("T = R_F implies T^G = (R^G)_F'", is_perfect_localization(e.ctx.RG, e.ctx.TG),
                 "T is a perfect localization of R");
  } else {
    b.conclusion("T = R_F implies T^G = (R^G)_F'", true, "vacuous: T is not a perfect localization of R");
  }
  b.witnesses()["perfect_localization"] = perfect;
  b.witnesses()["filter_size"] = filter.size();
  b.witnesses()["fixed_filter_size"] = fixed_filter.size();
}

void pair_check(VerdictBuilder& b, bool hypothesis, const std::string& name,
                CheckResult (*check)(const SubringHandle&, const SubringHandle&, const Limits&),
                const SubringHandle& A, const SubringHandle& B, const Limits& limits) {
  try {
    const CheckResult r = check(A, B, limits);
    if (hypothesis) {
      b.hypothesis(name, r.holds, r.detail);
    } else {
      b.conclusion(name, r.holds, r.detail);
    }
  } catch (const CapExceeded& cap) {
    if (hypothesis) {
      b.hypothesis_inconclusive(name, cap.what());
    } else {
      b.conclusion_inconclusive(name, cap.what());
    }
  }
}

void prop_4_9(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_finite_group(e, b);
  pair_check(b, true, "(R, T) is an INC-pair", is_inc_pair, e.ctx.R, e.ctx.whole, e.limits);
  if (!b.hypotheses_hold()) return;
  pair_check(b, false, "(R^G, T^G) is an INC-pair", is_inc_pair, e.ctx.RG, e.ctx.TG, e.limits);
}

void cor_4_10(FiniteEnv& e, VerdictBuilder& b) {
  e.require_invariance(b);
  require_finite_group(e, b);
  pair_check(b, true, "(R, T) is a normal pair", is_normal_pair, e.ctx.R, e.ctx.whole, e.limits);
  if (!b.hypotheses_hold()) return;
  pair_check(b, false, "(R^G, T^G) is a normal pair", is_normal_pair, e.ctx.RG, e.ctx.TG, e.limits);
}

const std::map<std::string_view, FiniteChecker>& finite_registry() {
  static const std::map<std::string_view, FiniteChecker> reg = {
      {"lemma_2_1", lemma_2_1},
      {"lemma_2_2a", lemma_2_2a},
      {"lemma_2_2b", lemma_2_2b},
      {"lemma_2_2c", lemma_2_2c},
      {"prop_2_3", prop_2_3},
      {"lemma_2_4", lemma_2_4},
      {"thm_2_5_consistency", thm_2_5_consistency},
      {"thm_2_6", thm_2_6},
      {"example_2_8", example_2_8},
      {"lemma_3_1", lemma_3_1},
      {"lemma_3_2", lemma_3_2},
      {"prop_4_1", prop_4_1},
      {"prop_4_2", prop_4_2},
      {"prop_4_3", prop_4_3},
      {"cor_4_4", cor_4_4},
      {"lemma_4_6", lemma_4_6},
      {"thm_4_7", thm_4_7},
      {"prop_4_9", prop_4_9},
      {"cor_4_10", cor_4_10},
  };
  return reg;
}

}  // namespace

bool is_minimal_kind(ExtensionKind k) {
  return k == ExtensionKind::MinimalInert || k == ExtensionKind::MinimalDecomposed ||
         k == ExtensionKind::MinimalRamified || k == ExtensionKind::MinimalIntegrallyClosed;
}

FiniteEnv::FiniteEnv(const Instance& instance, const Limits& lim)
    : inst(instance), limits(lim), ctx(resolve_finite(instance, lim)) {}

const Ideal& FiniteEnv::M() {
  if (!conductor_) conductor_ = conductor(ctx.R, ctx.whole);
  return *conductor_;
}

const ExtensionReport& FiniteEnv::base_report() {
  if (!base_) base_ = classify_extension(ctx.R, ctx.whole, limits);
  return *base_;
}

const ExtensionReport& FiniteEnv::fixed_report() {
  if (!fixed_) fixed_ = classify_extension(ctx.RG, ctx.TG, limits);
  return *fixed_;
}

bool FiniteEnv::minimal_integral() { return is_minimal_kind(base_report().kind); }

std::size_t FiniteEnv::orbit_size(Elem t) {
  if (orbit_sizes_.empty()) {
    orbit_sizes_.resize(ctx.T->order());
    ctx.T->all().for_each([&](Elem x) { orbit_sizes_[x] = orbit(x, ctx.G).size; });
  }
  return orbit_sizes_.at(t);
}

void FiniteEnv::require_invariance(VerdictBuilder& b) {
  std::string witness;
  if (!ctx.invariant) {
    for (std::size_t i = 0; i < ctx.G.generators().size() && witness.empty(); ++i) {
      const Automorphism& g = ctx.G.generators()[i];
      ctx.R.members().for_each([&](Elem r) {
        if (witness.empty() && !ctx.R.contains(g(r))) {
          witness = "generator " + std::to_string(i) + " sends " + ctx.T->label(r) + " to " + ctx.T->label(g(r)) +
                    " outside R";
        }
      });
    }
  }
  b.hypothesis("R is G-invariant", ctx.invariant, witness);
}

void FiniteEnv::require_fixed_rings_differ(VerdictBuilder& b) {
  std::string witness;
  ctx.TG.members().for_each([&](Elem t) {
    if (witness.empty() && !ctx.RG.contains(t)) witness = ctx.T->label(t) + " in T^G \\ R^G";
  });
  b.hypothesis("R^G ≠ T^G", !witness.empty(),
               witness.empty() ? "R^G = T^G = " + set_text(*ctx.T, ctx.TG.members()) : witness);
}

void FiniteEnv::require_char_condition(VerdictBuilder& b, const Ideal& M) {
  const std::string name = "char(R^G/(M ∩ T^G)) ∤ n_r for all r in R";
  if (!is_maximal(M)) {
    not_evaluated(b, name, "M is not maximal");
    return;
  }
  const Ideal m = contract(M, ctx.RG);
  const std::uint64_t c = quotient(m).ring->characteristic();
  std::string witness;
  ctx.R.members().for_each([&](Elem r) {
    if (witness.empty() && orbit_size(r) % c == 0) {
      witness = "char " + std::to_string(c) + " divides n_r = " + std::to_string(orbit_size(r)) + " at r = " +
                ctx.T->label(r);
    }
  });
  b.hypothesis(name, witness.empty(), witness.empty() ? "char = " + std::to_string(c) : witness);
}

FiniteChecker finite_checker(std::string_view theorem) {
  const auto& reg = finite_registry();
  const auto it = reg.find(theorem);
  return it == reg.end() ? nullptr : it->second;
}

}  // namespace ringlab::detail
