// Cross-module properties checked over the whole catalog against the
// brute-force oracles.

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/extend.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/instance.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;

namespace {

std::vector<Instance> finite_catalog() {
  std::vector<Instance> out;
  for (auto& i : catalog()) {
    if (i.setting() == Setting::Finite) out.push_back(std::move(i));
  }
  return out;
}

std::set<oracle::Perm> oracle_group(const ActionGroup& G) {
  std::vector<oracle::Perm> gens;
  for (const auto& g : G.generators()) gens.push_back(g.perm());
  return oracle::group(G.ambient()->order(), gens);
}

bool is_minimal_kind(ExtensionKind k) {
  return k == ExtensionKind::MinimalInert || k == ExtensionKind::MinimalDecomposed ||
         k == ExtensionKind::MinimalRamified;
}

}  // namespace

TEST(Properties, NoPassWithAFalseHypothesisAcrossSeeds) {
  for (std::uint64_t seed : {0ULL, 1ULL, 17ULL}) {
    for (const auto& v : verify_all(catalog(), seed, 2)) {
      if (v.status == Status::Pass) {
        for (const auto& h : v.hypotheses) EXPECT_TRUE(h.holds) << v.instance << " " << v.theorem << " " << h.name;
        EXPECT_FALSE(v.conclusions.empty()) << v.instance << " " << v.theorem;
        for (const auto& c : v.conclusions) EXPECT_TRUE(c.holds) << v.instance << " " << v.theorem << " " << c.name;
      }
      if (v.status == Status::HypothesisViolation) {
        EXPECT_TRUE(v.conclusions.empty());
        ASSERT_NE(v.first_failing_hypothesis(), nullptr);
        EXPECT_NE(v.note.find(v.first_failing_hypothesis()->name), std::string::npos);
      }
    }
  }
}

TEST(Properties, SameSeedSameBytes) {
  const auto a = report_json(verify_all(catalog(), 0, 1), 0).dump();
  const auto b = report_json(verify_all(catalog(), 0, 3), 0).dump();
  EXPECT_EQ(a, b);
}

TEST(Properties, EveryTheoremHasAPassAndCounterexamplesAreFlagged) {
  std::map<std::string, std::set<Status>> seen;
  for (const auto& v : verify_all(catalog(), 0, 2)) seen[v.theorem].insert(v.status);
  for (const auto& id : theorem_ids()) {
    EXPECT_TRUE(seen[id].count(Status::Pass)) << id;
    EXPECT_FALSE(seen[id].count(Status::Fail)) << id;
  }
  for (const char* id : {"thm_2_6", "prop_2_3", "lemma_2_4", "lemma_3_1", "thm_3_6"}) {
    EXPECT_TRUE(seen[id].count(Status::HypothesisViolation)) << id;
  }
}

TEST(Properties, ClassificationAgreesWithMinimalityOracle) {
  for (const auto& inst : finite_catalog()) {
    const auto ctx = resolve_finite(inst);
    if (ctx.T->order() > 256) continue;
    const auto rep = classify_extension(ctx.R, ctx.whole);
    const bool oracle_minimal = oracle::is_minimal(*ctx.T, oracle::to_set(ctx.R.members()), oracle::everything(*ctx.T));
    EXPECT_EQ(is_minimal_kind(rep.kind), oracle_minimal) << inst.id;
    EXPECT_EQ(is_minimal_extension(ctx.R, ctx.whole), oracle_minimal) << inst.id;
    if (oracle_minimal) {
      EXPECT_EQ(int(rep.inert_match) + int(rep.decomposed_match) + int(rep.ramified_match), 1) << inst.id;
    }
    if (inst.expected) EXPECT_EQ(to_string(rep.kind), *inst.expected) << inst.id;
  }
}

TEST(Properties, FixedRingsMatchOracle) {
  for (const auto& inst : finite_catalog()) {
    const auto ctx = resolve_finite(inst);
    const auto G = oracle_group(ctx.G);
    EXPECT_EQ(G.size(), ctx.G.order()) << inst.id;
    EXPECT_EQ(oracle::to_set(ctx.TG.members()), oracle::fixed(oracle::everything(*ctx.T), G)) << inst.id;
    EXPECT_EQ(oracle::to_set(ctx.RG.members()), oracle::fixed(oracle::to_set(ctx.R.members()), G)) << inst.id;
  }
}

// Same-kind transfer whenever the hypotheses hold, checked directly here.
TEST(Properties, MinimalKindSurvivesFixingUnderTheHypotheses) {
  int applicable = 0;
  for (const auto& inst : finite_catalog()) {
    const auto ctx = resolve_finite(inst);
    if (!ctx.invariant || ctx.RG == ctx.TG) continue;
    const auto base = classify_extension(ctx.R, ctx.whole);
    if (!is_minimal_kind(base.kind)) continue;
    // char(R^G / (M ∩ T^G)) must divide no orbit size n_r.
    const Ideal M = *base.conductor;
    const Ideal m = make_ideal(ctx.RG, M.members.intersect(ctx.TG.members()));
    const auto q = quotient(m);
    bool coprime = true;
    ctx.R.members().for_each([&](Elem r) {
      const auto n = orbit(r, ctx.G).size;
      if (n % q.ring->characteristic() == 0) coprime = false;
    });
    if (!coprime) continue;
    ++applicable;
    const auto fixed = classify_extension(ctx.RG, ctx.TG);
    EXPECT_EQ(fixed.kind, base.kind) << inst.id;
    EXPECT_EQ(oracle::to_set(fixed.conductor->members),
              oracle::conductor(*ctx.T, oracle::to_set(ctx.RG.members()), oracle::to_set(ctx.TG.members())));
  }
  EXPECT_GE(applicable, 3);
}

TEST(Properties, UnitOrderKeepsMinimality) {
  for (const auto& inst : finite_catalog()) {
    const auto ctx = resolve_finite(inst);
    if (!ctx.invariant || ctx.RG == ctx.TG) continue;
    if (!is_minimal_extension(ctx.R, ctx.whole)) continue;
    const Elem order = ctx.T->from_integer(static_cast<std::int64_t>(ctx.G.order()));
    if (!ctx.T->is_unit(order)) continue;
    EXPECT_TRUE(oracle::is_minimal(*ctx.T, oracle::to_set(ctx.RG.members()), oracle::to_set(ctx.TG.members())))
        << inst.id;
  }
}

TEST(Properties, CriticalIdealContractsToFixedCriticalIdeal) {
  for (const auto& inst : finite_catalog()) {
    const auto ctx = resolve_finite(inst);
    if (!ctx.invariant || ctx.RG == ctx.TG) continue;
    std::optional<Ideal> P;
    try {
      P = critical_ideal(ctx.R, ctx.whole);
    } catch (const Error&) {
      continue;
    }
    if (!P) continue;
    EXPECT_TRUE(oracle::is_prime(*ctx.T, oracle::to_set(ctx.R.members()), oracle::to_set(P->members)));
    const auto fixed = critical_ideal(ctx.RG, ctx.TG);
    ASSERT_TRUE(fixed.has_value()) << inst.id;
    EXPECT_EQ(fixed->members, P->members.intersect(ctx.RG.members())) << inst.id;
    // sigma(P) = P for every sigma, maximal or not.
    for (const auto& s : ctx.G.members()) EXPECT_EQ(ideal_image(s, *P), *P) << inst.id;
  }
}

TEST(Properties, ConductorContractionWhenMaximal) {
  for (const auto& inst : finite_catalog()) {
    const auto ctx = resolve_finite(inst);
    if (!ctx.invariant || ctx.R == ctx.whole) continue;
    const Ideal M = conductor(ctx.R, ctx.whole);
    if (!oracle::is_maximal(*ctx.T, oracle::to_set(ctx.R.members()), oracle::to_set(M.members))) continue;
    for (const auto& s : ctx.G.members()) EXPECT_EQ(ideal_image(s, M), M) << inst.id;
    for (const auto& N : spec(ctx.whole)) {
      if (M.members.is_subset_of(N.members)) EXPECT_EQ(N.members.intersect(ctx.R.members()), M.members) << inst.id;
    }
    if (ctx.RG == ctx.TG) continue;
    const auto fc = oracle::conductor(*ctx.T, oracle::to_set(ctx.RG.members()), oracle::to_set(ctx.TG.members()));
    EXPECT_EQ(fc, oracle::to_set(M.members.intersect(ctx.RG.members()))) << inst.id;
    EXPECT_EQ(fc, oracle::to_set(M.members.intersect(ctx.TG.members()))) << inst.id;
  }
}

TEST(Properties, TIsIntegralOverTGWithOrbitBoundedDegree) {
  for (const auto& inst : finite_catalog()) {
    const auto ctx = resolve_finite(inst);
    if (ctx.T->order() > 16) continue;  // keeps the exhaustive coefficient search small
    const auto TG = oracle::to_set(ctx.TG.members());
    for (Elem t = 0; t < ctx.T->order(); ++t) {
      EXPECT_TRUE(oracle::has_monic_relation(*ctx.T, t, TG, orbit(t, ctx.G).size + 1)) << inst.id;
    }
  }
}

TEST(Properties, CollapseRegressions) {
  for (const char* id : {"collapse_inert", "collapse_decomposed", "collapse_ramified"}) {
    const auto ctx = resolve_finite(*catalog_instance(id));
    EXPECT_TRUE(ctx.invariant) << id;
    EXPECT_TRUE(is_minimal_extension(ctx.R, ctx.whole)) << id;
    EXPECT_EQ(ctx.RG, ctx.TG) << id;
    EXPECT_EQ(classify_extension(ctx.RG, ctx.TG).kind, ExtensionKind::TrivialEqual) << id;
    EXPECT_EQ(verify("thm_2_6", *catalog_instance(id)).status, Status::HypothesisViolation) << id;
  }
}
