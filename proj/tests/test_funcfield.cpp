#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/funcfield.hpp"

using namespace ringlab;

namespace {

RationalFunction rf(std::uint32_t p, const char* s) { return RationalFunction::parse(p, s); }

DVRWitness at_x(std::uint32_t p) { return DVRWitness(p, FpPoly::x(p)); }

SubstGroup scaling(std::uint32_t p, std::uint32_t a) { return SubstGroup(p, {AffineSubst{a, 0}}); }

oracle::Coeffs raw(const FpPoly& f) { return oracle::Coeffs(f.coeffs().begin(), f.coeffs().end()); }

// Valuation by raw long division, no gcd or canonical form involved.
std::int64_t oracle_valuation(const FpPoly& center, const FpPoly& num, const FpPoly& den, std::int64_t p) {
  return oracle::multiplicity(raw(num), raw(center), p) - oracle::multiplicity(raw(den), raw(center), p);
}

}  // namespace

TEST(RationalFunction, CanonicalFormIsUnique) {
  EXPECT_EQ(rf(5, "(x^2-1)/(x-1)"), rf(5, "x+1"));
  EXPECT_EQ(rf(5, "(2x)/(4x^2)"), rf(5, "3/x"));
  EXPECT_EQ(rf(7, "(x^3+x)/(x^2)"), rf(7, "(x^2+1)/x"));
  const auto t = rf(5, "(x^4+1)/(x^2)");
  EXPECT_TRUE(t.denominator().is_monic());
  EXPECT_TRUE(gcd(t.numerator(), t.denominator()).is_one());
  EXPECT_EQ(RationalFunction::zero(5), rf(5, "0/(x+3)"));
}

TEST(RationalFunction, FieldArithmetic) {
  const auto a = rf(5, "(x+1)/(x^2+2)"), b = rf(5, "x^3/(x+4)");
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a * a.inverse(), RationalFunction::one(5));
  EXPECT_EQ(a.pow(-2) * a.pow(2), RationalFunction::one(5));
  EXPECT_THROW(RationalFunction::zero(5).inverse(), Error);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(at_x(5).valuation(rf(5, "x^2/(x+1)")), Valuation::of(2));
  EXPECT_EQ(at_x(5).valuation(rf(5, "1/x")), Valuation::of(-1));
  EXPECT_EQ(at_x(5).valuation(rf(5, "(x^3+x)/(x^2)")), Valuation::of(-1));
  EXPECT_TRUE(at_x(5).valuation(RationalFunction::zero(5)).is_infinite());
}

TEST(Valuation, MatchesLongDivisionOracle) {
  std::mt19937_64 rng(5);
  for (const char* center : {"x", "x+1", "x^2+2"}) {
    const FpPoly f = FpPoly::parse(5, center);
    const DVRWitness V(5, f);
    for (const auto& t : probes(V, rng)) {
      if (t.is_zero()) continue;
      EXPECT_EQ(V.valuation(t).value(), oracle_valuation(f, t.numerator(), t.denominator(), 5)) << t.to_string();
    }
  }
}

TEST(Valuation, CenterMustBeMonicIrreducible) {
  EXPECT_THROW(DVRWitness(5, FpPoly::parse(5, "x^2-1")), PreconditionError);
  EXPECT_THROW(DVRWitness(5, FpPoly::parse(5, "2x")), PreconditionError);
}

TEST(DVR, Membership) {
  const auto V = at_x(3);
  EXPECT_TRUE(V.contains(RationalFunction::one(3)));
  EXPECT_FALSE(V.in_maximal_ideal(RationalFunction::one(3)));
  EXPECT_FALSE(V.contains(rf(3, "1/x")));
  EXPECT_TRUE(V.in_maximal_ideal(rf(3, "x/(x+1)")));
}

TEST(Subst, FixedElements) {
  const auto G = scaling(5, 2);
  EXPECT_EQ(G.order(), 4u);
  EXPECT_TRUE(G.fixes(rf(5, "x^4")));
  EXPECT_FALSE(G.fixes(rf(5, "x")));
  const SubstGroup trivial(5, {});
  EXPECT_TRUE(trivial.fixes(rf(5, "(x^2+3)/(x+1)")));
  EXPECT_EQ(scaling(7, 3).order(), 6u);
  EXPECT_EQ(parse_subst(5, Expr::parse("translate(1)")), (AffineSubst{1, 1}));
}

TEST(Invariance, Examples) {
  EXPECT_TRUE(invariance_check(at_x(5), scaling(5, 2)));
  EXPECT_FALSE(invariance_check(at_x(5), SubstGroup(5, {AffineSubst{1, 1}})));
  EXPECT_TRUE(invariance_check(DVRWitness(5, FpPoly::parse(5, "x+1")), SubstGroup(5, {})));
}

TEST(CriticalIdealWitness, ConsistentOnProbes) {
  std::mt19937_64 rng(0);
  const auto V = at_x(5);
  const auto P = probes(V, rng);
  const SubstGroup trivial(5, {});
  for (const char* t : {"1/x", "1/x^2", "(x+1)/x^3"}) {
    const auto r = critical_ideal_witness(V, trivial, rf(5, t), P);
    EXPECT_TRUE(r.holds()) << t << ": " << r.detail;
    EXPECT_GT(r.probes, 0u);
  }
}

TEST(CriticalIdealWitness, NeedsWideProbeSpan) {
  std::mt19937_64 rng(0);
  const auto V = at_x(5);
  const auto narrow = probes(V, rng, -1, 1);
  EXPECT_THROW(critical_ideal_witness(V, SubstGroup(5, {}), rf(5, "1/x"), narrow), PreconditionError);
}

TEST(ValuationAxioms, ThousandPairs) {
  for (std::uint32_t p : {5u, 7u}) {
    std::mt19937_64 rng(p);
    const auto r = valuation_axioms_check(at_x(p), rng, 1000);
    EXPECT_TRUE(r.holds()) << r.detail;
    EXPECT_GE(r.probes, 1000u);
  }
}

TEST(FixedProbes, AreFixedWithValuationsInDZ) {
  for (auto [p, a, d] : {std::tuple{5u, 2u, 4}, std::tuple{7u, 3u, 6}}) {
    std::mt19937_64 rng(1);
    const auto G = scaling(p, a);
    const auto V = at_x(p);
    for (const auto& t : fixed_probes(V, G, rng)) {
      EXPECT_TRUE(G.fixes(t));
      if (!t.is_zero()) EXPECT_EQ(V.valuation(t).value() % d, 0) << t.to_string();
    }
  }
}

TEST(ValuationPairFixed, ExampleSamples) {
  const auto G = scaling(5, 2);
  const std::vector<RationalFunction> samples{rf(5, "x^4"), rf(5, "1/x^4"), rf(5, "x^4/(x^4+1)"),
                                              RationalFunction::one(5)};
  const auto r = valuation_pair_fixed_check(at_x(5), G, samples);
  EXPECT_TRUE(r.holds()) << r.detail;
}

TEST(ValuationPairFixed, SeededProbesForBothFamilies) {
  for (auto [p, a] : {std::pair{5u, 2u}, std::pair{7u, 3u}}) {
    std::mt19937_64 rng(0);
    const auto G = scaling(p, a);
    const auto V = at_x(p);
    const auto r = valuation_pair_fixed_check(V, G, fixed_probes(V, G, rng));
    EXPECT_TRUE(r.holds()) << r.detail;
  }
}

TEST(ValuationPairFixed, TrivialGroupReducesToV) {
  std::mt19937_64 rng(0);
  const auto V = at_x(5);
  const SubstGroup trivial(5, {});
  EXPECT_TRUE(valuation_pair_fixed_check(V, trivial, fixed_probes(V, trivial, rng)).holds());
}

TEST(IntegrallyClosed, NegativeValuationObstruction) {
  std::mt19937_64 rng(0);
  const auto G = scaling(5, 2);
  const std::vector<RationalFunction> samples{rf(5, "1/x^4"), rf(5, "x^4"), rf(5, "(x^4+1)/x^4")};
  const auto r = integrally_closed_fixed_check(at_x(5), G, samples, 4, rng);
  EXPECT_TRUE(r.holds()) << r.detail;
}

TEST(PerfectLocalization, ExplicitInverses) {
  const auto G = scaling(5, 2);
  const std::vector<RationalFunction> samples{rf(5, "1/x^4"), rf(5, "1/x^8"), rf(5, "x^4")};
  const auto r = perfect_localization_fixed_check(at_x(5), G, samples);
  EXPECT_TRUE(r.holds()) << r.detail;
}

TEST(FilterContraction, PowersOfTheMaximalIdeal) {
  EXPECT_TRUE(filter_contraction_fixed_check(at_x(5), scaling(5, 2), 6).holds());
  EXPECT_TRUE(filter_contraction_fixed_check(at_x(7), scaling(7, 3), 6).holds());
}

TEST(NormalPair, BoundedClosures) {
  std::mt19937_64 rng(0);
  const auto G = scaling(5, 2);
  const std::vector<RationalFunction> samples{rf(5, "1/x^4"), rf(5, "x^4"), RationalFunction::one(5)};
  EXPECT_TRUE(normal_pair_fixed_check(at_x(5), G, samples, rng).holds());
}

TEST(MaximalIdealOrbit, ScalingFixesM) {
  std::mt19937_64 rng(0);
  const auto V = at_x(7);
  EXPECT_TRUE(maximal_ideal_orbit_check(V, scaling(7, 3), probes(V, rng)).holds());
}

TEST(MaximalIdealOrbit, TranslationMovesM) {
  std::mt19937_64 rng(0);
  const auto V = at_x(5);
  EXPECT_FALSE(maximal_ideal_orbit_check(V, SubstGroup(5, {AffineSubst{1, 1}}), probes(V, rng)).holds());
}

TEST(OverringGeneration, SampledMinimalityEvidence) {
  std::mt19937_64 rng(0);
  const auto V = at_x(5);
  const auto r = overring_generation_check(V, probes(V, rng));
  EXPECT_TRUE(r.holds()) << r.detail;
}
