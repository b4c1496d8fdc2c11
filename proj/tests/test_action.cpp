#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringlab/action.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/errors.hpp"

using namespace ringlab;

namespace {

Elem el(const RingPtr& T, const std::string& label) { return T->parse_label(label); }

ActionGroup group_of(const RingPtr& T, std::initializer_list<const char*> actions) {
  std::vector<Automorphism> gens;
  for (const char* a : actions) gens.push_back(parse_automorphism(T, Expr::parse(a)));
  return close_group(T, std::move(gens));
}

std::set<oracle::Perm> oracle_group(const ActionGroup& G) {
  std::vector<oracle::Perm> gens;
  for (const auto& g : G.generators()) gens.push_back(g.perm());
  return oracle::group(G.ambient()->order(), gens);
}

}  // namespace

TEST(Automorphism, BuiltinsAreAutomorphismsByOracle) {
  for (const auto& [ring, action] : std::vector<std::pair<const char*, const char*>>{
           {"gf(2,6)", "frobenius(2)"},
           {"gf(3,2)", "frobenius"},
           {"prod(gf(5,1),gf(5,1))", "swap"},
           {"prod(gf(3,2),gf(3,2))", "componentwise(frobenius,frobenius)"},
           {"idealization(gf(3,2),self)", "componentwise(frobenius,frobenius)"},
           {"idealization(gf(5,1),self)", "componentwise(id,scale(4))"},
           {"prod(gf(2,2),gf(2,2))", "compose(swap,componentwise(frobenius,id))"}}) {
    const auto T = build_ring(ring);
    EXPECT_TRUE(oracle::is_automorphism(*T, parse_automorphism(T, Expr::parse(action)).perm())) << ring << action;
  }
}

TEST(Automorphism, NonHomomorphicMapRejected) {
  const auto T = make_zmod(5);
  EXPECT_THROW(parse_automorphism(T, Expr::parse("map([1->2,2->1])")), AxiomViolation);
  std::vector<Elem> p{0, 0, 1, 2, 3};
  EXPECT_THROW(Automorphism::from_map(T, p), AxiomViolation);
}

TEST(Automorphism, FrobeniusNeedsPrimeCharacteristic) {
  EXPECT_THROW(frobenius(make_zmod(6)), Error);
}

TEST(CloseGroup, Examples) {
  const auto F4 = make_gf(2, 2);
  EXPECT_TRUE(close_group(F4, {Automorphism::identity(F4)}).is_trivial());
  EXPECT_EQ(group_of(make_gf(3, 4), {"frobenius"}).order(), 4u);
  EXPECT_EQ(group_of(build_ring("prod(gf(5,1),gf(5,1))"), {"swap"}).order(), 2u);
}

TEST(CloseGroup, MatchesWordEnumeration) {
  const auto T = build_ring("prod(gf(2,2),gf(2,2))");
  const auto G = group_of(T, {"swap", "componentwise(frobenius,id)"});
  std::set<oracle::Perm> mine;
  for (const auto& g : G.members()) mine.insert(g.perm());
  EXPECT_EQ(mine, oracle_group(G));
  EXPECT_EQ(G.order(), 8u);
  EXPECT_TRUE(G.members().front().is_identity());
}

TEST(CloseGroup, CapExceeded) {
  Limits tight;
  tight.max_group_order = 3;
  const auto T = make_gf(3, 4);
  EXPECT_THROW(close_group(T, {frobenius(T)}, tight), CapExceeded);
}

TEST(Invariance, Examples) {
  const auto T9 = build_ring("prod(gf(3,2),gf(3,2))");
  EXPECT_TRUE(is_invariant_subring(named_subring(T9, Expr::parse("diag")),
                                   group_of(T9, {"componentwise(frobenius,frobenius)"})));
  const auto I9 = build_ring("idealization(gf(3,2),self)");
  EXPECT_TRUE(is_invariant_subring(named_subring(I9, Expr::parse("base")),
                                   group_of(I9, {"componentwise(frobenius,frobenius)"})));
  const auto T3 = build_ring("prod(gf(3,1),gf(3,1))");
  const auto left = generated_subring(T3, {"(1,0)"});
  EXPECT_TRUE(left.is_whole());  // unital closure of (1,0) is all of F_3 x F_3
  const auto R = SubringHandle::from_members(T3, [&] {
    ElementSet s(T3->order());
    for (const char* l : {"(0,0)", "(1,1)", "(2,2)"}) s.insert(el(T3, l));
    return s;
  }());
  EXPECT_TRUE(is_invariant_subring(R, group_of(T3, {"swap"})));
  const auto T4 = build_ring("prod(gf(2,2),gf(2,2))");
  EXPECT_FALSE(is_invariant_subring(generated_subring(T4, {"([0,1],[0,0])"}), group_of(T4, {"swap"})));
}

TEST(Orbit, IdentityGroup) {
  const auto T = make_zmod(6);
  const auto G = close_group(T, {});
  const Orbit o = orbit(el(T, "5"), G);
  EXPECT_EQ(o.size, 1u);
  EXPECT_EQ(o.orbit_sum, el(T, "5"));
  EXPECT_EQ(o.orbit_prod, el(T, "5"));
}

TEST(Orbit, GeneratorOfF4UnderFrobenius) {
  const auto T = make_gf(2, 2);
  const Orbit o = orbit(el(T, "[0,1]"), group_of(T, {"frobenius"}));
  EXPECT_EQ(o.size, 2u);
  EXPECT_EQ(oracle::to_set(o.members), (oracle::Set{el(T, "[0,1]"), el(T, "[1,1]")}));
  EXPECT_EQ(o.orbit_sum, T->one());
  EXPECT_EQ(o.orbit_prod, T->one());
}

TEST(Orbit, SwapOnF3xF3) {
  const auto T = build_ring("prod(gf(3,1),gf(3,1))");
  const Orbit o = orbit(el(T, "(1,2)"), group_of(T, {"swap"}));
  EXPECT_EQ(oracle::to_set(o.members), (oracle::Set{el(T, "(1,2)"), el(T, "(2,1)")}));
  EXPECT_EQ(o.orbit_sum, el(T, "(0,0)"));
  EXPECT_EQ(o.orbit_prod, el(T, "(2,2)"));
}

TEST(FixedSubring, Examples) {
  const auto T = build_ring("prod(gf(3,2),gf(3,2))");
  const auto G = group_of(T, {"componentwise(frobenius,frobenius)"});
  const auto TG = fixed_subring(SubringHandle::whole(T), G);
  EXPECT_EQ(TG.size(), 9u);
  EXPECT_EQ(oracle::to_set(TG.members()), oracle::fixed(oracle::everything(*T), oracle_group(G)));
  const auto RG = fixed_subring(named_subring(T, Expr::parse("diag")), G);
  EXPECT_EQ(RG.size(), 3u);

  const auto Z = make_zmod(10);
  EXPECT_TRUE(fixed_subring(SubringHandle::whole(Z), close_group(Z, {})).is_whole());
}

TEST(FixedSubring, NonInvariantRejected) {
  const auto T = build_ring("prod(gf(2,2),gf(2,2))");
  EXPECT_THROW(fixed_subring(generated_subring(T, {"([0,1],[0,0])"}), group_of(T, {"swap"})), PreconditionError);
}

// R^G = R ∩ T^G for invariant R, and the fixed set is a subring.
TEST(FixedSubring, IntersectionIdentityOnCatalogShapes) {
  struct Case {
    const char *ring, *sub, *action;
  };
  for (const auto& c : {Case{"gf(2,6)", "subfield(3)", "frobenius(2)"}, Case{"gf(2,6)", "subfield(2)", "frobenius"},
                        Case{"prod(gf(3,2),gf(3,2))", "diag", "componentwise(frobenius,frobenius)"},
                        Case{"idealization(gf(3,2),self)", "base", "componentwise(frobenius,frobenius)"},
                        Case{"prod(gf(5,1),gf(5,1))", "diag", "swap"},
                        Case{"idealization(gf(5,1),self)", "base", "componentwise(id,scale(4))"}}) {
    const auto T = build_ring(c.ring);
    const auto R = named_subring(T, Expr::parse(c.sub));
    const auto G = group_of(T, {c.action});
    ASSERT_TRUE(is_invariant_subring(R, G));
    const auto RG = fixed_subring(R, G);
    const auto TG = fixed_subring(SubringHandle::whole(T), G);
    EXPECT_EQ(RG.members(), R.members().intersect(TG.members())) << c.ring;
    EXPECT_TRUE(oracle::is_subring(*T, oracle::to_set(RG.members())));
    EXPECT_EQ(oracle::to_set(RG.members()), oracle::fixed(oracle::to_set(R.members()), oracle_group(G)));
  }
}

TEST(QuotientAction, ZeroIdealOfF9) {
  const auto T = make_gf(3, 2);
  const auto qa = quotient_action(zero_ideal(SubringHandle::whole(T)), group_of(T, {"frobenius"}));
  EXPECT_EQ(qa.quotient.ring->order(), 9u);
  EXPECT_EQ(qa.group.order(), 2u);
}

TEST(QuotientAction, IdealizationModNilradicalIsFrobenius) {
  const auto T = build_ring("idealization(gf(3,2),self)");
  const auto R = SubringHandle::whole(T);
  const auto N = spec(R).front();
  const auto qa = quotient_action(N, group_of(T, {"componentwise(frobenius,frobenius)"}));
  const auto& Q = *qa.quotient.ring;
  ASSERT_EQ(Q.order(), 9u);
  ASSERT_EQ(qa.group.order(), 2u);
  const auto& sigma = qa.group.members()[1];
  for (Elem q = 0; q < Q.order(); ++q) EXPECT_EQ(sigma(q), Q.pow(q, 3));
}

TEST(QuotientAction, MovedIdealRejected) {
  const auto T = build_ring("prod(gf(3,1),gf(3,1))");
  const std::vector<Elem> g{el(T, "(1,0)")};
  const Ideal M = ideal_generated(SubringHandle::whole(T), g);
  EXPECT_EQ(ideal_orbit(M, group_of(T, {"swap"})).size(), 2u);
  EXPECT_THROW(quotient_action(M, group_of(T, {"swap"})), PreconditionError);
}

TEST(FixedQuotientIso, FieldWithFrobenius) {
  const auto T = make_gf(3, 2);
  const auto r = fixed_quotient_iso_check(zero_ideal(SubringHandle::whole(T)), group_of(T, {"frobenius"}));
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_TRUE(r.isomorphism);
  EXPECT_EQ(r.phi.size(), 3u);
}

TEST(FixedQuotientIso, DiagonalOfF9xF9) {
  const auto T = build_ring("prod(gf(3,2),gf(3,2))");
  const auto R = named_subring(T, Expr::parse("diag"));
  const auto r = fixed_quotient_iso_check(zero_ideal(R), group_of(T, {"componentwise(frobenius,frobenius)"}));
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_TRUE(r.isomorphism);
}

TEST(FixedQuotientIso, CharacteristicDividingOrbitSizeFlagged) {
  const auto T = make_gf(2, 2);
  const auto r = fixed_quotient_iso_check(zero_ideal(SubringHandle::whole(T)), group_of(T, {"frobenius"}));
  EXPECT_FALSE(r.char_coprime);
  EXPECT_FALSE(r.hypotheses_hold());
  EXPECT_FALSE(r.isomorphism);
  EXPECT_FALSE(r.char_witness.empty());
}

TEST(Symmetrize, AlreadyFixedCoefficientsAreUntouched) {
  const auto T = build_ring("prod(gf(3,2),gf(3,2))");
  const auto R = named_subring(T, Expr::parse("diag"));
  const auto G = group_of(T, {"componentwise(frobenius,frobenius)"});
  const std::vector<SymTerm> terms{{el(T, "([2,0],[2,0])"), el(T, "([1,0],[0,0])")},
                                   {el(T, "([1,0],[1,0])"), el(T, "([0,0],[1,0])")}};
  Elem t = T->zero();
  for (const auto& s : terms) t = T->add(t, T->mul(s.r, s.u));
  const auto cert = symmetrize_representation(t, terms, R, G, SymMode::Orbit);
  EXPECT_EQ(cert.m, 1u);
  EXPECT_EQ(cert.weights, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(cert.coeffs, (std::vector<Elem>{terms[0].r, terms[1].r}));
  EXPECT_TRUE(replay_certificate(t, cert, R, G));
}

TEST(Symmetrize, InvalidInputsRejected) {
  const auto T = make_gf(2, 2);
  const auto R = SubringHandle::whole(T);
  const auto G = group_of(T, {"frobenius"});
  const std::vector<SymTerm> terms{{T->one(), el(T, "[0,1]")}};
  EXPECT_THROW(symmetrize_representation(el(T, "[0,1]"), terms, R, G, SymMode::Orbit), PreconditionError);
}

TEST(Symmetrize, FullGroupModeOnF64) {
  const auto T = make_gf(2, 6);
  const auto R = named_subring(T, Expr::parse("subfield(3)"));
  const auto G = group_of(T, {"frobenius(2)"});
  ASSERT_EQ(G.order(), 3u);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    const auto inst = random_sym_instance(R, G, rng, 3);
    const auto cert = symmetrize_representation(inst.t, inst.terms, R, G, SymMode::FullGroup);
    ASSERT_TRUE(cert.hypothesis_ok) << cert.hypothesis_detail;
    EXPECT_EQ(cert.m, 3u);
    EXPECT_TRUE(cert.verified);
    EXPECT_TRUE(replay_certificate(inst.t, cert, R, G));
  }
}

// Certificates always replay, and every coefficient is fixed and lies in R.
TEST(Symmetrize, RandomCertificatesReplay) {
  struct Case {
    const char *ring, *sub, *action;
  };
  for (const auto& c : {Case{"prod(gf(3,2),gf(3,2))", "diag", "componentwise(frobenius,frobenius)"},
                        Case{"idealization(gf(3,2),self)", "base", "componentwise(frobenius,frobenius)"},
                        Case{"gf(2,6)", "subfield(3)", "frobenius(2)"}}) {
    const auto T = build_ring(c.ring);
    const auto R = named_subring(T, Expr::parse(c.sub));
    const auto G = group_of(T, {c.action});
    const auto RG = oracle::fixed(oracle::to_set(R.members()), oracle_group(G));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
      const auto inst = random_sym_instance(R, G, rng, 2);
      const auto cert = symmetrize_representation(inst.t, inst.terms, R, G, SymMode::Orbit);
      if (!cert.hypothesis_ok) continue;
      EXPECT_TRUE(replay_certificate(inst.t, cert, R, G)) << c.ring;
      for (Elem a : cert.coeffs) EXPECT_TRUE(RG.count(a)) << c.ring;
      // m t = sum w_i c_i u_i, recomputed here from the tables.
      Elem lhs = T->times(static_cast<std::int64_t>(cert.m), inst.t), rhs = T->zero();
      for (std::size_t k = 0; k < cert.coeffs.size(); ++k) {
        rhs = T->add(rhs, T->times(static_cast<std::int64_t>(cert.weights[k]), T->mul(cert.coeffs[k], cert.units[k])));
      }
      EXPECT_EQ(lhs, rhs);
    }
  }
}
