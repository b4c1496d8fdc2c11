#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/extend.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subring.hpp"

using namespace ringlab;

namespace {

Elem el(const RingPtr& T, const std::string& label) { return T->parse_label(label); }

}  // namespace

TEST(Zmod, TrivialRingHasZeroEqualOne) {
  const auto T = make_zmod(1);
  EXPECT_EQ(T->order(), 1u);
  EXPECT_EQ(T->zero(), T->one());
  EXPECT_TRUE(oracle::ring_axioms(*T));
}

TEST(Zmod, Zmod4PassesAxiomOracle) {
  const auto T = make_zmod(4);
  EXPECT_TRUE(oracle::ring_axioms(*T));
  EXPECT_FALSE(find_axiom_violation(*T).has_value());
  EXPECT_EQ(T->characteristic(), 4u);
}

TEST(Zmod, ThreeIsIdempotentInZmod6) {
  const auto T = make_zmod(6);
  EXPECT_EQ(T->mul(el(T, "3"), el(T, "3")), el(T, "3"));
}

TEST(Zmod, ZeroModulusRejected) { EXPECT_THROW(make_zmod(0), PreconditionError); }

TEST(Galois, PrimeFieldF2) {
  const auto T = make_gf(2, 1, FpPoly::parse(2, "x"));
  EXPECT_EQ(T->order(), 2u);
  EXPECT_TRUE(T->is_field());
}

TEST(Galois, F9EveryNonzeroElementInvertible) {
  const auto T = make_gf(3, 2, FpPoly::parse(3, "x^2+1"));
  ASSERT_EQ(T->order(), 9u);
  EXPECT_TRUE(oracle::ring_axioms(*T));
  for (Elem a = 0; a < T->order(); ++a) {
    if (a == T->zero()) continue;
    bool found = false;
    for (Elem b = 0; b < T->order(); ++b) found = found || T->mul(a, b) == T->one();
    EXPECT_TRUE(found) << T->label(a);
    EXPECT_TRUE(T->inverse(a).has_value());
  }
}

TEST(Galois, ReducibleModulusReportsFactorX) {
  try {
    make_gf(2, 2, FpPoly::parse(2, "x^2+x"));
    FAIL() << "expected ConstructionError";
  } catch (const ConstructionError& e) {
    EXPECT_NE(std::string(e.what()).find("factor x"), std::string::npos) << e.what();
  }
}

TEST(Galois, NonPrimeCharacteristicRejected) { EXPECT_THROW(make_gf(4, 1), ConstructionError); }

TEST(Galois, LabelsAreCoefficientTuples) {
  const auto T = make_gf(2, 2);
  EXPECT_TRUE(T->find("[0,1]").has_value());
  EXPECT_TRUE(T->find("[1,1]").has_value());
  EXPECT_EQ(T->label(T->one()), "[1,0]");
}

TEST(Galois, OrderCapIsEnforced) {
  Limits small;
  small.max_ring_order = 16;
  EXPECT_THROW(make_gf(2, 6, std::nullopt, small), CapExceeded);
  EXPECT_NO_THROW(make_gf(2, 4, std::nullopt, small));
}

TEST(Product, OrthogonalIdempotentsInF2xF2) {
  const auto T = build_ring("prod(gf(2,1),gf(2,1))");
  EXPECT_EQ(T->order(), 4u);
  EXPECT_EQ(T->mul(el(T, "(1,0)"), el(T, "(0,1)")), el(T, "(0,0)"));
}

TEST(Product, F3xF3PassesAxiomOracle) {
  const auto T = build_ring("prod(gf(3,1),gf(3,1))");
  EXPECT_TRUE(oracle::ring_axioms(*T));
}

TEST(Product, Z2xZ3IsomorphicToZ6) {
  const auto A = build_ring("prod(zmod(2),zmod(3))");
  const auto B = make_zmod(6);
  const auto iso = find_isomorphism(*A, *B);
  ASSERT_TRUE(iso.has_value());
  for (Elem x = 0; x < 6; ++x) {
    for (Elem y = 0; y < 6; ++y) {
      EXPECT_EQ((*iso)[A->add(x, y)], B->add((*iso)[x], (*iso)[y]));
      EXPECT_EQ((*iso)[A->mul(x, y)], B->mul((*iso)[x], (*iso)[y]));
    }
  }
  EXPECT_TRUE(oracle::isomorphic_by_search(*A, *B));
}

TEST(Product, NonIsomorphicRingsHaveNoIsomorphism) {
  EXPECT_FALSE(find_isomorphism(*make_zmod(4), *build_ring("prod(zmod(2),zmod(2))")).has_value());
}

TEST(Idealization, SquareZeroPart) {
  const auto T = build_ring("idealization(gf(3,1),self)");
  EXPECT_EQ(T->order(), 9u);
  EXPECT_EQ(T->mul(el(T, "(0,1)"), el(T, "(0,1)")), el(T, "(0,0)"));
  EXPECT_TRUE(oracle::ring_axioms(*T));
}

TEST(Idealization, F9SelfHasOrder81AndPassesAxioms) {
  const auto T = build_ring("idealization(gf(3,2),self)");
  EXPECT_EQ(T->order(), 81u);
  EXPECT_TRUE(oracle::ring_axioms(*T));
}

TEST(Idealization, Zmod4OverZmod2) {
  const auto T = build_ring("idealization(zmod(4),cyclic([2]))");
  EXPECT_EQ(T->order(), 8u);
  EXPECT_TRUE(oracle::ring_axioms(*T));
}

TEST(Quotient, Zmod12ByFourIsZmod4) {
  const auto Q = build_ring("quotient(zmod(12),[4])");
  EXPECT_EQ(Q->order(), 4u);
  EXPECT_TRUE(oracle::isomorphic_by_search(*Q, *make_zmod(4)));
}

TEST(Module, SimpleModules) {
  EXPECT_TRUE(is_simple_module(*FiniteModule::over_itself(make_gf(3, 1))));
  EXPECT_FALSE(is_simple_module(*FiniteModule::over_itself(make_zmod(4))));
  EXPECT_TRUE(is_simple_module(*FiniteModule::over_itself(make_gf(3, 2))));
  EXPECT_FALSE(is_simple_module(*FiniteModule::free(make_gf(3, 1), 2)));
}

TEST(Module, ZeroModuleRejected) {
  const auto F = make_gf(2, 1);
  const auto zero = FiniteModule::cyclic(F, {F->one()});
  EXPECT_THROW(is_simple_module(*zero), PreconditionError);
}

TEST(Module, BadScalarTableRejected) {
  const auto F = make_zmod(2);
  FiniteModule::Tables t;
  t.labels = {"0", "1"};
  t.add = {0, 1, 1, 0};
  t.scalar = {0, 1, 0, 1};  // 0 * m = m breaks the module laws
  EXPECT_THROW(FiniteModule::build(F, t, "bad"), AxiomViolation);
}

// Idealization R(+)M is minimal over R(+)0 iff M is simple, by the
// exhaustive minimality oracle.
TEST(Module, IdealizationMinimalIffSimple) {
  for (const char* expr : {"idealization(gf(3,1),self)", "idealization(gf(2,2),self)", "idealization(gf(3,1),free(2))",
                           "idealization(zmod(4),self)", "idealization(zmod(4),cyclic([2]))",
                           "idealization(gf(2,1),free(3))"}) {
    const auto T = build_ring(expr);
    const auto& parts = std::get<IdealizationParts>(T->parts());
    const auto R = named_subring(T, Expr::parse("base"));
    const bool minimal = oracle::is_minimal(*T, oracle::to_set(R.members()), oracle::everything(*T));
    EXPECT_EQ(minimal, is_simple_module(*parts.module)) << expr;
    EXPECT_EQ(minimal, is_minimal_extension(R, SubringHandle::whole(T))) << expr;
  }
}

TEST(Subring, EmptySeedGivesPrimeSubring) {
  const auto T = build_ring("prod(zmod(4),gf(2,2))");
  const auto S = subring_closure(T, std::vector<Elem>{});
  EXPECT_EQ(oracle::to_set(S.members()), oracle::closure(*T, {}));
  EXPECT_EQ(S.size(), 4u);
}

TEST(Subring, GeneratorOfF4GivesEverything) {
  const auto T = make_gf(2, 2);
  const std::vector<Elem> g{el(T, "[0,1]")};
  EXPECT_TRUE(subring_closure(T, g).is_whole());
}

TEST(Subring, IdempotentGeneratesFullF3xF3) {
  const auto T = build_ring("prod(gf(3,1),gf(3,1))");
  const std::vector<Elem> seed{el(T, "(1,0)")};
  const auto S = subring_closure(T, seed);
  EXPECT_EQ(oracle::to_set(S.members()), oracle::closure(*T, {seed[0]}));
  EXPECT_EQ(S.size(), 9u);
}

TEST(Subring, FromMembersValidates) {
  const auto T = make_zmod(6);
  ElementSet bad(6);
  bad.insert(0);
  bad.insert(2);
  EXPECT_THROW(SubringHandle::from_members(T, bad), PreconditionError);
}

TEST(Subring, CrossRingMixingRejected) {
  const auto A = make_zmod(4);
  const auto B = make_zmod(4);
  EXPECT_THROW(require_same_ambient(A, B), PreconditionError);
}

TEST(Subring, ClosureIsIdempotentAndMonotone) {
  const auto T = build_ring("prod(gf(2,2),zmod(4))");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> a, b;
    for (Elem e = 0; e < T->order(); ++e) {
      const auto r = rng() % 8;
      if (r == 0) a.push_back(e);
      if (r <= 1) b.push_back(e);
    }
    const auto Sa = subring_closure(T, a);
    const auto again = subring_closure(T, Sa.members().members());
    EXPECT_EQ(Sa, again);
    EXPECT_TRUE(Sa.is_subset_of(subring_closure(T, b)));
    EXPECT_TRUE(oracle::is_subring(*T, oracle::to_set(Sa.members())));
  }
}

TEST(Materialize, SubringCopyKeepsLabelsAndAxioms) {
  const auto T = make_gf(2, 4);
  const auto S = named_subring(T, Expr::parse("subfield(2)"));
  const auto m = materialize(S);
  EXPECT_EQ(m.ring->order(), 4u);
  EXPECT_TRUE(oracle::ring_axioms(*m.ring));
  for (Elem i = 0; i < m.ring->order(); ++i) EXPECT_EQ(m.ring->label(i), T->label(m.to_ambient[i]));
}

TEST(Construct, EveryCatalogRingPassesBothAxiomCheckers) {
  for (const char* expr :
       {"zmod(12)", "gf(2,6)", "gf(2,4)", "prod(gf(3,2),gf(3,2))", "idealization(gf(3,2),self)",
        "idealization(gf(5,1),self)", "idealization(gf(2,2),self)", "prod(gf(2,2),gf(2,2))",
        "prod(prod(gf(2,1),gf(2,1)),gf(2,1))", "idealization(gf(3,1),free(2))", "idealization(zmod(4),cyclic([2]))"}) {
    const auto T = build_ring(expr);
    EXPECT_FALSE(find_axiom_violation(*T).has_value()) << expr;
    if (T->order() <= 81) EXPECT_TRUE(oracle::ring_axioms(*T)) << expr;
  }
}

TEST(Construct, UnknownConstructorIsParseError) {
  EXPECT_THROW(build_ring("matrix(2,2)"), Error);
  EXPECT_THROW(build_ring("gf(2"), ParseError);
}

TEST(Construct, NamedSubrings) {
  const auto T = build_ring("prod(gf(5,1),gf(5,1))");
  EXPECT_EQ(named_subring(T, Expr::parse("diag")).size(), 5u);
  EXPECT_EQ(named_subring(T, Expr::parse("prime")).size(), 5u);
  EXPECT_TRUE(named_subring(T, Expr::parse("all")).is_whole());
  EXPECT_EQ(named_subring(make_gf(2, 6), Expr::parse("subfield(3)")).size(), 8u);
  EXPECT_THROW(named_subring(make_gf(2, 6), Expr::parse("subfield(4)")), Error);
}

TEST(Construct, EmbeddingOfF2IntoF16) {
  const auto B = make_gf(2, 1);
  const auto T = make_gf(2, 4);
  const auto e = find_embedding(*B, *T);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ((*e)[B->one()], T->one());
  EXPECT_FALSE(find_embedding(*make_gf(2, 3), *T).has_value());
}

TEST(Expr, ParsesNestedCallsListsAndAtoms) {
  const Expr e = Expr::parse("prod( gf(3,2,x^2+1), quotient(zmod(12),[4, 6]) )");
  ASSERT_TRUE(e.is_call("prod"));
  EXPECT_TRUE(e.arg(0).is_call("gf"));
  EXPECT_EQ(e.arg(0).arg(2).text, "x^2+1");
  EXPECT_EQ(e.arg(1).arg(1).kind, Expr::Kind::List);
  EXPECT_EQ(e.arg(1).arg(1).items, (std::vector<std::string>{"4", "6"}));
  EXPECT_EQ(Expr::parse(e.to_string()).to_string(), e.to_string());
  EXPECT_THROW(Expr::parse("gf(2,").as_integer(), ParseError);
}

TEST(Poly, ArithmeticAgreesWithOracleDivision) {
  const FpPoly f = FpPoly::parse(5, "x^3 + 2x + 1");
  const FpPoly g = FpPoly::parse(5, "(x+1)^2");
  const auto [q, r] = (f * g + FpPoly::parse(5, "3x")).divmod(g);
  EXPECT_EQ(q, f);
  EXPECT_EQ(r, FpPoly::parse(5, "3x"));
  EXPECT_EQ(oracle::multiplicity({1, 2, 1}, {1, 1}, 5), 2);
  EXPECT_EQ(gcd(f * g, g * FpPoly::parse(5, "x+2")), g);
}

TEST(Poly, IrreducibilityByFactorSearch) {
  EXPECT_TRUE(FpPoly::parse(2, "x^2+x+1").is_irreducible());
  EXPECT_FALSE(FpPoly::parse(3, "x^2+2").is_irreducible());  // (x-1)(x+1)
  for (const auto& f : monic_polynomials(3, 2)) {
    bool has_root = false;
    for (std::uint32_t v = 0; v < 3; ++v) has_root = has_root || f.evaluate(v) == 0;
    EXPECT_EQ(f.is_irreducible(), !has_root) << f.to_string();
  }
}
