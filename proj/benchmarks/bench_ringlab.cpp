#include <benchmark/benchmark.h>

#include "ringlab/action.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/extend.hpp"
#include "ringlab/funcfield.hpp"
#include "ringlab/harness.hpp"

using namespace ringlab;

static void BM_BuildGF(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_gf(2, k));
}
BENCHMARK(BM_BuildGF)->Arg(4)->Arg(6)->Arg(8);

static void BM_AxiomCheck(benchmark::State& state) {
  const auto T = build_ring("idealization(gf(3,2),self)");
  for (auto _ : state) benchmark::DoNotOptimize(find_axiom_violation(*T));
}
BENCHMARK(BM_AxiomCheck);

static void BM_ClassifyInertF64(benchmark::State& state) {
  const auto T = make_gf(2, 6);
  const auto R = named_subring(T, Expr::parse("subfield(3)"));
  const auto S = SubringHandle::whole(T);
  for (auto _ : state) benchmark::DoNotOptimize(classify_extension(R, S));
}
BENCHMARK(BM_ClassifyInertF64);

static void BM_IntermediateRings(benchmark::State& state) {
  const auto T = build_ring("prod(prod(gf(2,1),gf(2,1)),prod(gf(2,1),gf(2,1)))");
  const auto R = named_subring(T, Expr::parse("prime"));
  const auto S = SubringHandle::whole(T);
  for (auto _ : state) benchmark::DoNotOptimize(intermediate_rings(R, S));
}
BENCHMARK(BM_IntermediateRings);

static void BM_ValuationAxioms(benchmark::State& state) {
  const DVRWitness V(5, FpPoly::x(5));
  for (auto _ : state) {
    std::mt19937_64 rng(0);
    benchmark::DoNotOptimize(valuation_axioms_check(V, rng, 1000));
  }
}
BENCHMARK(BM_ValuationAxioms);

static void BM_VerifyCatalog(benchmark::State& state) {
  const auto insts = catalog();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(insts, 0, 1));
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);
