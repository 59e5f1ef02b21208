#include <benchmark/benchmark.h>

#include "wittlab/wittlab.hpp"

namespace {

using namespace wittlab;

void BM_DerivationSpaceThin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space_basis(AlgebraKind::Thin, state.range(0)));
}
BENCHMARK(BM_DerivationSpaceThin)->DenseRange(2, 8, 2);

void BM_DerivationSpaceWPlus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivation_space_basis(AlgebraKind::PositiveWitt, state.range(0)));
  }
}
BENCHMARK(BM_DerivationSpaceWPlus)->DenseRange(2, 8, 2);

void BM_JacobiWitt(benchmark::State& state) {
  const Index r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(AlgebraKind::Witt, {-r, r}));
}
BENCHMARK(BM_JacobiWitt)->Arg(10)->Arg(20);

void BM_RigidityWitt(benchmark::State& state) {
  const Element x = parse_element(AlgebraKind::Witt, "3*e_-5 + e_1 - 1/2*e_4");
  const Index r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rigidity_check(AlgebraKind::Witt, x, {-r, r}));
}
BENCHMARK(BM_RigidityWitt)->Arg(15)->Arg(30);

void BM_RecoverInnerWPlus(benchmark::State& state) {
  const Element a = parse_element(AlgebraKind::PositiveWittExtended, "e_0 - 2*e_3 + 1/3*e_7 + e_10");
  const LinearMapTable d = ad(a, {1, 30}, AlgebraKind::PositiveWitt);
  for (auto _ : state) benchmark::DoNotOptimize(recover_inner_wplus(d));
}
BENCHMARK(BM_RecoverInnerWPlus);

}  // namespace
