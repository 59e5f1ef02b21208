#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wittlab/linear_system.hpp"

namespace {

using namespace wittlab;

// Banded random rows, the shape Leibniz constraints take.
std::vector<SparseVector> banded_rows(Index n, Index band, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  std::vector<SparseVector> rows;
  for (Index r = 0; r < n - n / 8; ++r) {
    std::vector<Entry> entries;
    for (Index c = r; c < std::min(n, r + band); ++c) entries.push_back({c, Rational(coef(rng))});
    rows.push_back(SparseVector::from_unsorted(std::move(entries)));
  }
  return rows;
}

void BM_KernelBanded(benchmark::State& state) {
  const Index n = state.range(0);
  const auto rows = banded_rows(n, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(rows, {0, n - 1}));
  state.SetComplexityN(n);
}
BENCHMARK(BM_KernelBanded)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_Intersection(benchmark::State& state) {
  const Index n = state.range(0);
  const IndexWindow w{0, n - 1};
  const Subspace a = kernel_basis(banded_rows(n, 4, 1), w);
  const Subspace b = kernel_basis(banded_rows(n, 4, 2), w);
  for (auto _ : state) benchmark::DoNotOptimize(subspace_intersection(a, b));
}
BENCHMARK(BM_Intersection)->Arg(32)->Arg(128);

}  // namespace
