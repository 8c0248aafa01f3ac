#include <benchmark/benchmark.h>

#include <vector>

#include "shfc/cohomology.hpp"
#include "shfc/constructions.hpp"
#include "shfc/invariants.hpp"
#include "shfc/resolution.hpp"

using namespace shfc;

namespace {

Ring<PrimeField> ring(int n) { return Ring<PrimeField>(PrimeField(32003), n + 1); }

void BM_ResolveSym2Omega(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto r = ring(n);
  auto om = sym_power(omega(r, 1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_free_resolution(om));
}
BENCHMARK(BM_ResolveSym2Omega)->DenseRange(1, 3);

void BM_CohomologyTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto sym = sym_power(omega(ring(n), 1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_table(sym, -n - 5, n + 5));
}
BENCHMARK(BM_CohomologyTable)->DenseRange(1, 3);

void BM_TensorLevel(benchmark::State& state) {
  auto r = ring(2);
  std::vector<int> twists{1, -2};
  auto a = twist(omega(r, 1), 2);
  auto b = line_bundle_sum(r, std::span<const int>(twists));
  for (auto _ : state) benchmark::DoNotOptimize(level(tensor(a, b)));
}
BENCHMARK(BM_TensorLevel);

void BM_QPowerPullback(benchmark::State& state) {
  auto om = omega(ring(2), 1);
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SheafCohomology<PrimeField>(q_power_pullback(om, q)).h(1, 0));
}
BENCHMARK(BM_QPowerPullback)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
