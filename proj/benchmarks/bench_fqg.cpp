#include <benchmark/benchmark.h>

#include "fqg/cycfactor.hpp"
#include "fqg/idempotents.hpp"
#include "fqg/verify.hpp"
#include "fqg/wedderburn.hpp"

using namespace fqg;

namespace {

void BM_Factor(benchmark::State& state) {
  const auto F = make_field_of_order(static_cast<uint64_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(factor_xn_minus_1(static_cast<uint64_t>(state.range(0)), F));
}
BENCHMARK(BM_Factor)->Args({40, 3})->Args({48, 13})->Args({105, 11});

void BM_Decompose(benchmark::State& state) {
  const auto g = GroupPresentation::make(state.range(0) ? GroupKind::NonSplit : GroupKind::Split,
                                         static_cast<uint64_t>(state.range(1)), state.range(2),
                                         static_cast<uint64_t>(state.range(3)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose)->Args({0, 4, 3, 3})->Args({1, 2, 3, 3})->Args({0, 24, 23, 13})->Args({1, 24, 47, 11});

void BM_Idempotents(benchmark::State& state) {
  const auto g = GroupPresentation::make(state.range(0) ? GroupKind::NonSplit : GroupKind::Split,
                                         static_cast<uint64_t>(state.range(1)), state.range(2),
                                         static_cast<uint64_t>(state.range(3)));
  const Decomposition dec = decompose(g);
  const AlgebraPtr A = GroupAlgebra::make(g, dec.factorization.field);
  for (auto _ : state) benchmark::DoNotOptimize(all_idempotents(dec, A, true, false));
}
BENCHMARK(BM_Idempotents)->Args({0, 24, 23, 13})->Args({1, 16, 31, 3})->Args({1, 24, 47, 11});

void BM_Verify(benchmark::State& state) {
  const auto g = GroupPresentation::make(GroupKind::NonSplit, static_cast<uint64_t>(state.range(0)), state.range(1),
                                         static_cast<uint64_t>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_instance(g));
}
BENCHMARK(BM_Verify)->Args({2, 3, 3})->Args({12, 23, 7})->Unit(benchmark::kMillisecond);

void BM_BatteryQ3(benchmark::State& state) {
  BatteryFilter f;
  f.qs = {3};
  const auto keys = battery_instances(f);
  for (auto _ : state) benchmark::DoNotOptimize(run_battery(keys, {}, 1));
  state.counters["instances"] = static_cast<double>(keys.size());
}
BENCHMARK(BM_BatteryQ3)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
