#include <benchmark/benchmark.h>

#include "syzygy/class_group.hpp"
#include "syzygy/experiment_lab.hpp"
#include "syzygy/point_enum.hpp"
#include "syzygy/quartic_classes.hpp"

using namespace syzygy;

static void BM_ClassGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(class_group(BigInt(-state.range(0))));
}
BENCHMARK(BM_ClassGroup)->Arg(23)->Arg(47)->Arg(1031)->Arg(10007);

static void BM_RQTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(r_Q_table(QuadForm{2, 1, 3}, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RQTable)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

static void BM_RQIdeal(benchmark::State& state) {
  auto t = class_group(-23);
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_Q_ideal(t, 1, BigInt(n)));
    n = n % 100000 + 2;
  }
}
BENCHMARK(BM_RQIdeal);

static void BM_EnumerateClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(4, 0, state.range(0)));
}
BENCHMARK(BM_EnumerateClasses)->Arg(12)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_CountSyzygy(benchmark::State& state) {
  auto classes = enumerate_classes(4, 0, 40);
  SurfaceSpec s{-1, 0, QuadForm{1, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(count_points_syzygy(s, classes, state.range(0)));
}
BENCHMARK(BM_CountSyzygy)->Arg(10)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

static void BM_CountBruteforce(benchmark::State& state) {
  SurfaceSpec s{-1, 0, QuadForm{1, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(count_points_bruteforce(s, state.range(0)));
}
BENCHMARK(BM_CountBruteforce)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_CorrelationSum(benchmark::State& state) {
  ExperimentSpec spec;
  spec.F = BinaryForm<BigInt>({1, 0, 0, 0, 4});
  spec.Q = QuadForm{1, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(correlation_sum(spec, state.range(0)));
}
BENCHMARK(BM_CorrelationSum)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
