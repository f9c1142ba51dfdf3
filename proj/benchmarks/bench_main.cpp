#include <benchmark/benchmark.h>

#include <random>

#include "hurwitz/identities.hpp"
#include "hurwitz/moduli.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"

using namespace hurwitz;

static void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_character_table(n));
}
BENCHMARK(BM_CharacterTable)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_ProductCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassTuple t = simple_tuple(Partition{n});
  character_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(product_count(t));
}
BENCHMARK(BM_ProductCount)->DenseRange(6, 12, 2);

static void BM_SieveSimple(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassTuple t = simple_tuple(Partition::repeated(1, n));
  state.SetLabel("memoized after first iteration");
  for (auto _ : state) benchmark::DoNotOptimize(transitive_count(t, TransitiveMethod::Sieve));
}
BENCHMARK(BM_SieveSimple)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Dfs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassTuple t = simple_tuple(Partition{n});
  for (auto _ : state) benchmark::DoNotOptimize(transitive_count(t, TransitiveMethod::Dfs));
}
BENCHMARK(BM_Dfs)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_KazarianCleared(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kazarian_cleared_check(m));
}
BENCHMARK(BM_KazarianCleared)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Delta00SplitSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto parts = enumerate_partitions(n);
  for (auto _ : state) {
    for (const auto& kappa : parts) {
      if (kappa.length() >= 2) benchmark::DoNotOptimize(delta00_split_sum(kappa));
    }
  }
}
BENCHMARK(BM_Delta00SplitSum)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
