// Micro-benchmarks for the hot paths: cold table fills (the quadratic
// recurrences dominate every large sweep), warm lookups, polynomial
// construction, and one representative check from each family.

#include <benchmark/benchmark.h>

#include "useq/congruence_checks.hpp"
#include "useq/identity_checks.hpp"
#include "useq/sequences.hpp"

namespace {

void BM_u_table_cold_fill(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    useq::SequenceCache cache;
    benchmark::DoNotOptimize(cache.u_number(n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_u_table_cold_fill)
    ->Arg(64)
    ->Arg(256)
    ->Arg(1024)
    ->Arg(3084)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_euler_table_cold_fill(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    useq::SequenceCache cache;
    benchmark::DoNotOptimize(cache.euler_number(n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_euler_table_cold_fill)
    ->Arg(64)
    ->Arg(256)
    ->Arg(496)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_bernoulli_table_cold_fill(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    useq::SequenceCache cache;
    benchmark::DoNotOptimize(cache.bernoulli_number(n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_bernoulli_table_cold_fill)
    ->Arg(32)
    ->Arg(128)
    ->Arg(256)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_u_number_warm(benchmark::State& state) {
  useq::SequenceCache cache;
  cache.u_number(1024);
  for (auto _ : state) benchmark::DoNotOptimize(cache.u_number(1024));
}
BENCHMARK(BM_u_number_warm);

void BM_u_polynomial_build(benchmark::State& state) {
  const long n = state.range(0);
  useq::SequenceCache cache;
  cache.u_number(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(useq::u_polynomial(cache, n));
}
BENCHMARK(BM_u_polynomial_build)->Arg(16)->Arg(64)->Arg(256);

void BM_check_theorem_2_1(benchmark::State& state) {
  useq::SequenceCache cache;
  cache.u_number(12);
  for (auto _ : state)
    benchmark::DoNotOptimize(useq::check_theorem_2_1(cache, 12, 60));
}
BENCHMARK(BM_check_theorem_2_1);

void BM_check_1_4(benchmark::State& state) {
  const long p = state.range(0);
  useq::SequenceCache cache;
  cache.u_number(p - 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(useq::check_1_4(cache, p));
}
BENCHMARK(BM_check_1_4)->Arg(199)->Arg(997)->Unit(benchmark::kMillisecond);

void BM_check_theorem_3_1(benchmark::State& state) {
  useq::SequenceCache cache;
  cache.u_number(128);
  for (auto _ : state)
    benchmark::DoNotOptimize(useq::check_theorem_3_1(cache, 64));
}
BENCHMARK(BM_check_theorem_3_1);

void BM_check_theorem_5_1(benchmark::State& state) {
  useq::SequenceCache cache;
  cache.euler_number(496);
  for (auto _ : state)
    benchmark::DoNotOptimize(useq::check_theorem_5_1(cache, 3, 5, 10));
}
BENCHMARK(BM_check_theorem_5_1);

}  // namespace

BENCHMARK_MAIN();
