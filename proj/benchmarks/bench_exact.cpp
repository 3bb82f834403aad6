#include "gensum/exact_core.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BernoulliFreshTable(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    gensum::BernoulliTable table;
    benchmark::DoNotOptimize(table(n));
  }
}
BENCHMARK(BM_BernoulliFreshTable)->RangeMultiplier(2)->Range(16, 256);

void BM_Faulhaber(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  gensum::bernoulli(n);  // warm the shared table
  for (auto _ : state) benchmark::DoNotOptimize(gensum::faulhaber_sum(n, 1'000'003));
}
BENCHMARK(BM_Faulhaber)->Arg(2)->Arg(10)->Arg(40);

void BM_PmPolynomial(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int m = 0; m <= n; ++m) benchmark::DoNotOptimize(gensum::periodic_mean(gensum::pm_polynomial(n, m)));
  }
}
BENCHMARK(BM_PmPolynomial)->Arg(4)->Arg(12);

}  // namespace
