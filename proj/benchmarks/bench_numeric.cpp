#include "gensum/cesaro_integral.hpp"
#include "gensum/cesaro_series.hpp"
#include "gensum/zeta_limits.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_CesaroSumAltSign(benchmark::State& state) {
  const gensum::SeriesSpec alt{[](std::int64_t n) { return n % 2 == 0 ? 1.0L : -1.0L; }, 0, {}};
  for (auto _ : state) benchmark::DoNotOptimize(gensum::cesaro_sum(alt, 2, state.range(0), 1e-6));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CesaroSumAltSign)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_RieszMeanSampled(benchmark::State& state) {
  const auto f = gensum::Integrand::sampled([](double t) { return std::sin(t); }, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(gensum::riesz_mean(f, 1.5, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_RieszMeanSampled)->Arg(100)->Arg(10'000)->Unit(benchmark::kMillisecond);

template <class Real>
void BM_AdvancePrimitives(benchmark::State& state) {
  const gensum::StaircaseSpec s(2.5);
  const auto k = static_cast<int>(state.range(0));
  auto start = gensum::initial_primitive_state<Real>(s, k);
  for (int i = 0; i < 100; ++i) start = gensum::advance_primitives(start, s);
  for (auto _ : state) {
    auto st = start;
    for (int i = 0; i < 1000; ++i) st = gensum::advance_primitives(st, s);
    benchmark::DoNotOptimize(st.values.back());
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK_TEMPLATE(BM_AdvancePrimitives, double)->Arg(1)->Arg(4);
BENCHMARK_TEMPLATE(BM_AdvancePrimitives, gensum::WideReal)->Arg(1)->Arg(4);

void BM_ZetaEstimate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gensum::zeta_via_cesaro(static_cast<double>(state.range(0)), std::nullopt, 1e4, 1e-3));
  }
}
BENCHMARK(BM_ZetaEstimate)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
