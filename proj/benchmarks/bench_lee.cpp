#include <benchmark/benchmark.h>

#include <vector>

#include "roadm/lee_analytics.hpp"

static void BM_LeeBlocking(benchmark::State& state) {
  double a = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(roadm::lee_blocking(14, 16, a, 4));
    a = a < 0.99 ? a + 0.001 : 0.5;
  }
}
BENCHMARK(BM_LeeBlocking);

static void BM_LoadAveraged(benchmark::State& state) {
  const std::vector<double> lambda{1.0};
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(roadm::load_averaged_blocking(14, 16, 4, lambda, samples));
  state.SetItemsProcessed(state.iterations() * (samples + 1));
}
BENCHMARK(BM_LoadAveraged)->Arg(1000)->Arg(roadm::kDefaultLoadSamples);
