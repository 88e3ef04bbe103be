#include <benchmark/benchmark.h>

#include <vector>

#include "roadm/eon_spectrum.hpp"

static void BM_FirstFit(benchmark::State& state) {
  const int span = static_cast<int>(state.range(0));
  for (auto _ : state) {
    roadm::SpectrumGrid grid(roadm::kDefaultGridSlots);
    while (roadm::allocate_first_fit(grid, span)) {
    }
    benchmark::DoNotOptimize(grid.occupied());
  }
}
BENCHMARK(BM_FirstFit)->Arg(1)->Arg(4)->Arg(11);

static void BM_Accommodate(benchmark::State& state) {
  const auto demands = roadm::generate_demands(6, 500, 1);
  for (auto _ : state) {
    auto net = roadm::EonNetwork::complete(6);
    benchmark::DoNotOptimize(roadm::accommodate(demands, net, roadm::WidthMode::NewDesign));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(demands.size()));
}
BENCHMARK(BM_Accommodate);

BENCHMARK_MAIN();
