#include <benchmark/benchmark.h>

#include "roadm/fullload_sim.hpp"

namespace {

const roadm::ClusterConfig kCase1{14, 16, 8, 8};

}  // namespace

static void BM_GenerateMap(benchmark::State& state) {
  roadm::SimConfig sim;
  std::uint64_t map = 0;
  for (auto _ : state) benchmark::DoNotOptimize(roadm::generate_connectivity_map(kCase1, sim, map++));
  state.SetItemsProcessed(state.iterations() * sim.connections_per_map);
}
BENCHMARK(BM_GenerateMap)->Unit(benchmark::kMillisecond);

// Routing only: the map is built outside the timed region.
static void BM_RouteMap(benchmark::State& state) {
  roadm::SimConfig sim;
  const auto topo = roadm::build_cluster(kCase1, roadm::InterconnectPattern::proposed());
  const auto map = roadm::generate_connectivity_map(kCase1, sim, 0);
  for (auto _ : state) {
    roadm::FabricState fabric(topo, sim.wavelengths);
    for (const auto& r : map) benchmark::DoNotOptimize(roadm::route_request(fabric, r));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(map.size()));
}
BENCHMARK(BM_RouteMap)->Unit(benchmark::kMillisecond);

static void BM_FullLoadRun(benchmark::State& state) {
  roadm::SimConfig sim;
  sim.maps = 4;
  for (auto _ : state) benchmark::DoNotOptimize(roadm::run_full_load(kCase1, sim));
  state.SetItemsProcessed(state.iterations() * sim.maps * sim.connections_per_map);
}
BENCHMARK(BM_FullLoadRun)->Unit(benchmark::kMillisecond);
