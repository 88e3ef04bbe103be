#include "roadm/fullload_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "roadm/errors.hpp"
#include "roadm/rng.hpp"

namespace roadm {

int outer_chassis_of(const Endpoint& endpoint, const ClusterConfig& config) {
  return endpoint.kind == EndpointKind::LineDegree ? endpoint.chassis
                                                   : config.line_chassis + endpoint.chassis;
}

int endpoint_index(const Endpoint& endpoint, const ClusterConfig& config) {
  return outer_chassis_of(endpoint, config) * config.line_cards + endpoint.port;
}

void validate(const Endpoint& endpoint, const ClusterConfig& config) {
  const bool line = endpoint.kind == EndpointKind::LineDegree;
  const int chassis_count = line ? config.line_chassis : config.add_drop_chassis;
  if (!line && chassis_count == 0) {
    throw PreconditionError("add/drop endpoint on a cluster without add/drop chassis");
  }
  if (endpoint.chassis < 0 || endpoint.chassis >= chassis_count) {
    throw PreconditionError(std::string(line ? "line" : "add/drop") + " chassis index " +
                            std::to_string(endpoint.chassis) + " out of range");
  }
  if (endpoint.port < 0 || endpoint.port >= config.line_cards) {
    throw PreconditionError("port index " + std::to_string(endpoint.port) + " out of range");
  }
}

void SimConfig::validate() const {
  if (connections_per_map < 1) throw PreconditionError("connections_per_map must be >= 1");
  if (wavelengths < 1) throw PreconditionError("wavelengths must be >= 1");
  if (maps < 1) throw PreconditionError("maps must be >= 1");
  if (workers < 0) throw PreconditionError("workers must be >= 0");
  if (add_drop_weight && !(*add_drop_weight >= 0.0 && std::isfinite(*add_drop_weight))) {
    throw PreconditionError("add_drop_weight must be a finite value >= 0");
  }
}

// FabricState ---------------------------------------------------------------

FabricState::FabricState(ClusterTopology topology, int wavelengths)
    : topology_(std::move(topology)), wavelengths_(wavelengths) {
  if (wavelengths_ < 1) throw PreconditionError("wavelengths must be >= 1");
  const auto fibers = static_cast<std::size_t>(topology_.outer_chassis()) * wavelengths_ *
                      topology_.interconnect_chassis();
  const auto endpoints = static_cast<std::size_t>(topology_.outer_chassis()) *
                         topology_.ports_per_chassis() * wavelengths_;
  ingress_.assign(fibers, 0);
  egress_.assign(fibers, 0);
  source_.assign(endpoints, 0);
  sink_.assign(endpoints, 0);
}

std::size_t FabricState::endpoint_slot(const Endpoint& e, int wavelength) const {
  return static_cast<std::size_t>(endpoint_index(e, topology_.config())) * wavelengths_ +
         wavelength;
}

bool FabricState::source_busy(const Endpoint& e, int wavelength) const {
  return source_[endpoint_slot(e, wavelength)] != 0;
}

bool FabricState::sink_busy(const Endpoint& e, int wavelength) const {
  return sink_[endpoint_slot(e, wavelength)] != 0;
}

void FabricState::occupy(const ConnectionRequest& req, std::optional<int> interconnect) {
  source_[endpoint_slot(req.src, req.wavelength)] = 1;
  sink_[endpoint_slot(req.dst, req.wavelength)] = 1;
  if (!interconnect) {
    ++accepted_local_;
    return;
  }
  const auto& cfg = topology_.config();
  ++ingress_[fiber_slot(outer_chassis_of(req.src, cfg), *interconnect, req.wavelength)];
  ++egress_[fiber_slot(outer_chassis_of(req.dst, cfg), *interconnect, req.wavelength)];
  occupied_units_ += 2;
  ++accepted_fabric_;
}

RouteOutcome route_request(FabricState& state, const ConnectionRequest& req,
                           ConnectionMethod method) {
  const auto& topo = state.topology();
  const auto& cfg = topo.config();
  validate(req.src, cfg);
  validate(req.dst, cfg);
  if (req.wavelength < 0 || req.wavelength >= state.wavelengths()) {
    throw PreconditionError("wavelength " + std::to_string(req.wavelength) + " out of range");
  }
  if (req.src == req.dst) throw PreconditionError("request source equals destination");
  if (state.source_busy(req.src, req.wavelength) || state.sink_busy(req.dst, req.wavelength)) {
    throw EndpointOccupiedError("endpoint already carries a connection on wavelength " +
                                std::to_string(req.wavelength));
  }

  const int in = outer_chassis_of(req.src, cfg);
  const int out = outer_chassis_of(req.dst, cfg);
  if (in == out) {
    state.occupy(req, std::nullopt);
    return {true, std::nullopt, true};
  }
  switch (method) {
    case ConnectionMethod::OrderBased:
      for (int m = 0; m < topo.interconnect_chassis(); ++m) {
        if (state.ingress_free(in, m, req.wavelength) && state.egress_free(out, m, req.wavelength)) {
          state.occupy(req, m);
          return {true, m, false};
        }
      }
      break;
  }
  return RouteOutcome::blocked();
}

// Map generation -------------------------------------------------------------

namespace {

class EndpointSampler {
 public:
  EndpointSampler(const ClusterConfig& config, std::optional<double> add_drop_weight)
      : config_(config), weight_(add_drop_weight) {}

  /// Eligible endpoints: add/drop ports count only when their pool has weight.
  std::int64_t eligible() const {
    const std::int64_t line = std::int64_t{config_.line_chassis} * config_.line_cards;
    const std::int64_t ad = std::int64_t{config_.add_drop_chassis} * config_.line_cards;
    return add_drop_possible() ? line + ad : line;
  }

  Endpoint draw(RandomStream& rng) const {
    const auto n = static_cast<std::uint64_t>(config_.line_cards);
    if (pick_add_drop(rng)) {
      const auto k = rng.below(static_cast<std::uint64_t>(config_.add_drop_chassis) * n);
      return Endpoint::add_drop(static_cast<int>(k / n), static_cast<int>(k % n));
    }
    const auto k = rng.below(static_cast<std::uint64_t>(config_.line_chassis) * n);
    return Endpoint::line(static_cast<int>(k / n), static_cast<int>(k % n));
  }

 private:
  bool add_drop_possible() const {
    return config_.add_drop_chassis > 0 && (!weight_ || *weight_ > 0.0);
  }

  bool pick_add_drop(RandomStream& rng) const {
    if (!add_drop_possible()) return false;
    if (!weight_) {
      // Weight F / E against 1 is probability F / (E + F).
      return rng.below(static_cast<std::uint64_t>(config_.outer_chassis())) <
             static_cast<std::uint64_t>(config_.add_drop_chassis);
    }
    return rng.unit() < *weight_ / (1.0 + *weight_);
  }

  ClusterConfig config_;
  std::optional<double> weight_;
};

constexpr std::int64_t kMaxRedraws = 50'000'000;

}  // namespace

std::vector<ConnectionRequest> generate_connectivity_map(const ClusterConfig& config,
                                                         const SimConfig& sim,
                                                         std::uint64_t map_index) {
  validate(config);
  sim.validate();
  const EndpointSampler sampler(config, sim.add_drop_weight);
  const std::int64_t endpoints = sampler.eligible();
  if (endpoints < 2) {
    throw PreconditionError("a connectivity map needs at least two eligible endpoints");
  }
  if (sim.connections_per_map > endpoints * sim.wavelengths) {
    throw PreconditionError("connections_per_map=" + std::to_string(sim.connections_per_map) +
                            " exceeds the " + std::to_string(endpoints * sim.wavelengths) +
                            " endpoint-wavelength units available");
  }

  const auto total_slots = static_cast<std::size_t>(config.outer_chassis()) * config.line_cards *
                           sim.wavelengths;
  std::vector<std::uint8_t> source_used(total_slots, 0);
  std::vector<std::uint8_t> sink_used(total_slots, 0);
  auto slot = [&](const Endpoint& e, int w) {
    return static_cast<std::size_t>(endpoint_index(e, config)) * sim.wavelengths + w;
  };

  RandomStream rng(sim.seed, stream::kConnectivityMap, map_index);
  std::vector<ConnectionRequest> map;
  map.reserve(static_cast<std::size_t>(sim.connections_per_map));
  std::int64_t redraws = 0;
  while (static_cast<int>(map.size()) < sim.connections_per_map) {
    ConnectionRequest req;
    req.wavelength = static_cast<int>(rng.below(static_cast<std::uint64_t>(sim.wavelengths)));
    req.src = sampler.draw(rng);
    req.dst = sampler.draw(rng);
    if (req.dst == req.src || source_used[slot(req.src, req.wavelength)] ||
        sink_used[slot(req.dst, req.wavelength)]) {
      if (++redraws > kMaxRedraws) {
        throw PreconditionError("connectivity map generation did not converge; load too close to capacity");
      }
      continue;
    }
    source_used[slot(req.src, req.wavelength)] = 1;
    sink_used[slot(req.dst, req.wavelength)] = 1;
    map.push_back(req);
  }
  return map;
}

// Statistics -----------------------------------------------------------------

ProportionInterval wilson_interval(std::int64_t successes, std::int64_t trials) {
  if (trials <= 0) return {0.0, 1.0, 0.5};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2n = z * z / n;
  const double centre = (p + z2n / 2.0) / (1.0 + z2n);
  const double half = z / (1.0 + z2n) * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n));
  // The bounds touch 0 or 1 exactly when the observed proportion does.
  const double lower = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double upper = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {lower, upper, half};
}

// Full-load runs ---------------------------------------------------------------

namespace {

struct MapTally {
  std::int64_t offered = 0;
  std::int64_t blocked = 0;
  std::int64_t local = 0;
  std::vector<std::int64_t> degree_offered;
  std::vector<std::int64_t> degree_blocked;
  std::int64_t add_drop_offered = 0;
  std::int64_t add_drop_blocked = 0;
};

MapTally run_map(const ClusterTopology& topology, const SimConfig& sim, std::uint64_t index) {
  const auto& cfg = topology.config();
  const auto requests = generate_connectivity_map(cfg, sim, index);
  FabricState state(topology, sim.wavelengths);
  MapTally t;
  t.degree_offered.assign(static_cast<std::size_t>(total_degrees(cfg)), 0);
  t.degree_blocked.assign(t.degree_offered.size(), 0);
  for (const auto& req : requests) {
    const auto outcome = route_request(state, req, sim.method);
    ++t.offered;
    const bool blocked = !outcome.accepted;
    t.blocked += blocked;
    t.local += outcome.local;
    if (req.src.kind == EndpointKind::LineDegree) {
      const auto k = static_cast<std::size_t>(endpoint_index(req.src, cfg));
      ++t.degree_offered[k];
      t.degree_blocked[k] += blocked;
    } else {
      ++t.add_drop_offered;
      t.add_drop_blocked += blocked;
    }
  }
  return t;
}

}  // namespace

SimResult run_full_load(const ClusterConfig& config, const SimConfig& sim) {
  validate(config);
  sim.validate();
  const ClusterTopology topology = build_cluster(config, sim.pattern);

  std::vector<MapTally> tallies(static_cast<std::size_t>(sim.maps));
  int workers = sim.workers == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : sim.workers;
  workers = std::clamp(workers, 1, sim.maps);

  if (workers == 1) {
    for (int i = 0; i < sim.maps; ++i) tallies[i] = run_map(topology, sim, static_cast<std::uint64_t>(i));
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int i = next++; i < sim.maps; i = next++) {
            tallies[i] = run_map(topology, sim, static_cast<std::uint64_t>(i));
          }
        } catch (...) {
          errors[w] = std::current_exception();
          next = sim.maps;
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SimResult r;
  r.per_degree_offered.assign(static_cast<std::size_t>(total_degrees(config)), 0);
  r.per_degree_blocked.assign(r.per_degree_offered.size(), 0);
  for (const auto& t : tallies) {
    r.offered += t.offered;
    r.blocked += t.blocked;
    r.accepted_local += t.local;
    r.add_drop_offered += t.add_drop_offered;
    r.add_drop_blocked += t.add_drop_blocked;
    for (std::size_t k = 0; k < t.degree_offered.size(); ++k) {
      r.per_degree_offered[k] += t.degree_offered[k];
      r.per_degree_blocked[k] += t.degree_blocked[k];
    }
  }
  r.blocking_rate = static_cast<double>(r.blocked) / static_cast<double>(r.offered);
  r.ci95 = wilson_interval(r.blocked, r.offered);
  return r;
}

std::vector<ScenarioCase> reference_cases(const SimConfig& sim) {
  std::vector<ScenarioCase> cases;
  for (int i = 0; i < 5; ++i) {
    ClusterConfig c{14, 16, 8 + 2 * i, 8 - 2 * i};
    cases.push_back({std::to_string(i + 1), c, sim});
  }
  return cases;
}

ScenarioReport run_scenarios(std::span<const ScenarioCase> cases) {
  if (cases.empty()) throw PreconditionError("run_scenarios needs at least one case");
  ScenarioReport report;
  for (const auto& c : cases) {
    ScenarioRow row;
    row.label = c.label;
    row.config = c.config;
    try {
      validate(c.config);
      row.degrees = total_degrees(c.config);
      row.add_drop_rate = add_drop_rate(c.config);
      row.result = run_full_load(c.config, c.sim);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace roadm
