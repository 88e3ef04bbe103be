#pragma once

// Full-load Monte Carlo simulation of a cluster node.
//
// Each wavelength is an independent plane through the fabric (no wavelength
// conversion). A connectivity map is a sequence of requests that is routed in
// order with the order-based (first-fit) method and never rearranged.
//
// Endpoints are bidirectional ports. A request consumes its source's ingress
// side and its destination's egress side on the request wavelength, so every
// (endpoint, direction, wavelength) carries at most one connection.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "roadm/clos_topology.hpp"

namespace roadm {

inline constexpr int kDefaultConnectionsPerMap = 48000;
inline constexpr int kDefaultWavelengths = 320;

enum class EndpointKind { LineDegree, AddDropPort };

struct Endpoint {
  EndpointKind kind = EndpointKind::LineDegree;
  int chassis = 0;  // e in 0..E-1 or f in 0..F-1
  int port = 0;     // line card in 0..N-1, or add/drop port in 0..N-1

  static Endpoint line(int e, int card) { return {EndpointKind::LineDegree, e, card}; }
  static Endpoint add_drop(int f, int port) { return {EndpointKind::AddDropPort, f, port}; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Outer chassis id of an endpoint: e for line degrees, E + f for add/drop ports.
int outer_chassis_of(const Endpoint& endpoint, const ClusterConfig& config);
/// Dense index over all endpoints, outer chassis major.
int endpoint_index(const Endpoint& endpoint, const ClusterConfig& config);
/// Throws PreconditionError if the endpoint is outside the config.
void validate(const Endpoint& endpoint, const ClusterConfig& config);

struct ConnectionRequest {
  Endpoint src;
  Endpoint dst;
  int wavelength = 0;

  friend bool operator==(const ConnectionRequest&, const ConnectionRequest&) = default;
};

enum class ConnectionMethod { OrderBased };

struct SimConfig {
  int connections_per_map = kDefaultConnectionsPerMap;
  int wavelengths = kDefaultWavelengths;
  int maps = 1;
  std::uint64_t seed = 1;
  ConnectionMethod method = ConnectionMethod::OrderBased;
  InterconnectPattern pattern = InterconnectPattern::proposed();
  /// Selection weight of the add/drop endpoint pool relative to the line
  /// degree pool (weight 1). Defaults to the scenario's add/drop rate F / E.
  std::optional<double> add_drop_weight;
  /// Worker threads for independent maps; 0 picks the hardware concurrency.
  int workers = 1;

  void validate() const;
};

/// Per-wavelength occupancy of every fiber and endpoint in one cluster.
class FabricState {
 public:
  FabricState(ClusterTopology topology, int wavelengths);

  const ClusterTopology& topology() const noexcept { return topology_; }
  int wavelengths() const noexcept { return wavelengths_; }

  /// Whether a connection from `outer` can enter interconnect chassis m on lambda.
  bool ingress_free(int outer, int interconnect, int wavelength) const {
    return ingress_[fiber_slot(outer, interconnect, wavelength)] <
           topology_.fibers_between(outer, interconnect);
  }
  bool egress_free(int outer, int interconnect, int wavelength) const {
    return egress_[fiber_slot(outer, interconnect, wavelength)] <
           topology_.fibers_between(outer, interconnect);
  }
  bool source_busy(const Endpoint& e, int wavelength) const;
  bool sink_busy(const Endpoint& e, int wavelength) const;

  /// Marks the two endpoints and, unless local, one ingress and one egress
  /// fiber-wavelength unit through `interconnect`.
  void occupy(const ConnectionRequest& req, std::optional<int> interconnect);

  /// Occupied fiber-wavelength units over both directions.
  std::int64_t occupied_fiber_units() const noexcept { return occupied_units_; }
  std::int64_t accepted_through_fabric() const noexcept { return accepted_fabric_; }
  std::int64_t accepted_locally() const noexcept { return accepted_local_; }

 private:
  std::size_t fiber_slot(int outer, int interconnect, int wavelength) const {
    return (static_cast<std::size_t>(outer) * wavelengths_ + wavelength) *
               topology_.interconnect_chassis() +
           interconnect;
  }
  std::size_t endpoint_slot(const Endpoint& e, int wavelength) const;

  ClusterTopology topology_;
  int wavelengths_;
  std::vector<std::uint8_t> ingress_;
  std::vector<std::uint8_t> egress_;
  std::vector<std::uint8_t> source_;
  std::vector<std::uint8_t> sink_;
  std::int64_t occupied_units_ = 0;
  std::int64_t accepted_fabric_ = 0;
  std::int64_t accepted_local_ = 0;
};

struct RouteOutcome {
  bool accepted = false;
  /// Interconnect chassis used; empty for blocked or locally switched requests.
  std::optional<int> interconnect;
  bool local = false;

  static RouteOutcome blocked() { return {}; }
};

/// Routes one request. Order-based scans interconnect chassis in ascending
/// index and takes the first one free on both hops; same-chassis requests are
/// switched inside the chassis. A blocked request leaves the state untouched.
/// Throws EndpointOccupiedError if either endpoint is already busy on the
/// wavelength.
RouteOutcome route_request(FabricState& state, const ConnectionRequest& req,
                           ConnectionMethod method = ConnectionMethod::OrderBased);

/// One full-load connectivity map, deterministic in (seed, map_index).
///
/// Sources and destinations are drawn from the same weighted pool: the line
/// degree pool has weight 1 and the add/drop pool weight F / E (or the
/// override in SimConfig), uniform inside each pool. Destinations differ from
/// the source; wavelengths are uniform. Draws whose source or destination is
/// already busy on the wavelength are redrawn.
std::vector<ConnectionRequest> generate_connectivity_map(const ClusterConfig& config,
                                                         const SimConfig& sim,
                                                         std::uint64_t map_index);

struct ProportionInterval {
  double lower = 0.0;
  double upper = 0.0;
  double half_width = 0.0;
};

/// Wilson score interval at 95 %.
ProportionInterval wilson_interval(std::int64_t successes, std::int64_t trials);

struct SimResult {
  std::int64_t offered = 0;
  std::int64_t blocked = 0;
  std::int64_t accepted_local = 0;
  double blocking_rate = 0.0;
  ProportionInterval ci95;
  /// Indexed by line degree e * N + card, counting requests sourced there.
  std::vector<std::int64_t> per_degree_offered;
  std::vector<std::int64_t> per_degree_blocked;
  /// Requests sourced at add/drop ports.
  std::int64_t add_drop_offered = 0;
  std::int64_t add_drop_blocked = 0;

  std::int64_t accepted() const noexcept { return offered - blocked; }
};

/// Routes sim.maps independent maps on fresh fabrics and aggregates. The
/// result does not depend on the worker count.
SimResult run_full_load(const ClusterConfig& config, const SimConfig& sim);

struct ScenarioCase {
  std::string label;
  ClusterConfig config;
  SimConfig sim;
};

/// The five fully loaded scenarios: N = 14, M = 16, E = 8..16, F = 8..0.
std::vector<ScenarioCase> reference_cases(const SimConfig& sim);

struct ScenarioRow {
  std::string label;
  ClusterConfig config;
  int degrees = 0;
  double add_drop_rate = 0.0;
  std::optional<SimResult> result;
  std::string error;
};

struct ScenarioReport {
  std::vector<ScenarioRow> rows;
};

/// One row per case; a failing case records its error and the rest still run.
ScenarioReport run_scenarios(std::span<const ScenarioCase> cases);

/// Largest instance solved by exhaustive search.
inline constexpr int kOracleMaxRequests = 12;
/// Largest outer-stage size accepted above kOracleMaxRequests.
inline constexpr int kOracleMaxChassis = 4;

/// Minimum number of blocked requests over every assignment of middle
/// chassis, i.e. with unlimited rearrangement, on the complete (proposed)
/// fabric of `config`. All requests must share one wavelength. Same-chassis
/// requests never block. Instances up to kOracleMaxRequests fabric requests
/// are searched exhaustively; larger ones with at most kOracleMaxChassis outer
/// chassis go through the degree-bounded subgraph formulation. Anything bigger
/// throws InstanceTooLargeError.
int rearrangement_oracle(std::span<const ConnectionRequest> requests, const ClusterConfig& config);

/// The two exact routes behind rearrangement_oracle, exposed for cross-checks.
int min_blocked_exhaustive(std::span<const ConnectionRequest> requests, const ClusterConfig& config);
int min_blocked_by_degree_bound(std::span<const ConnectionRequest> requests,
                                const ClusterConfig& config);

}  // namespace roadm
