#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "roadm/errors.hpp"
#include "roadm/fullload_sim.hpp"

namespace roadm {

namespace {

using ChassisPair = std::pair<int, int>;

// Validates a single-plane instance and returns the (ingress, egress) chassis
// pairs of the requests that must cross the middle stage.
std::vector<ChassisPair> fabric_requests(std::span<const ConnectionRequest> requests,
                                         const ClusterConfig& config) {
  validate(config);
  std::vector<ChassisPair> out;
  std::set<int> sources;
  std::set<int> sinks;
  for (const auto& r : requests) {
    validate(r.src, config);
    validate(r.dst, config);
    if (r.wavelength != requests.front().wavelength) {
      throw PreconditionError("rearrangement oracle works on a single wavelength plane");
    }
    if (r.src == r.dst) throw PreconditionError("request source equals destination");
    if (!sources.insert(endpoint_index(r.src, config)).second ||
        !sinks.insert(endpoint_index(r.dst, config)).second) {
      throw EndpointOccupiedError("oracle instance reuses an endpoint on the plane");
    }
    const int in = outer_chassis_of(r.src, config);
    const int eg = outer_chassis_of(r.dst, config);
    if (in != eg) out.emplace_back(in, eg);
  }
  return out;
}

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(std::vector<ChassisPair> reqs, int chassis, int middles)
      : reqs_(std::move(reqs)),
        middles_(middles),
        ingress_(static_cast<std::size_t>(chassis) * middles, 0),
        egress_(ingress_.size(), 0),
        best_(static_cast<int>(reqs_.size())) {}

  int solve() {
    descend(0, 0, 0);
    return best_;
  }

 private:
  // `opened` middles have carried something; the rest are interchangeable, so
  // only the lowest unopened one is tried.
  void descend(std::size_t i, int blocked, int opened) {
    if (blocked >= best_) return;
    if (i == reqs_.size()) {
      best_ = blocked;
      return;
    }
    const auto [in, eg] = reqs_[i];
    const int limit = std::min(opened + 1, middles_);
    for (int m = 0; m < limit; ++m) {
      auto& a = ingress_[static_cast<std::size_t>(in) * middles_ + m];
      auto& b = egress_[static_cast<std::size_t>(eg) * middles_ + m];
      if (a || b) continue;
      a = b = 1;
      descend(i + 1, blocked, std::max(opened, m + 1));
      a = b = 0;
      if (best_ == 0) return;
    }
    descend(i + 1, blocked + 1, opened);
  }

  std::vector<ChassisPair> reqs_;
  int middles_;
  std::vector<std::uint8_t> ingress_;
  std::vector<std::uint8_t> egress_;
  int best_;
};

// Max flow on source -> ingress chassis (cap M) -> egress chassis (cap =
// request multiplicity) -> sink (cap M), by BFS augmenting paths.
int max_degree_bounded_subgraph(const std::vector<ChassisPair>& reqs, int chassis, int middles) {
  const int nodes = 2 * chassis + 2;
  const int source = 2 * chassis;
  const int sink = source + 1;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  for (int c = 0; c < chassis; ++c) {
    cap[source][c] = middles;
    cap[chassis + c][sink] = middles;
  }
  for (const auto& [in, eg] : reqs) ++cap[in][chassis + eg];

  int flow = 0;
  for (;;) {
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
    parent[source] = source;
    std::vector<int> queue{source};
    for (std::size_t q = 0; q < queue.size() && parent[sink] < 0; ++q) {
      const int u = queue[q];
      for (int v = 0; v < nodes; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[sink] < 0) break;
    int push = std::numeric_limits<int>::max();
    for (int v = sink; v != source; v = parent[v]) push = std::min(push, cap[parent[v]][v]);
    for (int v = sink; v != source; v = parent[v]) {
      cap[parent[v]][v] -= push;
      cap[v][parent[v]] += push;
    }
    flow += push;
  }
  return flow;
}

}  // namespace

int min_blocked_exhaustive(std::span<const ConnectionRequest> requests, const ClusterConfig& config) {
  auto reqs = fabric_requests(requests, config);
  if (static_cast<int>(reqs.size()) > kOracleMaxRequests) {
    throw InstanceTooLargeError("exhaustive search is limited to " +
                                std::to_string(kOracleMaxRequests) + " fabric requests");
  }
  return ExhaustiveSearch(std::move(reqs), config.outer_chassis(), config.connection_cards).solve();
}

int min_blocked_by_degree_bound(std::span<const ConnectionRequest> requests,
                                const ClusterConfig& config) {
  // Routing on one plane is an edge colouring of the bipartite request
  // multigraph with M colours. By Konig's theorem every subgraph of maximum
  // degree <= M is M-colourable, so the largest routable set is the largest
  // such subgraph.
  const auto reqs = fabric_requests(requests, config);
  const int routed = max_degree_bounded_subgraph(reqs, config.outer_chassis(), config.connection_cards);
  return static_cast<int>(reqs.size()) - routed;
}

int rearrangement_oracle(std::span<const ConnectionRequest> requests, const ClusterConfig& config) {
  const auto reqs = fabric_requests(requests, config);
  if (static_cast<int>(reqs.size()) <= kOracleMaxRequests) {
    return min_blocked_exhaustive(requests, config);
  }
  if (config.outer_chassis() <= kOracleMaxChassis) {
    return min_blocked_by_degree_bound(requests, config);
  }
  throw InstanceTooLargeError("oracle instance has " + std::to_string(reqs.size()) +
                              " fabric requests on " + std::to_string(config.outer_chassis()) +
                              " outer chassis; exact search bound is " +
                              std::to_string(kOracleMaxRequests) + " requests or " +
                              std::to_string(kOracleMaxChassis) + " chassis");
}

}  // namespace roadm
