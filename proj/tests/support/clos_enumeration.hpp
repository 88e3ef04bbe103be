#pragma once

// Exhaustive single-plane request sequences on small cluster fabrics.
//
// Ports inside one chassis are interchangeable for fabric routing, so a
// sequence is enumerated as (ingress chassis, egress chassis) pairs, each
// bound to the next unused port on its side. Every prefix is an instance.
// Same-chassis pairs are left out: they are switched inside the chassis.

#include <cstdint>
#include <string>
#include <vector>

#include "roadm/fullload_sim.hpp"

namespace roadm::testing {

struct ClosSweepStats {
  std::int64_t instances = 0;
  std::int64_t first_fit_blocked_instances = 0;
  std::int64_t rearrangeable_but_blocked = 0;  // first-fit > 0, oracle == 0
  std::int64_t dominance_violations = 0;      // first-fit < oracle
  std::int64_t strict_sense_violations = 0;   // M >= 2N-1 and first-fit > 0
  std::int64_t route_mismatches = 0;          // exhaustive != degree-bound
  std::string first_failure;

  bool ok() const {
    return dominance_violations == 0 && strict_sense_violations == 0 && route_mismatches == 0;
  }
};

/// All sequences up to `max_length` requests on `chassis` line chassis with
/// `n` ports each and `m` interconnect chassis.
ClosSweepStats exhaustive_clos_sweep(int n, int m, int chassis, int max_length);

/// Builds concrete requests on wavelength 0 from chassis pairs.
std::vector<ConnectionRequest> bind_ports(const std::vector<std::pair<int, int>>& pairs);

/// Blocked count of order-based routing of `requests` on a fresh one-plane fabric.
int first_fit_blocked(const ClusterConfig& config, const std::vector<ConnectionRequest>& requests);

}  // namespace roadm::testing
