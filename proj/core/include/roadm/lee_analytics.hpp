#pragma once

// Lee-graph blocking model for a three-stage cluster node.
//
// A request crossing the fabric needs one middle chassis whose ingress and
// egress links are both free. With per-link occupancy p and M - d candidate
// middles that are still independent after packing d connections,
//
//   p   = (N a - d) / (M - d)
//   P_b = [1 - (1 - p)^2]^(M - d)
//
// Per-degree results are combined by offered-load weighting and then averaged
// over a uniform grid of per-card loads.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "roadm/clos_topology.hpp"

namespace roadm {

inline constexpr int kDefaultLoadSamples = 48000;

struct TrafficProfile {
  double a = 0.0;               // carried traffic per line card, erlangs, in [0, 1]
  int d = 0;                    // packing degree
  std::vector<double> lambda_d; // offered light-path load per degree, erlangs

  /// Throws DomainError if a, d or lambda_d break their bounds for (N, M).
  void validate(int n, int m) const;
};

/// (N a - d) / (M - d). Throws DomainError naming the failed bound when
/// M <= d, N a < d, or N a > M.
double link_occupancy(int n, int m, double a, int d);

/// [1 - (1 - p)^2]^(M - d). Exactly 0 at p = 0 and exactly 1 at p = 1.
double lee_blocking(int n, int m, double a, int d);

struct DegreeBlocking {
  double blocking = 0.0;  // P_b for the degree
  double load = 0.0;      // lambda_d, erlangs
};

/// sum(P_b lambda) / sum(lambda). Throws DomainError on an empty sequence,
/// zero total load, or out-of-range entries.
double weighted_blocking(std::span<const DegreeBlocking> per_degree);

/// Mean of integrand(i / samples) for i = 0..samples over the points where the
/// integrand returns a value. Points where it returns nullopt are outside the
/// model's domain and are skipped. Throws DomainError if nothing was evaluated.
double average_over_loads(const std::function<std::optional<double>(double)>& integrand,
                          int samples = kDefaultLoadSamples);

/// Load-averaged blocking. Each sample load p_i is the per-card load a,
/// applied to every degree and clamped so N a <= M. Samples with N a < d lie
/// below the packing degree and are skipped.
double load_averaged_blocking(int n, int m, int d, std::span<const double> lambda_profile,
                              int samples = kDefaultLoadSamples);

struct SweepOptions {
  /// Report P_b = 1 instead of an error for cells with N a > M.
  bool clamp_saturated = false;
};

struct SweepCell {
  double a = 0.0;
  int d = 0;
  std::optional<double> blocking;
  std::string error;  // set when blocking is empty
};

/// Full (a, d) grid, loads outer and d inner, in input order. Cell failures
/// are recorded in place.
std::vector<SweepCell> analytic_sweep(const ClusterConfig& config, std::span<const double> loads,
                                      std::span<const int> d_values, SweepOptions options = {});

}  // namespace roadm
