#pragma once

// ROADM cluster nodes modeled as folded three-stage Clos fabrics.
//
// Line chassis and add/drop chassis form the outer stages: every one of them
// is both a first-stage (ingress) and third-stage (egress) switch. The M
// interconnect chassis form the middle stage. A "fiber" is the bidirectional
// link between an outer chassis and an interconnect chassis.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace roadm {

struct ClusterConfig {
  int line_cards = 0;        // N: degree-facing line cards per line chassis
  int connection_cards = 0;  // M: interconnect-facing cards per line chassis
  int line_chassis = 0;      // E
  int add_drop_chassis = 0;  // F

  /// S = E + F, interconnect cards in every interconnect chassis.
  int interconnect_cards() const noexcept { return line_chassis + add_drop_chassis; }
  /// Middle-stage size. Equal to M by construction.
  int interconnect_chassis() const noexcept { return connection_cards; }
  /// Outer-stage chassis count (line plus add/drop).
  int outer_chassis() const noexcept { return line_chassis + add_drop_chassis; }

  friend bool operator==(const ClusterConfig&, const ClusterConfig&) = default;
};

/// Throws SizingError naming the first field that breaks N,M,E >= 1, F >= 0.
void validate(const ClusterConfig& config);

enum class NonblockingClass { Blocking, RearrangeablyNonblocking, StrictSense };

std::string to_string(NonblockingClass c);

/// Standard Clos taxonomy for n inlets per first-stage switch and k middle
/// switches: strict-sense iff k >= 2n-1, rearrangeable iff n <= k < 2n-1,
/// blocking iff k < n. Throws PreconditionError for n < 1 or k < 1.
NonblockingClass classify_nonblocking(int n, int k);

/// E x N.
int total_degrees(const ClusterConfig& config);

/// F / E. Requires E >= 1.
double add_drop_rate(const ClusterConfig& config);

struct SizingWarning {
  enum class Code { MiddleNotAboveN, MiddleAtOrAbove1p2N, BlockingFabric };
  Code code;
  std::string message;
};

/// Advisory checks against the recommended N < M < 1.2 N window and the
/// nonblocking class. Never throws for a valid config.
std::vector<SizingWarning> validate_sizing(const ClusterConfig& config);

struct InterconnectPattern {
  enum class Kind { Proposed, Random };
  Kind kind = Kind::Proposed;
  std::uint64_t seed = 0;  // used only by Random

  static InterconnectPattern proposed() { return {}; }
  static InterconnectPattern random(std::uint64_t seed) { return {Kind::Random, seed}; }

  friend bool operator==(const InterconnectPattern&, const InterconnectPattern&) = default;
};

std::string to_string(InterconnectPattern::Kind kind);
/// Accepts "proposed" or "random"; throws PreconditionError otherwise.
InterconnectPattern::Kind parse_pattern_kind(const std::string& text);

enum class ChassisKind { Line, AddDrop };

/// One bundle of parallel fibers between an outer chassis and an interconnect
/// chassis. count is 1 everywhere for the Proposed pattern.
struct FiberBundle {
  int outer = 0;         // outer chassis id: line e -> e, add/drop f -> E + f
  int interconnect = 0;  // 0..M-1
  int count = 0;
};

/// Immutable cluster wiring. Outer chassis ids place the E line chassis first,
/// then the F add/drop chassis. Every add/drop chassis exposes N ports.
class ClusterTopology {
 public:
  ClusterTopology(ClusterConfig config, InterconnectPattern pattern,
                  std::vector<int> multiplicity);

  const ClusterConfig& config() const noexcept { return config_; }
  const InterconnectPattern& pattern() const noexcept { return pattern_; }

  int outer_chassis() const noexcept { return config_.outer_chassis(); }
  int interconnect_chassis() const noexcept { return config_.connection_cards; }
  int ports_per_chassis() const noexcept { return config_.line_cards; }
  int degree() const noexcept { return config_.line_chassis * config_.line_cards; }
  ChassisKind kind(int outer) const noexcept {
    return outer < config_.line_chassis ? ChassisKind::Line : ChassisKind::AddDrop;
  }

  /// Number of parallel fibers between an outer chassis and an interconnect chassis.
  int fibers_between(int outer, int interconnect) const {
    return multiplicity_[static_cast<std::size_t>(outer) * config_.connection_cards + interconnect];
  }
  /// Row-major (outer x interconnect) multiplicity table.
  const std::vector<int>& multiplicity() const noexcept { return multiplicity_; }

  /// Nonzero bundles in (outer, interconnect) order.
  std::vector<FiberBundle> fibers() const;
  int fiber_count() const noexcept;

 private:
  ClusterConfig config_;
  InterconnectPattern pattern_;
  std::vector<int> multiplicity_;
};

/// Builds the cluster wiring.
///
/// Proposed: every outer chassis has exactly one fiber to every interconnect
/// chassis, (E + F) x M fibers in total.
///
/// Random: line chassis are wired as in Proposed. Each add/drop chassis still
/// owns M interconnect ports, but each port lands on an interconnect chassis
/// drawn uniformly with replacement, so some interconnect chassis get parallel
/// fibers and others none.
ClusterTopology build_cluster(const ClusterConfig& config, const InterconnectPattern& pattern);

/// Inspection document; schema in docs/formats.md.
nlohmann::json to_json(const ClusterTopology& topology);
nlohmann::json to_json(const ClusterConfig& config);

}  // namespace roadm
