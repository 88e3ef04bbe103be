#include "roadm/clos_topology.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "roadm/errors.hpp"
#include "roadm/rng.hpp"

namespace roadm {

void validate(const ClusterConfig& config) {
  auto require = [](bool ok, const char* field, const char* rule) {
    if (!ok) {
      throw SizingError(field, std::string("invalid cluster sizing: ") + field + " " + rule);
    }
  };
  require(config.line_cards >= 1, "N", "(line cards per line chassis) must be >= 1");
  require(config.connection_cards >= 1, "M", "(connection cards / interconnect chassis) must be >= 1");
  require(config.line_chassis >= 1, "E", "(line chassis) must be >= 1");
  require(config.add_drop_chassis >= 0, "F", "(add/drop chassis) must be >= 0");
}

std::string to_string(NonblockingClass c) {
  switch (c) {
    case NonblockingClass::Blocking:
      return "blocking";
    case NonblockingClass::RearrangeablyNonblocking:
      return "rearrangeably-nonblocking";
    case NonblockingClass::StrictSense:
      return "strict-sense-nonblocking";
  }
  return "unknown";
}

NonblockingClass classify_nonblocking(int n, int k) {
  if (n < 1 || k < 1) {
    throw PreconditionError("classify_nonblocking requires n >= 1 and k >= 1");
  }
  if (k >= 2 * n - 1) return NonblockingClass::StrictSense;
  if (k >= n) return NonblockingClass::RearrangeablyNonblocking;
  return NonblockingClass::Blocking;
}

int total_degrees(const ClusterConfig& config) {
  return config.line_chassis * config.line_cards;
}

double add_drop_rate(const ClusterConfig& config) {
  if (config.line_chassis < 1) {
    throw SizingError("E", "add/drop rate needs at least one line chassis");
  }
  return static_cast<double>(config.add_drop_chassis) / config.line_chassis;
}

std::vector<SizingWarning> validate_sizing(const ClusterConfig& config) {
  validate(config);
  const int n = config.line_cards;
  const int m = config.connection_cards;
  std::vector<SizingWarning> warnings;
  if (m <= n) {
    warnings.push_back({SizingWarning::Code::MiddleNotAboveN,
                        "M=" + std::to_string(m) + " is not strictly greater than N=" +
                            std::to_string(n) + " (recommended N < M < 1.2 N)"});
  }
  // M >= 1.2 N, kept in integers: 5 M >= 6 N.
  if (5 * m >= 6 * n) {
    warnings.push_back({SizingWarning::Code::MiddleAtOrAbove1p2N,
                        "M=" + std::to_string(m) + " is at or above 1.2 N=" +
                            std::to_string(1.2 * n) +
                            "; extra interconnect chassis add common equipment cost"});
  }
  if (classify_nonblocking(n, m) == NonblockingClass::Blocking) {
    warnings.push_back({SizingWarning::Code::BlockingFabric,
                        "M=" + std::to_string(m) + " < N=" + std::to_string(n) +
                            ": fabric is blocking even with rearrangement"});
  }
  return warnings;
}

std::string to_string(InterconnectPattern::Kind kind) {
  return kind == InterconnectPattern::Kind::Proposed ? "proposed" : "random";
}

InterconnectPattern::Kind parse_pattern_kind(const std::string& text) {
  if (text == "proposed") return InterconnectPattern::Kind::Proposed;
  if (text == "random") return InterconnectPattern::Kind::Random;
  throw PreconditionError("unknown interconnect pattern '" + text + "' (expected proposed|random)");
}

ClusterTopology::ClusterTopology(ClusterConfig config, InterconnectPattern pattern,
                                 std::vector<int> multiplicity)
    : config_(config), pattern_(pattern), multiplicity_(std::move(multiplicity)) {
  validate(config_);
  const auto expected = static_cast<std::size_t>(config_.outer_chassis()) * config_.connection_cards;
  if (multiplicity_.size() != expected) {
    throw PreconditionError("fiber multiplicity table has the wrong shape");
  }
}

std::vector<FiberBundle> ClusterTopology::fibers() const {
  std::vector<FiberBundle> out;
  const int m_count = config_.connection_cards;
  for (int o = 0; o < outer_chassis(); ++o) {
    for (int m = 0; m < m_count; ++m) {
      if (int c = fibers_between(o, m); c > 0) out.push_back({o, m, c});
    }
  }
  return out;
}

int ClusterTopology::fiber_count() const noexcept {
  return std::accumulate(multiplicity_.begin(), multiplicity_.end(), 0);
}

ClusterTopology build_cluster(const ClusterConfig& config, const InterconnectPattern& pattern) {
  validate(config);
  const int m_count = config.connection_cards;
  std::vector<int> mult(static_cast<std::size_t>(config.outer_chassis()) * m_count, 1);
  if (pattern.kind == InterconnectPattern::Kind::Random) {
    for (int f = 0; f < config.add_drop_chassis; ++f) {
      const int outer = config.line_chassis + f;
      RandomStream rng(pattern.seed, stream::kInterconnect, static_cast<std::uint64_t>(f));
      auto row = mult.begin() + static_cast<std::ptrdiff_t>(outer) * m_count;
      std::fill(row, row + m_count, 0);
      for (int port = 0; port < m_count; ++port) {
        ++row[static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(m_count)))];
      }
    }
  }
  return ClusterTopology(config, pattern, std::move(mult));
}

nlohmann::json to_json(const ClusterConfig& config) {
  return {
      {"N", config.line_cards},
      {"M", config.connection_cards},
      {"E", config.line_chassis},
      {"F", config.add_drop_chassis},
      {"S", config.interconnect_cards()},
      {"degrees", total_degrees(config)},
  };
}

nlohmann::json to_json(const ClusterTopology& topology) {
  const auto& cfg = topology.config();
  nlohmann::json line = nlohmann::json::array();
  nlohmann::json add_drop = nlohmann::json::array();
  for (int o = 0; o < topology.outer_chassis(); ++o) {
    if (topology.kind(o) == ChassisKind::Line) {
      line.push_back({{"id", o}, {"line_cards", cfg.line_cards},
                      {"connection_cards", cfg.connection_cards}});
    } else {
      add_drop.push_back({{"id", o}, {"ports", cfg.line_cards},
                          {"interconnect_ports", cfg.connection_cards}});
    }
  }
  nlohmann::json interconnect = nlohmann::json::array();
  for (int m = 0; m < topology.interconnect_chassis(); ++m) {
    interconnect.push_back({{"id", m}, {"interconnect_cards", cfg.interconnect_cards()}});
  }
  nlohmann::json fibers = nlohmann::json::array();
  for (const auto& f : topology.fibers()) {
    fibers.push_back({{"outer", f.outer}, {"interconnect", f.interconnect}, {"count", f.count}});
  }
  return {
      {"config", to_json(cfg)},
      {"pattern", {{"kind", to_string(topology.pattern().kind)}, {"seed", topology.pattern().seed}}},
      {"line_chassis", std::move(line)},
      {"add_drop_chassis", std::move(add_drop)},
      {"interconnect_chassis", std::move(interconnect)},
      {"fibers", std::move(fibers)},
      {"fiber_count", topology.fiber_count()},
  };
}

}  // namespace roadm
