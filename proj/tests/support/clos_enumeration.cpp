#include "clos_enumeration.hpp"

#include <sstream>

namespace roadm::testing {

std::vector<ConnectionRequest> bind_ports(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> next_in;
  std::vector<int> next_out;
  std::vector<ConnectionRequest> reqs;
  for (auto [s, d] : pairs) {
    const auto need = static_cast<std::size_t>(std::max(s, d) + 1);
    if (next_in.size() < need) {
      next_in.resize(need, 0);
      next_out.resize(need, 0);
    }
    reqs.push_back({Endpoint::line(s, next_in[static_cast<std::size_t>(s)]++),
                    Endpoint::line(d, next_out[static_cast<std::size_t>(d)]++), 0});
  }
  return reqs;
}

int first_fit_blocked(const ClusterConfig& config, const std::vector<ConnectionRequest>& requests) {
  FabricState state(build_cluster(config, InterconnectPattern::proposed()), 1);
  int blocked = 0;
  for (const auto& r : requests) blocked += route_request(state, r).accepted ? 0 : 1;
  return blocked;
}

namespace {

struct Sweep {
  ClusterConfig config;
  int max_length;
  std::vector<std::pair<int, int>> seq;
  std::vector<int> in_count;
  std::vector<int> out_count;
  ClosSweepStats stats;

  void evaluate() {
    const auto reqs = bind_ports(seq);
    const int ff = first_fit_blocked(config, reqs);
    const int exhaustive = min_blocked_exhaustive(reqs, config);
    const int bound = min_blocked_by_degree_bound(reqs, config);
    ++stats.instances;
    if (ff > 0) ++stats.first_fit_blocked_instances;
    if (ff > 0 && exhaustive == 0) ++stats.rearrangeable_but_blocked;
    auto fail = [&](std::int64_t& counter, const char* what) {
      ++counter;
      if (stats.first_failure.empty()) {
        std::ostringstream os;
        os << what << " N=" << config.line_cards << " M=" << config.connection_cards << " seq=";
        for (auto [s, d] : seq) os << '(' << s << "->" << d << ')';
        os << " first-fit=" << ff << " oracle=" << exhaustive << " degree-bound=" << bound;
        stats.first_failure = os.str();
      }
    };
    if (ff < exhaustive) fail(stats.dominance_violations, "first-fit below oracle");
    if (exhaustive != bound) fail(stats.route_mismatches, "oracle routes disagree");
    if (config.connection_cards >= 2 * config.line_cards - 1 && ff > 0) {
      fail(stats.strict_sense_violations, "strict-sense fabric blocked");
    }
  }

  void extend() {
    if (!seq.empty()) evaluate();
    if (static_cast<int>(seq.size()) == max_length) return;
    const int chassis = config.line_chassis;
    for (int s = 0; s < chassis; ++s) {
      if (in_count[static_cast<std::size_t>(s)] == config.line_cards) continue;
      for (int d = 0; d < chassis; ++d) {
        if (d == s) continue;  // switched locally, never touches the fabric
        if (out_count[static_cast<std::size_t>(d)] == config.line_cards) continue;
        ++in_count[static_cast<std::size_t>(s)];
        ++out_count[static_cast<std::size_t>(d)];
        seq.emplace_back(s, d);
        extend();
        seq.pop_back();
        --in_count[static_cast<std::size_t>(s)];
        --out_count[static_cast<std::size_t>(d)];
      }
    }
  }
};

}  // namespace

ClosSweepStats exhaustive_clos_sweep(int n, int m, int chassis, int max_length) {
  Sweep sweep{ClusterConfig{n, m, chassis, 0}, max_length, {}, {}, {}, {}};
  sweep.in_count.assign(static_cast<std::size_t>(chassis), 0);
  sweep.out_count.assign(static_cast<std::size_t>(chassis), 0);
  sweep.extend();
  return sweep.stats;
}

}  // namespace roadm::testing
