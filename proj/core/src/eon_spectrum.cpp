#include "roadm/eon_spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "roadm/errors.hpp"
#include "roadm/rng.hpp"

namespace roadm {

namespace {

constexpr std::array<WidthAnchor, 4> kOriginalAnchors{{{40, 25.0}, {100, 50.0}, {400, 100.0}, {1000, 150.0}}};
constexpr std::array<WidthAnchor, 4> kNewDesignAnchors{{{40, 25.0}, {100, 45.0}, {400, 90.0}, {1000, 130.0}}};

constexpr int kFixedChannelGbps = 100;
constexpr double kFixedChannelGhz = 50.0;

}  // namespace

std::string to_string(WidthMode mode) {
  switch (mode) {
    case WidthMode::OriginalEON:
      return "original-eon";
    case WidthMode::NewDesign:
      return "new-design";
    case WidthMode::FixedWDM:
      return "fixed-wdm";
  }
  return "unknown";
}

std::span<const WidthAnchor> width_anchors(WidthMode mode) {
  switch (mode) {
    case WidthMode::OriginalEON:
      return kOriginalAnchors;
    case WidthMode::NewDesign:
      return kNewDesignAnchors;
    case WidthMode::FixedWDM:
      break;
  }
  return {};
}

double spectral_width(double bitrate_gbps, WidthMode mode) {
  if (!(bitrate_gbps > 0.0 && bitrate_gbps <= kMaxDemandGbps)) {
    throw PreconditionError("bit rate must lie in (0, 1000] Gb/s");
  }
  if (mode == WidthMode::FixedWDM) {
    return std::ceil(bitrate_gbps / kFixedChannelGbps) * kFixedChannelGhz;
  }
  const auto anchors = width_anchors(mode);
  if (bitrate_gbps <= anchors.front().bitrate_gbps) return anchors.front().width_ghz;
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    const auto& lo = anchors[i - 1];
    const auto& hi = anchors[i];
    if (bitrate_gbps == hi.bitrate_gbps) return hi.width_ghz;
    if (bitrate_gbps < hi.bitrate_gbps) {
      const double t = (bitrate_gbps - lo.bitrate_gbps) / (hi.bitrate_gbps - lo.bitrate_gbps);
      return lo.width_ghz + t * (hi.width_ghz - lo.width_ghz);
    }
  }
  return anchors.back().width_ghz;
}

int slots_for_width(double width_ghz) {
  if (!(width_ghz > 0.0)) throw PreconditionError("width must be > 0");
  // Interpolated widths can land a few ulps above a slot boundary.
  return static_cast<int>(std::ceil(width_ghz / kSlotWidthGhz - 1e-9));
}

std::vector<Flow> split_flows(int bitrate_gbps, WidthMode mode, const Transponder& transponder) {
  if (bitrate_gbps <= 0 || bitrate_gbps % kDemandStepGbps != 0) {
    throw PreconditionError("bit rate must be a positive multiple of 20 Gb/s");
  }
  if (bitrate_gbps > transponder.capacity_gbps()) {
    throw PreconditionError("bit rate " + std::to_string(bitrate_gbps) +
                            " Gb/s exceeds transponder capacity " +
                            std::to_string(transponder.capacity_gbps()) + " Gb/s");
  }
  if (transponder.max_flow_gbps <= 0) throw PreconditionError("max flow must be > 0");
  std::vector<Flow> flows;
  for (int left = bitrate_gbps; left > 0;) {
    const int rate = std::min(left, transponder.max_flow_gbps);
    const double width = spectral_width(rate, mode);
    flows.push_back({rate, width, slots_for_width(width)});
    left -= rate;
  }
  return flows;
}

SpectrumGrid::SpectrumGrid(int slots) {
  if (slots < 1) throw PreconditionError("a spectrum grid needs at least one slot");
  used_.assign(static_cast<std::size_t>(slots), 0);
}

void SpectrumGrid::occupy(int start, int span) {
  if (start < 0 || span < 1 || start + span > size()) throw PreconditionError("slot range out of grid");
  for (int s = start; s < start + span; ++s) {
    if (used_[static_cast<std::size_t>(s)]) throw PreconditionError("slot already occupied");
  }
  std::fill_n(used_.begin() + start, span, std::uint8_t{1});
  occupied_ += span;
}

void SpectrumGrid::release(int start, int span) {
  if (start < 0 || span < 1 || start + span > size()) throw PreconditionError("slot range out of grid");
  for (int s = start; s < start + span; ++s) {
    if (!used_[static_cast<std::size_t>(s)]) throw PreconditionError("slot already free");
  }
  std::fill_n(used_.begin() + start, span, std::uint8_t{0});
  occupied_ -= span;
}

std::optional<int> allocate_first_fit(SpectrumGrid& grid, int span) {
  if (span < 1) throw PreconditionError("span must be >= 1");
  int run = 0;
  for (int s = 0; s < grid.size(); ++s) {
    run = grid.used(s) ? 0 : run + 1;
    if (run == span) {
      const int start = s - span + 1;
      grid.occupy(start, span);
      return start;
    }
  }
  return std::nullopt;
}

std::vector<Demand> generate_demands(int router_count, int demand_count, std::uint64_t seed) {
  if (router_count < 2) throw PreconditionError("need at least two routers");
  if (demand_count < 1) throw PreconditionError("need at least one demand");
  RandomStream rng(seed, stream::kDemands, 0);
  constexpr int kRates = (kMaxDemandGbps - kMinDemandGbps) / kDemandStepGbps + 1;
  const auto routers = static_cast<std::uint64_t>(router_count);
  std::vector<Demand> out;
  out.reserve(static_cast<std::size_t>(demand_count));
  for (int i = 0; i < demand_count; ++i) {
    const int src = static_cast<int>(rng.below(routers));
    int dst = static_cast<int>(rng.below(routers - 1));
    if (dst >= src) ++dst;
    const int rate = kMinDemandGbps + kDemandStepGbps * static_cast<int>(rng.below(kRates));
    out.push_back({src, dst, rate});
  }
  return out;
}

EonNetwork EonNetwork::complete(int routers, int slots_per_link) {
  if (routers < 2) throw PreconditionError("need at least two routers");
  EonNetwork net;
  net.routers_ = routers;
  for (int a = 0; a < routers; ++a) {
    for (int b = a + 1; b < routers; ++b) net.links_.emplace(std::pair{a, b}, SpectrumGrid(slots_per_link));
  }
  return net;
}

EonNetwork EonNetwork::single_link(int slots) {
  EonNetwork net;
  net.routers_ = 2;
  net.links_.emplace(std::pair{0, 1}, SpectrumGrid(slots));
  return net;
}

bool EonNetwork::has_link(int a, int b) const { return links_.contains(key(a, b)); }

SpectrumGrid& EonNetwork::link(int a, int b) {
  auto it = links_.find(key(a, b));
  if (it == links_.end()) {
    throw PreconditionError("no link between routers " + std::to_string(a) + " and " + std::to_string(b));
  }
  return it->second;
}

const SpectrumGrid& EonNetwork::link(int a, int b) const {
  return const_cast<EonNetwork&>(*this).link(a, b);
}

namespace {

std::vector<int> piece_spans(int bitrate_gbps, WidthMode mode) {
  std::vector<int> spans;
  if (mode == WidthMode::FixedWDM) {
    const int channels = (bitrate_gbps + kFixedChannelGbps - 1) / kFixedChannelGbps;
    spans.assign(static_cast<std::size_t>(channels), slots_for_width(kFixedChannelGhz));
    return spans;
  }
  for (const auto& f : split_flows(bitrate_gbps, mode)) spans.push_back(f.slots);
  return spans;
}

}  // namespace

Accommodation accommodate(std::span<const Demand> demands, EonNetwork& network, WidthMode mode) {
  for (const auto& d : demands) (void)network.link(d.src, d.dst);

  Accommodation acc;
  acc.outcomes.reserve(demands.size());
  for (const auto& d : demands) {
    acc.offered_gbps += d.bitrate_gbps;
    auto& grid = network.link(d.src, d.dst);
    DemandOutcome outcome;
    outcome.carried = true;
    for (int span : piece_spans(d.bitrate_gbps, mode)) {
      auto start = allocate_first_fit(grid, span);
      if (!start) {
        outcome.carried = false;
        break;
      }
      outcome.allocations.push_back({*start, span});
    }
    if (outcome.carried) {
      acc.carried_gbps += d.bitrate_gbps;
    } else {
      for (const auto& a : outcome.allocations) grid.release(a.start, a.slots);
      outcome.allocations.clear();
    }
    acc.outcomes.push_back(std::move(outcome));
  }
  return acc;
}

ComparisonReport compare_approaches(const ComparisonSetup& setup, std::span<const std::uint64_t> seeds) {
  if (seeds.empty()) throw PreconditionError("compare_approaches needs at least one seed");
  if (setup.elastic_mode == WidthMode::FixedWDM) {
    throw PreconditionError("the elastic side of the comparison must be an elastic width mode");
  }
  ComparisonReport report;
  double sum = 0.0;
  for (auto seed : seeds) {
    const auto demands = generate_demands(setup.routers, setup.demands, seed);
    auto elastic_net = EonNetwork::complete(setup.routers, setup.slots_per_link);
    auto fixed_net = EonNetwork::complete(setup.routers, setup.slots_per_link);
    const auto elastic = accommodate(demands, elastic_net, setup.elastic_mode);
    const auto fixed = accommodate(demands, fixed_net, WidthMode::FixedWDM);
    ComparisonRow row{seed, elastic.carried_gbps, fixed.carried_gbps, 0.0};
    row.ratio = fixed.carried_gbps > 0
                    ? static_cast<double>(elastic.carried_gbps) / static_cast<double>(fixed.carried_gbps)
                    : 1.0;
    sum += row.ratio;
    report.rows.push_back(row);
  }
  const auto [lo, hi] = std::minmax_element(report.rows.begin(), report.rows.end(),
                                            [](auto& a, auto& b) { return a.ratio < b.ratio; });
  report.mean_ratio = sum / static_cast<double>(report.rows.size());
  report.min_ratio = lo->ratio;
  report.max_ratio = hi->ratio;
  return report;
}

}  // namespace roadm
