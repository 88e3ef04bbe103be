#pragma once

// Flex-grid spectrum model for the elastic optical network served by the
// cluster nodes: channel widths per bit rate, multi-flow transponder splits,
// first-fit slot allocation, and carried-traffic comparison between elastic
// and fixed 50 GHz WDM operation.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace roadm {

inline constexpr double kSlotWidthGhz = 12.5;
inline constexpr int kDefaultGridSlots = 320;
inline constexpr int kMinDemandGbps = 40;
inline constexpr int kMaxDemandGbps = 1000;
inline constexpr int kDemandStepGbps = 20;

enum class WidthMode { OriginalEON, NewDesign, FixedWDM };

std::string to_string(WidthMode mode);

/// Published width anchors (bit rate Gb/s, width GHz) for the two elastic modes.
struct WidthAnchor {
  int bitrate_gbps;
  double width_ghz;
};
std::span<const WidthAnchor> width_anchors(WidthMode mode);

/// Channel width in GHz. Elastic modes interpolate linearly between anchors
/// and hold the 40 Gb/s width below 40 Gb/s. FixedWDM uses one 50 GHz channel
/// per started 100 Gb/s. Throws PreconditionError outside (0, 1000] Gb/s.
double spectral_width(double bitrate_gbps, WidthMode mode);

/// Whole 12.5 GHz slots covering a width.
int slots_for_width(double width_ghz);

struct Flow {
  int bitrate_gbps = 0;
  double width_ghz = 0.0;
  int slots = 0;
};

struct Transponder {
  int subchannel_gbps = 100;
  int subchannels = 10;
  int max_flow_gbps = 400;

  int capacity_gbps() const noexcept { return subchannel_gbps * subchannels; }
};

/// Greedy multi-flow split: flows of max_flow_gbps, remainder last. Widths and
/// slot spans follow `mode`. Throws PreconditionError when the bit rate is not
/// a positive multiple of 20 Gb/s or exceeds the transponder capacity.
std::vector<Flow> split_flows(int bitrate_gbps, WidthMode mode = WidthMode::NewDesign,
                              const Transponder& transponder = {});

/// Occupancy bitmap of one link's 12.5 GHz slots.
class SpectrumGrid {
 public:
  explicit SpectrumGrid(int slots = kDefaultGridSlots);

  int size() const noexcept { return static_cast<int>(used_.size()); }
  int occupied() const noexcept { return occupied_; }
  bool used(int slot) const { return used_.at(static_cast<std::size_t>(slot)) != 0; }

  /// Marks [start, start + span) used. All slots must be free.
  void occupy(int start, int span);
  /// Marks [start, start + span) free. All slots must be used.
  void release(int start, int span);

 private:
  std::vector<std::uint8_t> used_;
  int occupied_ = 0;
};

/// Lowest start of a free contiguous run of `span` slots, which is then
/// occupied; nullopt (grid unchanged) if none exists. span must be >= 1.
std::optional<int> allocate_first_fit(SpectrumGrid& grid, int span);

struct Demand {
  int src = 0;
  int dst = 0;
  int bitrate_gbps = 0;

  friend bool operator==(const Demand&, const Demand&) = default;
};

/// Uniform router pairs (src != dst) and bit rates uniform over 40, 60, ... 1000.
std::vector<Demand> generate_demands(int router_count, int demand_count, std::uint64_t seed);

/// Links keyed by unordered router pair.
class EonNetwork {
 public:
  /// One link between every pair of `routers` routers.
  static EonNetwork complete(int routers, int slots_per_link = kDefaultGridSlots);
  /// Routers 0 and 1 joined by one link.
  static EonNetwork single_link(int slots = kDefaultGridSlots);

  int routers() const noexcept { return routers_; }
  /// Throws PreconditionError if the pair has no link.
  SpectrumGrid& link(int a, int b);
  const SpectrumGrid& link(int a, int b) const;
  bool has_link(int a, int b) const;
  const std::map<std::pair<int, int>, SpectrumGrid>& links() const noexcept { return links_; }

 private:
  static std::pair<int, int> key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

  int routers_ = 0;
  std::map<std::pair<int, int>, SpectrumGrid> links_;
};

struct SlotAllocation {
  int start = 0;
  int slots = 0;
};

struct DemandOutcome {
  bool carried = false;
  std::vector<SlotAllocation> allocations;
};

struct Accommodation {
  std::int64_t offered_gbps = 0;
  std::int64_t carried_gbps = 0;
  std::vector<DemandOutcome> outcomes;
};

/// Admits demands in order on their direct link. Elastic modes allocate every
/// flow of split_flows first-fit; FixedWDM allocates one 4-slot channel per
/// started 100 Gb/s. A demand is carried only if all of its pieces fit;
/// otherwise its partial allocations are released.
Accommodation accommodate(std::span<const Demand> demands, EonNetwork& network, WidthMode mode);

struct ComparisonRow {
  std::uint64_t seed = 0;
  std::int64_t carried_elastic_gbps = 0;
  std::int64_t carried_fixed_gbps = 0;
  double ratio = 0.0;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

struct ComparisonSetup {
  int routers = 6;
  int demands = 500;
  int slots_per_link = kDefaultGridSlots;
  WidthMode elastic_mode = WidthMode::NewDesign;
};

/// Carried(elastic) / carried(FixedWDM) per seed on identical fresh complete
/// networks, with mean, min and max over seeds.
ComparisonReport compare_approaches(const ComparisonSetup& setup, std::span<const std::uint64_t> seeds);

}  // namespace roadm
