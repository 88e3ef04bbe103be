#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace roadm {

/// Name recorded in every report manifest.
inline constexpr std::string_view kRngName = "mt19937_64+seed_seq";

/// Deterministic random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. It is seeded through std::seed_seq (also fully specified) from
/// the user seed, a stream tag, and a stream index, so map i of a run draws
/// the same numbers no matter which worker evaluates it. Bounded integers and
/// unit reals are derived here rather than through <random> distributions,
/// whose algorithms differ between standard libraries.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_tag, std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

/// Stream tags keep the independent consumers of one user seed apart.
namespace stream {
inline constexpr std::uint64_t kConnectivityMap = 0x6d6170;   // "map"
inline constexpr std::uint64_t kInterconnect = 0x77697265;    // "wire"
inline constexpr std::uint64_t kDemands = 0x64656d;           // "dem"
}  // namespace stream

}  // namespace roadm
