#include "roadm/rng.hpp"

#include <limits>

namespace roadm {

namespace {

__extension__ using u128 = unsigned __int128;

std::seed_seq make_seq(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  return std::seed_seq{lo(seed), hi(seed), lo(tag), hi(tag), lo(index), hi(index)};
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_tag, std::uint64_t index) {
  auto seq = make_seq(seed, stream_tag, index);
  engine_.seed(seq);
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  // Lemire's nearly-divisionless rejection method.
  u128 product = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double RandomStream::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace roadm
