#pragma once

// Randomised and exhaustive invariant checks, shared by the unit tests and
// the acceptance runner.

#include <cstdint>
#include <span>
#include <string>

namespace roadm::testing {

inline constexpr int kPropertyTrials = 10'000;

struct PropertyResult {
  std::string name;
  int trials = 0;
  bool passed = true;
  std::string counterexample;
};

struct PropertySpec {
  const char* module;
  const char* name;
  PropertyResult (*run)(int trials, std::uint64_t seed);
  /// Statistical properties are checked once per scenario, not per trial.
  bool scenario_level = false;
};

std::span<const PropertySpec> all_properties();

}  // namespace roadm::testing
