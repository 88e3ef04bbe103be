#pragma once

// CSV and JSON emission for every report the toolkit produces.
//
// CSV files carry one fixed header line and data rows only; numbers use the
// shortest round-trip form with '.' as decimal separator, independent of the
// process locale. Reproducibility metadata travels in a RunManifest, which
// JSON reports embed and CSV files get as a sidecar.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "roadm/eon_spectrum.hpp"
#include "roadm/fullload_sim.hpp"
#include "roadm/lee_analytics.hpp"

namespace roadm {

/// Shortest decimal that round-trips to `value`.
std::string format_number(double value);

struct RunManifest {
  std::string tool = "roadmsim";
  std::string version;
  std::string command;
  nlohmann::json config = nlohmann::json::object();  // fully resolved flag values
  std::optional<std::uint64_t> seed;
  std::string rng;
  std::vector<std::string> outputs;
  std::optional<std::string> timestamp;

  nlohmann::json to_json() const;
};

struct LoadAverageRow {
  int d = 0;
  int samples = 0;
  std::optional<double> blocking;
  std::string error;
};

std::string sweep_csv(std::span<const SweepCell> cells);
nlohmann::json sweep_json(std::span<const SweepCell> cells, std::span<const LoadAverageRow> averages,
                          const RunManifest& manifest);
std::string load_average_csv(std::span<const LoadAverageRow> rows);

std::string scenario_csv(const ScenarioReport& report);
nlohmann::json scenario_json(const ScenarioReport& report, const RunManifest& manifest);

/// Widths of the two elastic modes at their anchor bit rates.
std::string table2_csv();
nlohmann::json table2_json(const RunManifest& manifest);

std::string comparison_csv(const ComparisonReport& report);
nlohmann::json comparison_json(const ComparisonReport& report, const RunManifest& manifest);

}  // namespace roadm
