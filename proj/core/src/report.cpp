#include "roadm/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace roadm {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), end);
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j = {
      {"tool", tool},
      {"version", version},
      {"command", command},
      {"config", config},
      {"rng", rng},
      {"outputs", outputs},
  };
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  if (timestamp) j["timestamp"] = *timestamp;
  return j;
}

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string sweep_csv(std::span<const SweepCell> cells) {
  std::ostringstream os;
  os << "a,d,P_b\n";
  for (const auto& c : cells) {
    os << format_number(c.a) << ',' << c.d << ',' << (c.blocking ? format_number(*c.blocking) : "")
       << '\n';
  }
  return os.str();
}

std::string load_average_csv(std::span<const LoadAverageRow> rows) {
  std::ostringstream os;
  os << "d,samples,mean_P_b\n";
  for (const auto& r : rows) {
    os << r.d << ',' << r.samples << ',' << (r.blocking ? format_number(*r.blocking) : "") << '\n';
  }
  return os.str();
}

nlohmann::json sweep_json(std::span<const SweepCell> cells, std::span<const LoadAverageRow> averages,
                          const RunManifest& manifest) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json row = {{"a", c.a}, {"d", c.d}, {"P_b", optional_number(c.blocking)}};
    if (!c.error.empty()) row["error"] = c.error;
    rows.push_back(std::move(row));
  }
  nlohmann::json avg = nlohmann::json::array();
  for (const auto& r : averages) {
    nlohmann::json row = {{"d", r.d}, {"samples", r.samples}, {"mean_P_b", optional_number(r.blocking)}};
    if (!r.error.empty()) row["error"] = r.error;
    avg.push_back(std::move(row));
  }
  return {{"manifest", manifest.to_json()},
          {"columns", {"a", "d", "P_b"}},
          {"rows", std::move(rows)},
          {"load_averaged", std::move(avg)}};
}

std::string scenario_csv(const ScenarioReport& report) {
  std::ostringstream os;
  os << "case,E,F,degrees,add_drop_rate,offered,blocked,blocking_rate,ci95\n";
  for (const auto& row : report.rows) {
    os << row.label << ',' << row.config.line_chassis << ',' << row.config.add_drop_chassis << ','
       << row.degrees << ',' << format_number(row.add_drop_rate) << ',';
    if (row.result) {
      const auto& r = *row.result;
      os << r.offered << ',' << r.blocked << ',' << format_number(r.blocking_rate) << ','
         << format_number(r.ci95.half_width);
    } else {
      os << ",,,";
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json scenario_json(const ScenarioReport& report, const RunManifest& manifest) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json j = {
        {"case", row.label},
        {"N", row.config.line_cards},
        {"M", row.config.connection_cards},
        {"E", row.config.line_chassis},
        {"F", row.config.add_drop_chassis},
        {"degrees", row.degrees},
        {"add_drop_rate", row.add_drop_rate},
        {"add_drop_percent", std::lround(row.add_drop_rate * 100.0)},
    };
    if (row.result) {
      const auto& r = *row.result;
      j["offered"] = r.offered;
      j["blocked"] = r.blocked;
      j["accepted_local"] = r.accepted_local;
      j["blocking_rate"] = r.blocking_rate;
      j["ci95"] = r.ci95.half_width;
      j["ci95_lower"] = r.ci95.lower;
      j["ci95_upper"] = r.ci95.upper;
      j["add_drop_offered"] = r.add_drop_offered;
      j["add_drop_blocked"] = r.add_drop_blocked;
    } else {
      j["error"] = row.error;
    }
    rows.push_back(std::move(j));
  }
  return {{"manifest", manifest.to_json()}, {"rows", std::move(rows)}};
}

std::string table2_csv() {
  std::ostringstream os;
  const auto original = width_anchors(WidthMode::OriginalEON);
  const auto design = width_anchors(WidthMode::NewDesign);
  os << "bitrate_gbps";
  for (const auto& a : original) os << ',' << a.bitrate_gbps;
  os << "\noriginal_eon_ghz";
  for (const auto& a : original) os << ',' << format_number(a.width_ghz);
  os << "\nnew_design_ghz";
  for (const auto& a : design) os << ',' << format_number(a.width_ghz);
  os << '\n';
  return os.str();
}

nlohmann::json table2_json(const RunManifest& manifest) {
  nlohmann::json rows = nlohmann::json::array();
  const auto original = width_anchors(WidthMode::OriginalEON);
  const auto design = width_anchors(WidthMode::NewDesign);
  for (std::size_t i = 0; i < original.size(); ++i) {
    rows.push_back({{"bitrate_gbps", original[i].bitrate_gbps},
                    {"original_eon_ghz", original[i].width_ghz},
                    {"new_design_ghz", design[i].width_ghz},
                    {"new_design_slots", slots_for_width(design[i].width_ghz)}});
  }
  return {{"manifest", manifest.to_json()}, {"rows", std::move(rows)}};
}

std::string comparison_csv(const ComparisonReport& report) {
  std::ostringstream os;
  os << "seed,carried_elastic_gbps,carried_fixed_gbps,ratio\n";
  for (const auto& r : report.rows) {
    os << r.seed << ',' << r.carried_elastic_gbps << ',' << r.carried_fixed_gbps << ','
       << format_number(r.ratio) << '\n';
  }
  return os.str();
}

nlohmann::json comparison_json(const ComparisonReport& report, const RunManifest& manifest) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"seed", r.seed},
                    {"carried_elastic_gbps", r.carried_elastic_gbps},
                    {"carried_fixed_gbps", r.carried_fixed_gbps},
                    {"ratio", r.ratio}});
  }
  return {{"manifest", manifest.to_json()},
          {"rows", std::move(rows)},
          {"mean_ratio", report.mean_ratio},
          {"min_ratio", report.min_ratio},
          {"max_ratio", report.max_ratio},
          {"reference_improvement", 0.20}};
}

}  // namespace roadm
