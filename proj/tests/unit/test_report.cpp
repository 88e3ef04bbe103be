#include <gtest/gtest.h>

#include <locale>
#include <cstdlib>

#include "roadm/report.hpp"

namespace roadm {
namespace {

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(25.0), "25");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  for (double v : {0.77726517094341285671, 1.0 / 3.0, 2.2738893834079663e-3}) {
    EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v);
  }
}

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
};

TEST(FormatNumber, IgnoresLocale) {
  const auto saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(table2_csv().find(','), std::string("bitrate_gbps").size());
  std::locale::global(saved);
}

TEST(Table2, ExactCsv) {
  EXPECT_EQ(table2_csv(),
            "bitrate_gbps,40,100,400,1000\n"
            "original_eon_ghz,25,50,100,150\n"
            "new_design_ghz,25,45,90,130\n");
  const auto j = table2_json(RunManifest{});
  ASSERT_EQ(j.at("rows").size(), 4u);
  EXPECT_EQ(j.at("rows")[3].at("new_design_slots"), 11);
}

TEST(Sweep, CsvRows) {
  const std::vector<SweepCell> cells{{1.0, 0, 0.5, {}}, {0.5, 8, std::nullopt, "N a < d"}};
  EXPECT_EQ(sweep_csv(cells), "a,d,P_b\n1,0,0.5\n0.5,8,\n");
  const std::vector<LoadAverageRow> rows{{0, 48000, 0.25, {}}};
  EXPECT_EQ(load_average_csv(rows), "d,samples,mean_P_b\n0,48000,0.25\n");
  const auto j = sweep_json(cells, rows, RunManifest{});
  EXPECT_TRUE(j.at("rows")[1].at("P_b").is_null());
  EXPECT_EQ(j.at("rows")[1].at("error"), "N a < d");
}

TEST(Scenario, CsvAndJson) {
  ScenarioReport report;
  ScenarioRow ok;
  ok.label = "2";
  ok.config = {14, 16, 10, 6};
  ok.degrees = 140;
  ok.add_drop_rate = 0.6;
  SimResult r;
  r.offered = 100;
  r.blocked = 0;
  r.ci95 = wilson_interval(0, 100);
  ok.result = r;
  ScenarioRow bad;
  bad.label = "x";
  bad.config = {14, 0, 10, 6};
  bad.error = "M must be >= 1";
  report.rows = {ok, bad};
  const auto csv = scenario_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "case,E,F,degrees,add_drop_rate,offered,blocked,blocking_rate,ci95");
  EXPECT_NE(csv.find("\n2,10,6,140,0.6,100,0,0,"), std::string::npos);
  EXPECT_NE(csv.find("\nx,10,6,0,0,,,,\n"), std::string::npos);
  const auto j = scenario_json(report, RunManifest{});
  EXPECT_EQ(j.at("rows")[0].at("add_drop_percent"), 60);
  EXPECT_EQ(j.at("rows")[1].at("error"), "M must be >= 1");
}

TEST(Comparison, Csv) {
  ComparisonReport report;
  report.rows = {{1, 200, 100, 2.0}};
  report.mean_ratio = report.min_ratio = report.max_ratio = 2.0;
  EXPECT_EQ(comparison_csv(report), "seed,carried_elastic_gbps,carried_fixed_gbps,ratio\n1,200,100,2\n");
  EXPECT_EQ(comparison_json(report, RunManifest{}).at("reference_improvement"), 0.2);
}

TEST(Manifest, Fields) {
  RunManifest m;
  m.version = "0.1.0";
  m.command = "roadmsim eon table2";
  m.seed = 7;
  const auto j = m.to_json();
  EXPECT_EQ(j.at("tool"), "roadmsim");
  EXPECT_EQ(j.at("seed"), 7);
  EXPECT_FALSE(j.contains("timestamp"));
  m.seed.reset();
  EXPECT_TRUE(m.to_json().at("seed").is_null());
}

}  // namespace
}  // namespace roadm
