#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "roadm/errors.hpp"
#include "roadm/lee_analytics.hpp"

namespace roadm {
namespace {

using testing::lee_blocking_precise;
using testing::relative_error;

TEST(LinkOccupancy, Examples) {
  EXPECT_DOUBLE_EQ(link_occupancy(14, 16, 1.0, 0), 14.0 / 16.0);
  EXPECT_DOUBLE_EQ(link_occupancy(14, 16, 1.0, 8), 6.0 / 8.0);
  EXPECT_DOUBLE_EQ(link_occupancy(14, 16, 0.0, 0), 0.0);
}

// Frozen from a 50-digit evaluation of the closed form.
TEST(LeeBlocking, Goldens) {
  EXPECT_NEAR(lee_blocking(14, 16, 1.0, 0), 0.77726517094341285671, 1e-15);
  EXPECT_NEAR(lee_blocking(14, 16, 0.5, 0), 0.0022738893834079662870, 1e-17);
  EXPECT_NEAR(lee_blocking(14, 16, 1.0, 8), 0.59671947383321821690, 1e-15);
}

TEST(LeeBlocking, AgreesWithHighPrecision) {
  for (int d : {0, 3, 8, 13}) {
    for (double a : {0.93, 0.97, 1.0}) {
      if (d > 14 * a) continue;
      const double v = lee_blocking(14, 16, a, d);
      EXPECT_LE(relative_error(v, lee_blocking_precise(14, 16, a, d)), 1e-12) << a << ' ' << d;
    }
  }
}

TEST(LeeBlocking, EdgeValues) {
  EXPECT_EQ(lee_blocking(14, 16, 0.0, 0), 0.0);
  EXPECT_EQ(lee_blocking(16, 16, 1.0, 4), 1.0);
  EXPECT_EQ(lee_blocking(1, 1, 1.0, 0), 1.0);
  const double tiny = lee_blocking(14, 16, 1e-12, 0);
  EXPECT_GE(tiny, 0.0);
  EXPECT_LT(tiny, 1e-100);
}

TEST(LeeBlocking, DomainErrors) {
  EXPECT_THROW(lee_blocking(14, 16, 1.1, 0), DomainError);
  EXPECT_THROW(lee_blocking(14, 16, -0.1, 0), DomainError);
  EXPECT_THROW(lee_blocking(14, 16, 0.5, 8), DomainError);   // N a < d
  EXPECT_THROW(lee_blocking(14, 16, 1.0, 16), DomainError);  // M <= d
  EXPECT_THROW(lee_blocking(20, 16, 1.0, 0), DomainError);   // N a > M
  EXPECT_THROW(lee_blocking(0, 16, 1.0, 0), DomainError);
  EXPECT_THROW(lee_blocking(14, 16, 1.0, -1), DomainError);
  EXPECT_THROW(lee_blocking(14, 16, std::nan(""), 0), DomainError);
}

TEST(WeightedBlocking, Examples) {
  const std::vector<DegreeBlocking> equal{{0.1, 1.0}, {0.3, 1.0}};
  EXPECT_DOUBLE_EQ(weighted_blocking(equal), 0.2);
  const std::vector<DegreeBlocking> skew{{0.1, 3.0}, {0.5, 1.0}};
  EXPECT_DOUBLE_EQ(weighted_blocking(skew), 0.2);
  const std::vector<DegreeBlocking> one_zero{{0.4, 0.0}, {0.2, 2.0}};
  EXPECT_DOUBLE_EQ(weighted_blocking(one_zero), 0.2);
}

TEST(WeightedBlocking, Errors) {
  EXPECT_THROW(weighted_blocking({}), DomainError);
  const std::vector<DegreeBlocking> zero{{0.1, 0.0}, {0.2, 0.0}};
  EXPECT_THROW(weighted_blocking(zero), DomainError);
  const std::vector<DegreeBlocking> negative{{0.1, -1.0}, {0.2, 2.0}};
  EXPECT_THROW(weighted_blocking(negative), DomainError);
  const std::vector<DegreeBlocking> out_of_range{{1.5, 1.0}};
  EXPECT_THROW(weighted_blocking(out_of_range), DomainError);
}

TEST(AverageOverLoads, OneSampleUsesBothEndpoints) {
  std::vector<double> seen;
  const double v = average_over_loads(
      [&](double a) {
        seen.push_back(a);
        return std::optional<double>(a);
      },
      1);
  EXPECT_EQ(seen, (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(v, 0.5);
  EXPECT_THROW(average_over_loads([](double) { return std::optional<double>(1.0); }, 0), DomainError);
  EXPECT_THROW(average_over_loads([](double) { return std::optional<double>(); }, 10), DomainError);
}

TEST(LoadAveraged, Goldens) {
  const std::vector<double> lambda{1.0};
  // 48001-point discrete means, frozen from a 50-digit evaluation.
  EXPECT_NEAR(load_averaged_blocking(14, 16, 0, lambda), 0.11571834856668534081, 1e-13);
  EXPECT_NEAR(load_averaged_blocking(14, 16, 4, lambda), 0.11812622993190180642, 1e-13);
  EXPECT_NEAR(load_averaged_blocking(14, 16, 8, lambda), 0.11493941833463450102, 1e-13);
}

TEST(LoadAveraged, CloseToQuadrature) {
  const std::vector<double> lambda{1.0};
  for (int d : {0, 4, 8}) {
    EXPECT_NEAR(load_averaged_blocking(14, 16, d, lambda), testing::simpson_mean_blocking(14, 16, d), 1e-4);
  }
  EXPECT_THROW(load_averaged_blocking(14, 16, 0, std::vector<double>{}), DomainError);
}

TEST(AnalyticSweep, RowsAndErrors) {
  const std::vector<double> loads{0.5, 1.0};
  const std::vector<int> ds{0, 8};
  const auto cells = analytic_sweep({14, 16, 8, 6}, loads, ds);
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].a, 0.5);
  EXPECT_EQ(cells[0].d, 0);
  ASSERT_TRUE(cells[0].blocking);
  EXPECT_FALSE(cells[1].blocking);  // 14 * 0.5 < 8
  EXPECT_FALSE(cells[1].error.empty());
  ASSERT_TRUE(cells[3].blocking);
  EXPECT_DOUBLE_EQ(*cells[3].blocking, lee_blocking(14, 16, 1.0, 8));
}

TEST(AnalyticSweep, ClampSaturated) {
  const std::vector<double> loads{1.0};
  const std::vector<int> ds{0};
  EXPECT_FALSE(analytic_sweep({20, 16, 1, 0}, loads, ds)[0].blocking);
  const auto clamped = analytic_sweep({20, 16, 1, 0}, loads, ds, {.clamp_saturated = true});
  ASSERT_TRUE(clamped[0].blocking);
  EXPECT_EQ(*clamped[0].blocking, 1.0);
}

}  // namespace
}  // namespace roadm
