#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "udngc/analytics.hpp"
#include "udngc/core/error.hpp"

using namespace udngc::analytics;
using std::numbers::pi;

TEST(Intensity, LengthAndArea) {
  EXPECT_DOUBLE_EQ(length_intensity(2.0), 0.5);
  EXPECT_DOUBLE_EQ(area_intensity(10.0, 0.01), 0.002);
  EXPECT_DOUBLE_EQ(area_intensity(10.0, 0.005), 0.001);
  EXPECT_DOUBLE_EQ(area_intensity(10.0, 0.0), 0.0);
  EXPECT_NEAR(area_intensity(7.0, 1e-6) / (2e-6), length_intensity(7.0), 1e-12);
  EXPECT_LT(length_intensity(1e12), 1e-11);
  EXPECT_THROW(area_intensity(10.0, 10.0), udngc::ParameterError);
}

TEST(HandoverRate, RadiusForm) {
  EXPECT_DOUBLE_EQ(handover_rate_radius(pi, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(handover_rate_radius(20.0, 3.0), 2.0 * handover_rate_radius(10.0, 3.0));
  // 2 * 10 / (pi * 30.9) = 0.206026; the quoted 0.2061 carries one unit of
  // error in its last digit because r_M = 30.9 is itself rounded.
  EXPECT_NEAR(handover_rate_radius(10.0, 30.9), 0.2061, 1e-4);
}

TEST(HandoverRate, DensityForm) {
  EXPECT_NEAR(handover_rate_gcho(10.0, 0.001, 3), 0.20601, 5e-6);
  // 0.1030065: the quoted 0.10300 is half of the rounded 0.20601.
  EXPECT_NEAR(handover_rate_gchos(10.0, 0.001, 3), 0.10300, 1e-5);
  EXPECT_DOUBLE_EQ(handover_rate_gcho(10.0, 0.004, 3), 2.0 * handover_rate_gcho(10.0, 0.001, 3));
  for (double m : {1.0, 2.0, 5.0, 9.0}) {
    EXPECT_DOUBLE_EQ(handover_rate_gchos(7.0, 0.003, m), 0.5 * handover_rate_gcho(7.0, 0.003, m));
  }
}

TEST(HandoverRate, GroupCellReductions) {
  const double base = handover_rate_gcho(10.0, 0.01, 1);
  EXPECT_NEAR(100.0 * (1.0 - handover_rate_gcho(10.0, 0.01, 3) / base), 42.3, 0.05);
  EXPECT_NEAR(100.0 * (1.0 - handover_rate_gcho(10.0, 0.01, 6) / base), 59.2, 0.05);
  EXPECT_NEAR(100.0 * (1.0 - handover_rate_gcho(10.0, 0.01, 9) / base), 66.7, 0.05);
}

TEST(Overhead, Linear) {
  EXPECT_DOUBLE_EQ(signaling_overhead(1.0, 0.005, 3), 600.0);
  EXPECT_DOUBLE_EQ(signaling_overhead(1.0, 0.005, 0), 0.0);
  EXPECT_DOUBLE_EQ(signaling_overhead(1.0, 0.005, 6), 1200.0);
}

TEST(Cost, HandoverCostFlagsSaturation) {
  EXPECT_NEAR(handover_cost(0.3, 0.20601).value, 0.0618, 5e-5);
  EXPECT_EQ(handover_cost(0.3, 0.0).value, 0.0);
  const auto big = handover_cost(0.3, 5.0);
  EXPECT_DOUBLE_EQ(big.value, 1.5);
  EXPECT_TRUE(big.saturated);
}

TEST(Cost, CoverageAndAse) {
  EXPECT_DOUBLE_EQ(cost_aware_coverage(0.8, false, 0.1), 0.8);
  EXPECT_DOUBLE_EQ(cost_aware_coverage(0.8, true, 0.1), 0.72);
  EXPECT_DOUBLE_EQ(cost_aware_coverage(0.8, true, 0.0), 0.8);
  EXPECT_DOUBLE_EQ(ase_cost(0.01, 1.0, 0.5), 0.005);
  EXPECT_DOUBLE_EQ(ase_cost(0.01, 1.0, 0.0), 0.0);
  const double d = 0.17;
  const double still = ase_cost(0.002, 3.0, 0.6);
  const double moving = ase_cost(0.002, 3.0, cost_aware_coverage(0.6, true, d));
  EXPECT_NEAR((still - moving) / still, d, 1e-15);
}

TEST(Cost, OverallCostWorkedExample) {
  const CostParams c;
  EXPECT_NEAR(overall_cost(Scheme::gcho, c, 10.0, 0.005, 3), 0.16820, 5e-6);
  const double diff = overall_cost(Scheme::gchos, c, 10.0, 0.005, 4) - overall_cost(Scheme::gcho, c, 10.0, 0.005, 4);
  EXPECT_NEAR(diff, -0.3 * handover_rate_gcho(10.0, 0.005, 4) / 2.0, 1e-15);
  EXPECT_GT(overall_cost(Scheme::gcho, c, 10.0, 0.005, 1000), 0.9);
}

TEST(OptimalSize, ClosedFormAndIntegerChoice) {
  const CostParams c;
  const auto g = optimal_cluster_size(Scheme::gcho, c, 10.0, 0.005);
  const auto s = optimal_cluster_size(Scheme::gchos, c, 10.0, 0.005);
  EXPECT_NEAR(g.continuous, std::cbrt(0.045 / (pi * 1e-4)), 1e-12);
  EXPECT_NEAR(g.continuous, 5.23, 0.005);
  EXPECT_NEAR(s.continuous, 3.30, 0.005);
  EXPECT_NEAR(s.continuous / g.continuous, std::pow(4.0, -1.0 / 3.0), 1e-14);
  EXPECT_EQ(s.integer, 3);
}

TEST(OptimalSize, IntegerOptimumIsLocallyOptimal) {
  const CostParams c;
  for (double lambda : {1e-4, 1e-3, 0.005, 0.01}) {
    for (double speed : {1.0, 10.0, 30.0}) {
      for (auto scheme : {Scheme::gcho, Scheme::gchos}) {
        const auto o = optimal_cluster_size(scheme, c, speed, lambda);
        const double at = overall_cost(scheme, c, speed, lambda, o.integer);
        for (int m = 1; m <= 40; ++m) EXPECT_LE(at, overall_cost(scheme, c, speed, lambda, m) + 1e-15);
      }
    }
  }
}
