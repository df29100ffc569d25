#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "udngc/channel.hpp"
#include "udngc/core/error.hpp"

using namespace udngc;
using namespace udngc::channel;

TEST(PathLoss, ContinuousAtCriticalDistance) {
  const PathLossParams p{2.0, 4.0, 10.0};
  EXPECT_DOUBLE_EQ(p.continuity(), 100.0);
  EXPECT_DOUBLE_EQ(path_loss(10.0, p), 0.01);
  EXPECT_NEAR(path_loss(10.0 * (1 + 1e-12), p), 0.01, 1e-12);
  EXPECT_DOUBLE_EQ(path_loss(5.0, p), 1.0 / 25.0);
  EXPECT_DOUBLE_EQ(path_loss(20.0, p), 100.0 / 160000.0);
  EXPECT_DOUBLE_EQ(nlos_path_loss(5.0, p), 100.0 / 625.0);
}

TEST(PathLoss, Errors) {
  const PathLossParams p;
  EXPECT_THROW(path_loss(0.0, p), ParameterError);
  const PathLossParams bad{5.0, 4.0, 10.0};
  try {
    bad.validate();
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("eta1 <= eta2"), std::string::npos);
  }
}

TEST(Fading, CounterBasedPerBs) {
  EXPECT_EQ(fading_gain(3, 17), fading_gain(3, 17));
  EXPECT_NE(fading_gain(3, 17), fading_gain(3, 18));
  double s = 0;
  for (std::uint32_t i = 0; i < 100000; ++i) s += fading_gain(1, i);
  EXPECT_NEAR(s / 100000, 1.0, 0.01);
}

namespace {

geometry::Deployment line(const std::vector<Point>& pts) {
  return geometry::make_deployment(pts, 1.0, geometry::Window({0, 0}, 1000));
}

}  // namespace

TEST(Sir, HandComputedUnitGains) {
  // UE at origin; cooperators at 2 and 20 m, interferer at 30 m, M = 2.
  const auto d = line({{2, 0}, {0, 20}, {-30, 0}});
  const PathLossParams p{2.0, 4.0, 10.0};
  const std::vector<double> g(3, 1.0);
  const auto exact = sir_exact(d, {0, 0}, 2, p, g);
  EXPECT_DOUBLE_EQ(exact.signal, 0.25 + 100.0 / 160000.0);
  EXPECT_DOUBLE_EQ(exact.interference, 100.0 / 810000.0);
  const auto approx = sir_approx(d, {0, 0}, 2, p, g);
  EXPECT_DOUBLE_EQ(approx.signal, 0.25 + 1.0 / 400.0);
  EXPECT_DOUBLE_EQ(approx.interference, exact.interference);
  EXPECT_GT(approx.sir, exact.sir);
}

TEST(Sir, ExactEqualsApproxInsideCriticalDistance) {
  const auto d = line({{1, 0}, {0, 3}, {-4, 0}, {50, 50}});
  const PathLossParams p{2.0, 4.0, 10.0};
  const auto a = sir_exact(d, {0, 0}, 3, p, 5);
  const auto b = sir_approx(d, {0, 0}, 3, p, 5);
  EXPECT_DOUBLE_EQ(a.sir, b.sir);
}

TEST(Sir, Errors) {
  const PathLossParams p;
  EXPECT_THROW(sir_exact(line({{1, 0}, {2, 0}}), {0, 0}, 2, p, 1), InsufficientPointsError);
  EXPECT_THROW(sir_exact(line({{0, 0}, {2, 0}}), {0, 0}, 1, p, 1), ParameterError);
}
