#include <gtest/gtest.h>

#include <cmath>

#include "udngc/core/random.hpp"

using udngc::Rng;

TEST(Random, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differs = differs || x != c();
  }
  EXPECT_TRUE(differs);
}

TEST(Random, DerivedSeedsDependOnEveryPart) {
  EXPECT_NE(udngc::derive_seed({1, 2}), udngc::derive_seed({2, 1}));
  EXPECT_NE(udngc::derive_seed({1, 2}), udngc::derive_seed({1, 2, 0}));
  EXPECT_EQ(udngc::derive_seed({7, 9}), udngc::derive_seed({7, 9}));
}

TEST(Random, UniformOpenNeverZero) {
  Rng r(5);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform_open();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Random, MomentsOfExponentialAndGamma) {
  Rng r(11);
  const int n = 200000;
  double se = 0, sg = 0, sp = 0;
  for (int i = 0; i < n; ++i) {
    se += r.exponential();
    sg += r.gamma_int(3);
    sp += static_cast<double>(r.poisson(12.5));
  }
  EXPECT_NEAR(se / n, 1.0, 0.01);
  EXPECT_NEAR(sg / n, 3.0, 0.02);
  EXPECT_NEAR(sp / n, 12.5, 0.05);
}
