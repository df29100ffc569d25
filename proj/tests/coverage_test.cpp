#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "udngc/analytics.hpp"
#include "udngc/core/error.hpp"

using namespace udngc::analytics;
using std::numbers::pi;

namespace {

CoverageParams params(double tau_db, double lambda, int m, double d, double eta1 = 2.0, double eta2 = 4.0) {
  CoverageParams p;
  p.tau = std::pow(10.0, tau_db / 10.0);
  p.density = lambda;
  p.m = m;
  p.pathloss = {eta1, eta2, d};
  return p;
}

}  // namespace

TEST(KIntegral, ClosedFormsAtEtaFour) {
  EXPECT_NEAR(k_integral(0, 0.0, 4.0), pi / 2, 1e-15);
  EXPECT_NEAR(k_integral(0, 1.0, 4.0), pi / 4, 1e-15);
  for (double theta : {0.0, 0.3, 1.0, 4.0, 50.0}) {
    EXPECT_NEAR(k_integral_quadrature(0, theta, 4.0), pi / 2 - std::atan(theta), 1e-8) << theta;
  }
  // int_0^inf u^2 / (1 + u^2)^2 du = pi / 4
  EXPECT_NEAR(k_integral(1, 0.0, 4.0), pi / 4, 1e-9);
}

TEST(KIntegral, MatchesBruteForceRiemannSum) {
  // Midpoint sum with 10^7 panels on the mapped interval u = t / (1 - t).
  const long n = 10000000;
  double sum = 0.0;
  for (long j = 0; j < n; ++j) {
    const double t = (j + 0.5) / n;
    const double s = 1.0 - t;
    const double u = t / s;
    const double x = u * u;
    sum += x / ((1.0 + x) * (1.0 + x)) / (s * s);
  }
  EXPECT_NEAR(k_integral(1, 0.0, 4.0), sum / n, 1e-6);
}

TEST(KIntegral, Errors) {
  EXPECT_THROW(k_integral(0, 0.0, 2.0), udngc::NumericalError);
  EXPECT_THROW(k_integral(-1, 0.0, 4.0), udngc::ParameterError);
  EXPECT_THROW(k_integral(0, -1.0, 4.0), udngc::ParameterError);
}

TEST(Laplace, Limits) {
  const udngc::channel::PathLossParams pl;
  EXPECT_NEAR(laplace_interference(1e-12, 0.01, 5.0, pl), 1.0, 1e-9);
  EXPECT_DOUBLE_EQ(laplace_interference(2.0, 0.0, 5.0, pl), 1.0);
  // General eta2 path (quadrature) agrees with the arctan form at eta2 = 4.
  const double s = 0.3, lambda = 0.01, r = 4.0;
  const double c = std::sqrt(s * pl.continuity());
  const double quad = std::exp(-pi * lambda * c * k_integral_quadrature(0, r * r / c, 4.0));
  EXPECT_NEAR(laplace_interference(s, lambda, r, pl), quad, 1e-8);
  EXPECT_THROW(laplace_interference(0.0, lambda, r, pl), udngc::ParameterError);
}

TEST(Recursion, ThreeRoutesAgree) {
  for (int m = 1; m <= 9; ++m) {
    for (double r : {1.0, 6.9, 20.0}) {
      for (double tau_db : {-10.0, 0.0, 20.0}) {
        const auto st = toeplitz_state(r, params(tau_db, 0.01, m, 10.0));
        const auto mat = a_values_matrix(st.a_values[0], st.b0, st.k_values, m);
        const auto tex = a_values_toeplitz_exp(st.a_values[0], st.b0, st.k_values, m);
        double tail_mat = 0.0, tail_exp = 0.0;
        for (int n = 1; n < m; ++n) {
          EXPECT_NEAR(mat[n], st.a_values[n], 1e-10);
          EXPECT_NEAR(tex[n], st.a_values[n], 1e-10);
          tail_mat += mat[n];
          tail_exp += tex[n];
        }
        EXPECT_NEAR(tail_mat, st.tail_sum(), 1e-10);
        EXPECT_NEAR(tail_exp, st.tail_sum(), 1e-10);
      }
    }
  }
}

TEST(Recursion, StateInvariants) {
  const auto st = toeplitz_state(6.9, params(0.0, 0.01, 5, 10.0));
  EXPECT_GT(st.a_values[0], 0.0);
  EXPECT_LE(st.a_values[0], 1.0);
  EXPECT_GE(st.theta, 0.0);
  for (double k : st.k_values) EXPECT_GE(k, 0.0);
  const auto f = recursion_matrix(st.k_values, 5);
  for (int n = 0; n < 5; ++n) {
    for (int i = n; i < 5; ++i) EXPECT_EQ(f[n][i], 0.0);  // strictly lower triangular
  }
}

// Golden values from tools/reference_coverage.py, which differentiates the
// interference Laplace transform directly instead of using the k recursion.
struct Golden {
  double tau_db, lambda;
  int m;
  double d, eta1, eta2, value;
};

class CoverageGolden : public ::testing::TestWithParam<Golden> {};

TEST_P(CoverageGolden, MatchesIndependentReference) {
  const auto g = GetParam();
  const auto r = evaluate_coverage(params(g.tau_db, g.lambda, g.m, g.d, g.eta1, g.eta2));
  EXPECT_NEAR(r.probability, g.value, 2e-8);
  EXPECT_FALSE(r.clamped);
}

INSTANTIATE_TEST_SUITE_P(
    Reference, CoverageGolden,
    ::testing::Values(Golden{0, 0.01, 3, 10, 2, 4, 0.507256081594},
                      Golden{-10, 0.001, 3, 10, 2, 4, 0.999974366932},
                      Golden{10, 0.01, 3, 20, 2, 4, 0.00074885563945},
                      Golden{5, 0.001, 3, 20, 2, 4, 0.402752088456},
                      Golden{0, 0.01, 1, 10, 2, 4, 0.236748278282},
                      Golden{0, 0.01, 6, 10, 2, 4, 0.843736089225},
                      Golden{0, 0.005, 9, 10, 2, 4, 0.993623968398},
                      Golden{0, 0.01, 3, 10, 2, 3, 0.283522394709},
                      Golden{3, 0.002, 4, 15, 2.5, 3.5, 0.494217426598},
                      Golden{20, 0.01, 3, 10, 2, 4, 0.000119825979836}));

TEST(Coverage, LimitsAndOrderings) {
  auto p = params(0.0, 0.01, 3, 10.0);
  p.tau = 1e-6;
  EXPECT_GT(coverage_probability(p), 0.999);
  for (double lambda : {0.001, 0.01}) {
    double prev = 2.0;
    for (double db : {-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0}) {
      const double v = coverage_probability(params(db, lambda, 3, 10.0));
      EXPECT_LT(v, prev) << "lambda=" << lambda << " tau=" << db;
      EXPECT_GE(v, 0.0);
      prev = v;
    }
  }
  for (double db : {-5.0, 0.0, 5.0}) {
    EXPECT_GT(coverage_probability(params(db, 0.01, 3, 10.0)), coverage_probability(params(db, 0.01, 3, 20.0)));
    EXPECT_GT(coverage_probability(params(db, 0.001, 3, 10.0)), coverage_probability(params(db, 0.01, 3, 10.0)));
  }
}

TEST(Coverage, PrintedFormsAreSelectable) {
  auto base = params(0.0, 0.01, 3, 10.0);
  const double corrected = coverage_probability(base);
  auto neg = base;
  neg.form.negative_r_exponent = true;
  auto scaled = base;
  scaled.form.continuity_in_recursion = true;
  EXPECT_GT(std::abs(coverage_probability(neg) - corrected), 1e-3);
  // Extra D^-(eta2-eta1) per order shrinks every a_n, n >= 1.
  EXPECT_LT(coverage_probability(scaled), corrected);
}

TEST(Coverage, Validation) {
  auto p = params(0.0, 0.01, 3, 10.0);
  p.quad_tol = 1e-2;
  EXPECT_THROW(coverage_probability(p), udngc::ParameterError);
  p = params(0.0, 0.01, 0, 10.0);
  EXPECT_THROW(coverage_probability(p), udngc::ParameterError);
  p = params(0.0, 0.01, 3, 10.0, 2.0, 2.0);
  EXPECT_THROW(coverage_probability(p), udngc::NumericalError);
}
