#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "udngc/analytics.hpp"
#include "udngc/core/error.hpp"
#include "udngc/geometry.hpp"
#include "udngc/quadrature.hpp"

namespace udngc::analytics {

using std::numbers::pi;

namespace {

std::atomic<std::uint64_t> g_clamp_warnings{0};

void check_k_args(int i, double theta, double eta2) {
  if (i < 0) throw ParameterError("k-integral order must be >= 0");
  if (!(theta >= 0.0)) throw ParameterError("k-integral lower limit must be >= 0");
  if (!(eta2 > 2.0)) {
    throw NumericalError("k-integral diverges for eta2 <= 2 (eta2=" + std::to_string(eta2) + ")");
  }
}

// Tail weights that make A_{M-1} reproduce the typeset recursion when asked to.
double recursion_term_scale(const CoverageParams& params) {
  return params.form.continuity_in_recursion ? 1.0 / params.pathloss.continuity() : 1.0;
}

}  // namespace

void CoverageParams::validate() const {
  if (!(tau > 0.0)) throw ParameterError("SIR threshold must be > 0");
  if (!(density > 0.0)) throw ParameterError("BS density must be > 0");
  if (m < 1) throw ParameterError("group-cell size must be >= 1");
  if (!(quad_tol > 0.0 && quad_tol <= 1e-3)) {
    throw ParameterError("quadrature tolerance must lie in (0, 1e-3]");
  }
  pathloss.validate();
}

double k_integral_quadrature(int i, double theta, double eta2, double rel_tol) {
  check_k_args(i, theta, eta2);
  const double a = 0.5 * eta2;
  auto integrand = [i, a](double u) {
    const double x = std::pow(u, a);
    if (i == 0) return 1.0 / (1.0 + x);
    if (x == 0.0) return 0.0;
    // x / (1 + x)^(i+1) == 1 / ((1 + u^a)^i (1 + u^-a)), in log form to
    // survive large x.
    return std::exp(std::log(x) - (i + 1) * std::log1p(x));
  };
  quadrature::Options opts;
  opts.rel_tol = rel_tol;
  opts.abs_tol = 1e-300;
  const auto r = quadrature::integrate_to_infinity(integrand, theta, opts);
  quadrature::require_converged(r, "k_" + std::to_string(i) + " integral", opts);
  return r.value;
}

double k_integral(int i, double theta, double eta2, double rel_tol) {
  check_k_args(i, theta, eta2);
  if (i == 0 && eta2 == 4.0) return 0.5 * pi - std::atan(theta);
  return k_integral_quadrature(i, theta, eta2, rel_tol);
}

double laplace_interference(double s, double density, double r,
                            const channel::PathLossParams& pathloss, double rel_tol) {
  if (!(s > 0.0)) throw ParameterError("Laplace argument must be > 0");
  if (!(density >= 0.0)) throw ParameterError("BS density must be >= 0");
  if (!(r >= 0.0)) throw ParameterError("exclusion radius must be >= 0");
  pathloss.validate();
  const double scaled = std::pow(s * pathloss.continuity(), 2.0 / pathloss.eta2);
  const double theta = r * r / scaled;
  return std::exp(-pi * density * scaled * k_integral(0, theta, pathloss.eta2, rel_tol));
}

double ToeplitzState::tail_sum() const {
  double sum = 0.0;
  for (std::size_t n = 1; n < a_values.size(); ++n) sum += a_values[n];
  return sum;
}

std::vector<double> a_values_recursive(double a0, double b0, const std::vector<double>& k_values,
                                       int m, double term_scale) {
  if (static_cast<int>(k_values.size()) < m - 1) throw ParameterError("need k_1..k_{M-1}");
  std::vector<double> weighted(static_cast<std::size_t>(std::max(m, 1)), 0.0);
  for (int j = 1; j < m; ++j) weighted[j] = k_values[j - 1] * std::pow(term_scale, j);

  std::vector<double> a(static_cast<std::size_t>(m), 0.0);
  a[0] = a0;
  for (int n = 1; n < m; ++n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(n - i) / n * weighted[n - i] * a[i];
    a[n] = b0 * sum;
  }
  return a;
}

std::vector<std::vector<double>> recursion_matrix(const std::vector<double>& k_values, int m,
                                                  double term_scale) {
  if (static_cast<int>(k_values.size()) < m - 1) throw ParameterError("need k_1..k_{M-1}");
  std::vector<std::vector<double>> f(m, std::vector<double>(m, 0.0));
  for (int n = 1; n < m; ++n) {
    for (int i = 0; i < n; ++i) {
      const int j = n - i;
      f[n][i] = static_cast<double>(j) / n * k_values[j - 1] * std::pow(term_scale, j);
    }
  }
  return f;
}

namespace {

std::vector<double> lower_triangular_apply(const std::vector<std::vector<double>>& mat,
                                           const std::vector<double>& v, double scale) {
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t n = 0; n < v.size(); ++n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += mat[n][i] * v[i];
    out[n] = scale * sum;
  }
  return out;
}

}  // namespace

std::vector<double> a_values_matrix(double a0, double b0, const std::vector<double>& k_values,
                                    int m, double term_scale) {
  const auto f = recursion_matrix(k_values, m, term_scale);
  // (I - b0 F) a = a0 e0 with F nilpotent: a = a0 sum_{p<M} (b0 F)^p e0.
  std::vector<double> power(static_cast<std::size_t>(m), 0.0);
  power[0] = a0;
  std::vector<double> a = power;
  for (int p = 1; p < m; ++p) {
    power = lower_triangular_apply(f, power, b0);
    for (int n = 0; n < m; ++n) a[n] += power[n];
  }
  return a;
}

std::vector<double> a_values_toeplitz_exp(double a0, double b0,
                                          const std::vector<double>& k_values, int m,
                                          double term_scale) {
  if (static_cast<int>(k_values.size()) < m - 1) throw ParameterError("need k_1..k_{M-1}");
  std::vector<std::vector<double>> t(m, std::vector<double>(m, 0.0));
  for (int n = 1; n < m; ++n) {
    for (int i = 0; i < n; ++i) t[n][i] = k_values[n - i - 1] * std::pow(term_scale, n - i);
  }
  // T is nilpotent, so exp(T) e0 = sum_{p<M} T^p e0 / p!.
  std::vector<double> term(static_cast<std::size_t>(m), 0.0);
  term[0] = 1.0;
  std::vector<double> column = term;
  for (int p = 1; p < m; ++p) {
    term = lower_triangular_apply(t, term, b0 / p);
    for (int n = 0; n < m; ++n) column[n] += term[n];
  }
  for (double& v : column) v *= a0;
  return column;
}

ToeplitzState toeplitz_state(double r, const CoverageParams& params) {
  const auto& pl = params.pathloss;
  const double r_power = std::pow(r, params.form.negative_r_exponent ? -pl.eta1 : pl.eta1);
  const double s = params.tau * r_power;
  const double scaled = std::pow(s * pl.continuity(), 2.0 / pl.eta2);
  const double k_tol = 0.1 * params.quad_tol;

  ToeplitzState st;
  st.theta = r * r / scaled;
  st.b0 = pi * params.density * scaled;
  const double a0 = std::exp(-st.b0 * k_integral(0, st.theta, pl.eta2, k_tol));
  st.k_values.reserve(static_cast<std::size_t>(params.m - 1));
  for (int i = 1; i < params.m; ++i) st.k_values.push_back(k_integral(i, st.theta, pl.eta2, k_tol));
  st.a_values = a_values_recursive(a0, st.b0, st.k_values, params.m, recursion_term_scale(params));
  return st;
}

CoverageResult evaluate_coverage(const CoverageParams& params) {
  params.validate();
  if (!(params.pathloss.eta2 > 2.0)) {
    throw NumericalError("coverage integral diverges for eta2 <= 2");
  }
  const double lambda = params.density;
  // Mass of the distance law beyond r_max is below 1e-10 with a wide margin.
  const double r_max = 2.0 * std::sqrt(-std::log(1e-10) / (pi * lambda));

  auto integrand = [&](double r) {
    if (!(r > 0.0)) return 0.0;
    const double weight = params.m >= 2 ? geometry::edge_distance_pdf(r, lambda)
                                        : geometry::kth_distance_pdf(r, 1, lambda);
    if (weight == 0.0) return 0.0;
    const ToeplitzState st = toeplitz_state(r, params);
    return weight * (st.a_values[0] + st.tail_sum());
  };

  quadrature::Options opts;
  opts.rel_tol = params.quad_tol;
  opts.abs_tol = 1e-14;
  const auto q = quadrature::integrate(integrand, 0.0, r_max, opts);
  quadrature::require_converged(q, "coverage outer integral", opts);

  CoverageResult out;
  out.abs_error = q.abs_error;
  out.probability = q.value;
  const double slack = 10.0 * q.abs_error + 1e-12;
  if (q.value < -slack || q.value > 1.0 + slack) {
    std::ostringstream msg;
    msg << "coverage probability " << q.value << " outside [0, 1] beyond error bound " << slack;
    throw NumericalError(msg.str());
  }
  if (q.value < 0.0 || q.value > 1.0) {
    out.probability = std::clamp(q.value, 0.0, 1.0);
    out.clamped = true;
    g_clamp_warnings.fetch_add(1, std::memory_order_relaxed);
  }
  return out;
}

double coverage_probability(const CoverageParams& params) {
  return evaluate_coverage(params).probability;
}

std::uint64_t clamp_warning_count() { return g_clamp_warnings.load(std::memory_order_relaxed); }

}  // namespace udngc::analytics
