#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration. The rule's nodes and
// weights come from Boost.Math; interval management is ours so that
// convergence is judged on the summed error over all sub-intervals.

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace udngc::quadrature {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

struct Options {
  double rel_tol = 1e-8;
  double abs_tol = 1e-15;
  int max_intervals = 4000;
};

namespace detail {

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gk15(F& f, double a, double b, int& evaluations) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  static const auto& nodes = Rule::abscissa();
  static const auto& kronrod = Rule::weights();
  static const auto& gauss = boost::math::quadrature::gauss<double, 7>::weights();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double k = fc * kronrod[0];
  double g = fc * gauss[0];
  evaluations += 1;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double dx = half * nodes[i];
    const double sum = f(center - dx) + f(center + dx);
    evaluations += 2;
    k += kronrod[i] * sum;
    if (i % 2 == 0) g += gauss[i / 2] * sum;
  }
  return {a, b, k * half, std::abs((k - g) * half)};
}

}  // namespace detail

template <class F>
Result integrate(F f, double a, double b, const Options& opts = {}) {
  Result out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<detail::Segment> work;
  auto first = detail::gk15(f, a, b, out.evaluations);
  double total = first.value;
  double error = first.error;
  work.push(first);
  int intervals = 1;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) &&
         intervals < opts.max_intervals) {
    const detail::Segment worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      work.push(worst);
      break;  // interval no longer divisible in floating point
    }
    const auto left = detail::gk15(f, worst.a, mid, out.evaluations);
    const auto right = detail::gk15(f, mid, worst.b, out.evaluations);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
    ++intervals;
  }
  // Re-sum to shed the drift of incremental updates.
  total = 0.0;
  error = 0.0;
  while (!work.empty()) {
    total += work.top().value;
    error += work.top().error;
    work.pop();
  }
  out.value = total;
  out.abs_error = error;
  out.intervals = intervals;
  out.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  return out;
}

// Integral over [lower, inf) via u = lower + t / (1 - t), t in [0, 1).
template <class F>
Result integrate_to_infinity(F f, double lower, const Options& opts = {}) {
  auto mapped = [&f, lower](double t) {
    const double s = 1.0 - t;
    const double u = lower + t / s;
    const double value = f(u) / (s * s);
    return std::isfinite(value) ? value : 0.0;
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

// Throws NumericalError naming `what` when `r` did not meet its tolerance.
void require_converged(const Result& r, const std::string& what, const Options& opts);

}  // namespace udngc::quadrature
