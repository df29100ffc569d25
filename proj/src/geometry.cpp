#include "udngc/geometry.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "udngc/core/error.hpp"
#include "udngc/core/random.hpp"
#include "udngc/simd/kernels.hpp"

namespace udngc::geometry {

using std::numbers::pi;

Window::Window(Point center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0)) throw ParameterError("window radius must be > 0");
}

double Window::area() const { return pi * radius_ * radius_; }

bool Window::contains(Point p) const { return squared_distance(p, center_) <= radius_ * radius_; }

double Window::clearance(Point p) const { return radius_ - distance(p, center_); }

Deployment::Deployment(std::vector<double> xs, std::vector<double> ys, double density,
                       Window window, std::uint64_t seed)
    : xs_(std::move(xs)), ys_(std::move(ys)), density_(density), window_(window), seed_(seed) {
  if (xs_.size() != ys_.size()) throw ParameterError("deployment coordinate arrays differ in size");
  if (!(density_ > 0.0)) throw ParameterError("deployment density must be > 0");
}

Deployment make_deployment(std::span<const Point> points, double density, Window window) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const Point& p : points) {
    if (!window.contains(p)) throw ParameterError("deployment point lies outside the window");
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return Deployment(std::move(xs), std::move(ys), density, window, 0);
}

Deployment sample_ppp(double density, const Window& window, std::uint64_t seed) {
  if (!(density > 0.0)) throw ParameterError("PPP density must be > 0");
  Rng rng(derive_seed({seed, 0x707070ULL}));
  const auto count = rng.poisson(density * window.area());
  std::vector<double> xs(count);
  std::vector<double> ys(count);
  const Point c = window.center();
  for (std::uint64_t i = 0; i < count; ++i) {
    const double r = window.radius() * std::sqrt(rng.uniform());
    const double theta = 2.0 * pi * rng.uniform();
    xs[i] = c.x + r * std::cos(theta);
    ys[i] = c.y + r * std::sin(theta);
  }
  return Deployment(std::move(xs), std::move(ys), density, window, seed);
}

void k_nearest_from_squared(std::span<const double> squared, std::size_t k, NeighborList& out,
                            std::vector<std::uint32_t>& scratch) {
  if (k > squared.size()) {
    throw InsufficientPointsError("requested " + std::to_string(k) + " nearest BSs but only " +
                                  std::to_string(squared.size()) + " are deployed");
  }
  scratch.resize(squared.size());
  for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = static_cast<std::uint32_t>(i);
  const auto closer = [&](std::uint32_t a, std::uint32_t b) {
    return squared[a] < squared[b] || (squared[a] == squared[b] && a < b);
  };
  const auto kth = scratch.begin() + static_cast<std::ptrdiff_t>(k);
  if (k < scratch.size()) std::nth_element(scratch.begin(), kth, scratch.end(), closer);
  std::sort(scratch.begin(), kth, closer);

  out.ids.assign(scratch.begin(), kth);
  out.distances.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.distances[i] = std::sqrt(squared[out.ids[i]]);
}

NeighborList k_nearest(const Deployment& deployment, Point query, std::size_t k) {
  std::vector<double> squared(deployment.size());
  simd::squared_distances(deployment.xs(), deployment.ys(), query.x, query.y, squared);
  NeighborList out;
  std::vector<std::uint32_t> scratch;
  k_nearest_from_squared(squared, k, out, scratch);
  return out;
}

double kth_distance_pdf(double r, int m, double density) {
  if (m < 1) throw ParameterError("order M must be >= 1");
  if (r < 0.0) throw ParameterError("distance must be >= 0");
  if (r == 0.0) return 0.0;
  const double pl = pi * density;
  // Log space keeps large M from overflowing (pi lambda)^M / Gamma(M).
  const double log_pdf = std::log(2.0) + m * std::log(pl) - std::lgamma(static_cast<double>(m)) -
                         pl * r * r + (2.0 * m - 1.0) * std::log(r);
  return std::exp(log_pdf);
}

double kth_distance_cdf(double r, int m, double density) {
  if (m < 1) throw ParameterError("order M must be >= 1");
  if (r <= 0.0) return 0.0;
  return boost::math::gamma_p(static_cast<double>(m), pi * density * r * r);
}

double edge_distance_pdf(double r, double density) {
  if (r < 0.0) throw ParameterError("distance must be >= 0");
  const double pl = pi * density;
  return 2.0 * pl * pl * r * r * r * std::exp(-pl * r * r);
}

std::size_t Trajectory::step_count() const {
  return static_cast<std::size_t>(std::ceil(duration / step - 1e-9));
}

Point Trajectory::position_at(double t) const {
  const double d = speed * t;
  return {start.x + d * std::cos(direction), start.y + d * std::sin(direction)};
}

Point Trajectory::sample(std::size_t index) const {
  const std::size_t n = step_count();
  return position_at(duration * static_cast<double>(index) / static_cast<double>(n));
}

Trajectory sample_trajectory(const TrajectoryParams& params, std::uint64_t seed) {
  if (!(params.speed > 0.0)) throw ParameterError("trajectory speed must be > 0");
  if (!(params.duration > 0.0)) throw ParameterError("trajectory duration must be > 0");
  if (!(params.step > 0.0)) throw ParameterError("trajectory step must be > 0");
  if (params.step > params.duration) throw ParameterError("trajectory step exceeds duration");
  Rng rng(derive_seed({seed, 0x7a77ULL}));
  Trajectory t;
  t.start = params.start;
  t.direction = 2.0 * pi * rng.uniform();
  t.speed = params.speed;
  t.duration = params.duration;
  t.step = params.step;
  return t;
}

}  // namespace udngc::geometry
