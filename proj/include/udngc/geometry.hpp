#pragma once

// Spatial primitives: Poisson deployments, nearest-neighbour queries,
// order-statistic distance laws and straight-line UE trajectories.

#include <cstdint>
#include <span>
#include <vector>

#include "udngc/core/point.hpp"

namespace udngc::geometry {

// Circular simulation region standing in for the infinite plane.
class Window {
 public:
  Window(Point center, double radius);

  Point center() const { return center_; }
  double radius() const { return radius_; }
  double area() const;
  bool contains(Point p) const;
  // Distance from p to the window edge (negative outside).
  double clearance(Point p) const;

 private:
  Point center_;
  double radius_;
};

// Immutable realization of the BS point process. Coordinates are stored as
// separate x/y arrays so distance kernels can stream them.
class Deployment {
 public:
  Deployment(std::vector<double> xs, std::vector<double> ys, double density, Window window,
             std::uint64_t seed);

  std::size_t size() const { return xs_.size(); }
  Point point(std::size_t id) const { return {xs_[id], ys_[id]}; }
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  double density() const { return density_; }
  const Window& window() const { return window_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  double density_;
  Window window_;
  std::uint64_t seed_;
};

// Builds a deployment from explicit points (tests, hand-made geometries).
Deployment make_deployment(std::span<const Point> points, double density, Window window);

struct NeighborList {
  std::vector<std::uint32_t> ids;
  std::vector<double> distances;  // ascending; ties ordered by id

  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
};

// PPP of the given density (BS/m^2) restricted to the window. The point
// count is Poisson(density * area); positions are i.i.d. uniform.
Deployment sample_ppp(double density, const Window& window, std::uint64_t seed);

// The k nearest BSs to query, ascending by distance, ties broken by id.
NeighborList k_nearest(const Deployment& deployment, Point query, std::size_t k);

// Same selection from precomputed squared distances (one per BS id).
// `scratch` is reused across calls to avoid reallocation.
void k_nearest_from_squared(std::span<const double> squared, std::size_t k, NeighborList& out,
                            std::vector<std::uint32_t>& scratch);

// Density of the distance to the M-th nearest point of a PPP:
// 2 (pi lambda)^M / Gamma(M) * exp(-lambda pi r^2) * r^(2M-1).
double kth_distance_pdf(double r, int m, double density);
// Matching CDF, P(M, pi lambda r^2) (regularized lower incomplete gamma).
double kth_distance_cdf(double r, int m, double density);

// Distance law of the cell-edge UE to its cooperating BSs, used as the
// outer weight of the coverage integral: 2 (pi lambda)^2 R^3 exp(-pi lambda R^2).
// Algebraically identical to kth_distance_pdf with M = 2.
double edge_distance_pdf(double r, double density);

struct TrajectoryParams {
  Point start;
  double speed = 0.0;     // m/s
  double duration = 0.0;  // s
  double step = 0.0;      // s
};

// Straight segment walked at constant speed, sampled every `step` seconds.
struct Trajectory {
  Point start;
  double direction = 0.0;  // rad, [0, 2 pi)
  double speed = 0.0;
  double duration = 0.0;
  double step = 0.0;

  double length() const { return speed * duration; }
  // Number of sampling intervals; the last sample lands exactly at `duration`.
  std::size_t step_count() const;
  Point position_at(double t) const;
  Point sample(std::size_t index) const;
};

Trajectory sample_trajectory(const TrajectoryParams& params, std::uint64_t seed);

}  // namespace udngc::geometry
