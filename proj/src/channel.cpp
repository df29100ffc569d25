#include "udngc/channel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "udngc/core/error.hpp"
#include "udngc/core/random.hpp"
#include "udngc/simd/kernels.hpp"

namespace udngc::channel {

double PathLossParams::continuity() const { return std::pow(d_critical, eta2 - eta1); }

void PathLossParams::validate() const {
  if (!(eta1 >= 0.0)) throw ParameterError("eta1 must be >= 0");
  if (!(eta1 <= eta2)) throw ParameterError("eta1 <= eta2 violated");
  if (!(d_critical > 0.0)) throw ParameterError("critical distance must be > 0");
}

double path_loss(double r, const PathLossParams& params) {
  if (!(r > 0.0)) throw ParameterError("path loss is singular at r = 0");
  if (r <= params.d_critical) return std::pow(r, -params.eta1);
  return params.continuity() * std::pow(r, -params.eta2);
}

double nlos_path_loss(double r, const PathLossParams& params) {
  if (!(r > 0.0)) throw ParameterError("path loss is singular at r = 0");
  return params.continuity() * std::pow(r, -params.eta2);
}

double fading_gain(std::uint64_t fading_seed, std::uint32_t bs_id) {
  Rng rng(derive_seed({fading_seed, bs_id}));
  return rng.exponential();
}

namespace {

SirSample evaluate(const geometry::Deployment& deployment, Point ue, std::size_t m,
                   const PathLossParams& params, std::span<const double> gains,
                   bool cooperators_los) {
  params.validate();
  const std::size_t n = deployment.size();
  if (n <= m) {
    throw InsufficientPointsError("SIR needs more than " + std::to_string(m) +
                                  " BSs, deployment has " + std::to_string(n));
  }
  if (gains.size() != n) throw ParameterError("one fading gain per BS required");

  std::vector<double> squared(n);
  simd::squared_distances(deployment.xs(), deployment.ys(), ue.x, ue.y, squared);
  geometry::NeighborList members;
  std::vector<std::uint32_t> scratch;
  geometry::k_nearest_from_squared(squared, m, members, scratch);

  SirSample out;
  std::vector<bool> is_member(n, false);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint32_t id = members.ids[i];
    is_member[id] = true;
    const double r = members.distances[i];
    if (!(r > 0.0)) throw ParameterError("path loss is singular at r = 0");
    const double loss = cooperators_los ? std::pow(r, -params.eta1) : path_loss(r, params);
    out.signal += loss * gains[id];
  }

  std::vector<double> r2;
  std::vector<double> g;
  r2.reserve(n - m);
  g.reserve(n - m);
  for (std::size_t id = 0; id < n; ++id) {
    if (is_member[id]) continue;
    if (!(squared[id] > 0.0)) throw ParameterError("path loss is singular at r = 0");
    r2.push_back(squared[id]);
    g.push_back(gains[id]);
  }
  out.interference = simd::interference_sum(r2, g, params.continuity(), params.eta2);
  out.sir = out.signal / out.interference;
  return out;
}

std::vector<double> draw_gains(std::size_t n, std::uint64_t fading_seed) {
  std::vector<double> gains(n);
  for (std::size_t id = 0; id < n; ++id) gains[id] = fading_gain(fading_seed, static_cast<std::uint32_t>(id));
  return gains;
}

}  // namespace

SirSample sir_exact(const geometry::Deployment& deployment, Point ue, std::size_t m,
                    const PathLossParams& params, std::span<const double> gains) {
  return evaluate(deployment, ue, m, params, gains, false);
}

SirSample sir_approx(const geometry::Deployment& deployment, Point ue, std::size_t m,
                     const PathLossParams& params, std::span<const double> gains) {
  return evaluate(deployment, ue, m, params, gains, true);
}

SirSample sir_exact(const geometry::Deployment& deployment, Point ue, std::size_t m,
                    const PathLossParams& params, std::uint64_t fading_seed) {
  return sir_exact(deployment, ue, m, params, draw_gains(deployment.size(), fading_seed));
}

SirSample sir_approx(const geometry::Deployment& deployment, Point ue, std::size_t m,
                     const PathLossParams& params, std::uint64_t fading_seed) {
  return sir_approx(deployment, ue, m, params, draw_gains(deployment.size(), fading_seed));
}

}  // namespace udngc::channel
