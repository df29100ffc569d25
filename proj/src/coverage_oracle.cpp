#include <cmath>
#include <numbers>
#include <vector>

#include "udngc/channel.hpp"
#include "udngc/core/error.hpp"
#include "udngc/core/random.hpp"
#include "udngc/simd/kernels.hpp"
#include "udngc/simulator.hpp"

namespace udngc::sim {

using std::numbers::pi;

namespace {

constexpr std::uint64_t kBlock = 4096;

// Mean NLoS interference from a PPP beyond radius rho; replaces the far field
// the samplers do not draw explicitly.
double far_field(double density, double rho2, const channel::PathLossParams& pl) {
  return 2.0 * pi * density * pl.continuity() * std::pow(rho2, 1.0 - 0.5 * pl.eta2) /
         (pl.eta2 - 2.0);
}

// Trials are grouped in fixed blocks seeded by block index, so the count is
// the same for any number of workers.
template <class Trial>
double blocked_fraction(std::uint64_t trials, std::uint64_t seed, unsigned threads, Trial trial) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  parallel_for(blocks, threads, [&](std::uint64_t b) {
    Rng rng(derive_seed({seed, b}));
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(trials, begin + kBlock);
    std::uint64_t h = 0;
    for (std::uint64_t i = begin; i < end; ++i) h += trial(rng, i) ? 1 : 0;
    hits[b] = h;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return static_cast<double>(total) / static_cast<double>(trials);
}

}  // namespace

double coverage_oracle_model(const analytics::CoverageParams& params, std::uint64_t trials,
                             std::uint64_t seed, unsigned threads) {
  params.validate();
  const auto& pl = params.pathloss;
  if (!(pl.eta2 > 2.0)) throw NumericalError("interference diverges for eta2 <= 2");
  const double lambda = params.density;
  const double lambda_pi = pi * lambda;
  const int distance_shape = params.m >= 2 ? 2 : 1;
  // Interferers drawn explicitly in an annulus holding this many on average.
  constexpr double kNear = 128.0;
  const double annulus = kNear / lambda_pi;

  return blocked_fraction(trials, seed, threads, [&](Rng& rng, std::uint64_t) {
    thread_local std::vector<double> r2;
    thread_local std::vector<double> gains;
    const double edge2 = rng.gamma_int(distance_shape) / lambda_pi;
    const double signal = rng.gamma_int(params.m) * std::pow(edge2, -0.5 * pl.eta1);
    const auto count = static_cast<std::size_t>(rng.poisson(kNear));
    r2.resize(count);
    gains.resize(count);
    for (std::size_t j = 0; j < count; ++j) {
      r2[j] = edge2 + rng.uniform() * annulus;
      gains[j] = rng.exponential();
    }
    double interference = simd::interference_sum(r2, gains, pl.continuity(), pl.eta2);
    interference += far_field(lambda, edge2 + annulus, pl);
    return signal > params.tau * interference;
  });
}

double coverage_oracle_geometric(const ScenarioParams& scenario, std::uint64_t trials,
                                 std::uint64_t seed, unsigned threads) {
  scenario.validate();
  const auto pl = scenario.pathloss();
  if (!(pl.eta2 > 2.0)) throw NumericalError("interference diverges for eta2 <= 2");
  const double unit = 1.0 / std::sqrt(pi * scenario.lambda_bs);
  const double radius = std::max(30.0 * unit, 3.0 * pl.d_critical);
  const geometry::Window window({0.0, 0.0}, radius);
  const double tail = far_field(scenario.lambda_bs, radius * radius, pl);
  const double tau = scenario.tau_linear();
  const auto m = static_cast<std::size_t>(scenario.m_group);

  return blocked_fraction(trials, seed, threads, [&](Rng&, std::uint64_t i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      const auto dep = geometry::sample_ppp(scenario.lambda_bs, window, derive_seed({seed, i, attempt, 1}));
      if (dep.size() <= m) continue;
      const auto s = channel::sir_exact(dep, {0.0, 0.0}, m, pl, derive_seed({seed, i, attempt, 2}));
      return s.signal > tau * (s.interference + tail);
    }
  });
}

}  // namespace udngc::sim
