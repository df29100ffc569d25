#include "udngc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include "udngc/core/error.hpp"
#include "udngc/core/random.hpp"
#include "udngc/simd/kernels.hpp"

namespace udngc::sim {

using std::numbers::pi;

namespace {

// Number of ids in `now` that are absent from `before` (group-cells are small,
// so a quadratic scan beats sorting).
std::size_t count_new(std::span<const std::uint32_t> now, std::span<const std::uint32_t> before) {
  std::size_t n = 0;
  for (auto id : now) {
    if (std::find(before.begin(), before.end(), id) == before.end()) ++n;
  }
  return n;
}

bool same_set(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return a.size() == b.size() && count_new(a, b) == 0;
}

constexpr std::uint32_t kMaxRedraws = 64;

}  // namespace

unsigned resolve_threads(unsigned threads) {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

GroupCellState initial_state(const geometry::Deployment& deployment, Point ue, std::size_t m) {
  GroupCellState s;
  s.members = geometry::k_nearest(deployment, ue, m);
  s.r_m = s.members.distances.back();
  return s;
}

StepOutcome gcho_step(const GroupCellState& state, const geometry::Deployment& deployment,
                      Point ue) {
  if (state.members.empty()) throw ParameterError("group-cell state has no members");
  StepOutcome out;
  out.state = state;
  out.state.members = geometry::k_nearest(deployment, ue, state.members.size());
  out.state.r_m = out.state.members.distances.back();
  out.replaced = count_new(out.state.members.ids, state.members.ids);
  out.handover = out.replaced > 0;
  return out;
}

SkipDecision gchos_decision(double r_m, double r1_i, double r2_i, bool skip_done) {
  const bool skip = r1_i < r_m && r2_i <= 2.0 * r1_i && !skip_done;
  return skip ? SkipDecision::skip : SkipDecision::handover;
}

const char* policy_name(Policy p) {
  switch (p) {
    case Policy::traditional: return "traditional";
    case Policy::gcho: return "gcho";
    case Policy::gchos: return "gchos";
    case Policy::fixed_region: return "fr_baseline_disk";
  }
  return "?";
}

std::uint64_t TrialResult::count(Policy p) const {
  switch (p) {
    case Policy::traditional: return handovers_traditional;
    case Policy::gcho: return handovers_gcho;
    case Policy::gchos: return handovers_gchos;
    case Policy::fixed_region: return handovers_fr;
  }
  return 0;
}

const RateEstimate& RateEstimates::get(Policy p) const {
  switch (p) {
    case Policy::traditional: return traditional;
    case Policy::gcho: return gcho;
    case Policy::gchos: return gchos;
    case Policy::fixed_region: return fixed_region;
  }
  return gcho;
}

TrialGeometry trial_geometry(const ScenarioParams& scenario) {
  scenario.validate();
  const double unit = 1.0 / std::sqrt(pi * scenario.lambda_bs);  // typical cell radius
  TrialGeometry g;
  g.trajectory_length = 20.0 * unit;
  // Keep the M+3 nearest neighbours of every trajectory point inside the window.
  g.guard = std::max(3.0, 2.0 * std::sqrt(scenario.m_group + 2.0)) * unit;
  const double needed = 0.5 * g.trajectory_length + g.guard;
  if (scenario.window_radius == 0.0) {
    g.window_radius = needed;
  } else if (scenario.window_radius < needed) {
    std::ostringstream msg;
    msg << "window_radius must be >= " << needed << " m (trajectory half-length + guard band)";
    throw ParameterError(msg.str());
  } else {
    g.window_radius = scenario.window_radius;
  }
  const double max_step = 0.1 * unit / scenario.speed;
  if (scenario.step == 0.0) {
    g.step = 0.025 * unit / scenario.speed;
  } else if (scenario.step > max_step) {
    std::ostringstream msg;
    msg << "step must be <= " << max_step << " s (10 samples per cell transit)";
    throw ParameterError(msg.str());
  } else {
    g.step = scenario.step;
  }
  return g;
}

TrialResult run_handover_trial(const ScenarioParams& scenario, std::uint64_t seed) {
  const TrialGeometry geo = trial_geometry(scenario);
  const auto m = static_cast<std::size_t>(scenario.m_group);
  const std::size_t k = m + 3;
  const geometry::Window window({0.0, 0.0}, geo.window_radius);

  TrialResult result;
  std::uint32_t attempt = 0;
  for (;; ++attempt) {
    if (attempt >= kMaxRedraws) {
      throw NumericalError("could not draw a deployment with enough BSs for the trajectory");
    }
    auto deployment = geometry::sample_ppp(scenario.lambda_bs, window, derive_seed({seed, attempt, 1}));
    if (deployment.size() < k) continue;  // rejected, redrawn below

    Rng rng(derive_seed({seed, attempt, 2}));
    geometry::Trajectory traj;
    traj.direction = 2.0 * pi * rng.uniform();
    traj.start = {-0.5 * geo.trajectory_length * std::cos(traj.direction),
                  -0.5 * geo.trajectory_length * std::sin(traj.direction)};
    traj.speed = scenario.speed;
    traj.duration = geo.trajectory_length / scenario.speed;
    traj.step = geo.step;

    const std::size_t n = deployment.size();
    std::vector<double> d2(n);
    geometry::NeighborList near;
    std::vector<std::uint32_t> scratch;
    std::vector<std::uint32_t> true_set(m), prev_true(m), served(m);
    std::vector<std::uint32_t> disk, prev_disk;
    std::optional<std::uint32_t> blacklisted;
    bool skip_done = false;
    std::uint32_t prev_nearest = 0;
    const double fr_r2 = scenario.m_group / (pi * scenario.lambda_bs);

    const std::size_t steps = traj.step_count();
    for (std::size_t i = 0; i <= steps; ++i) {
      const Point p = traj.sample(i);
      simd::squared_distances(deployment.xs(), deployment.ys(), p.x, p.y, d2);
      geometry::k_nearest_from_squared(d2, k, near, scratch);
      std::copy_n(near.ids.begin(), m, true_set.begin());
      disk.clear();
      simd::select_within(d2, fr_r2, disk);

      if (i == 0) {
        prev_nearest = near.ids[0];
        prev_true = true_set;
        served = true_set;
        prev_disk = disk;
        continue;
      }

      if (near.ids[0] != prev_nearest) ++result.handovers_traditional;
      prev_nearest = near.ids[0];

      if (disk != prev_disk) ++result.handovers_fr;
      std::swap(disk, prev_disk);

      const std::size_t replaced = count_new(true_set, prev_true);
      prev_true = true_set;
      if (replaced == 0) continue;
      result.handovers_gcho += replaced;

      // Boundary crossing: decide between skipping and handing over.
      if (same_set(served, true_set)) {
        blacklisted.reset();  // the skipped BS left on its own; nothing to execute
        continue;
      }
      double served_r2 = 0.0;
      for (auto id : served) served_r2 = std::max(served_r2, d2[id]);
      double r_i[2] = {0.0, 0.0};
      std::uint32_t first_outsider = 0;
      std::size_t found = 0;
      for (std::size_t j = 0; j < near.size() && found < 2; ++j) {
        const auto id = near.ids[j];
        if (std::find(served.begin(), served.end(), id) != served.end()) continue;
        if (found == 0) first_outsider = id;
        r_i[found++] = near.distances[j];
      }
      if (found < 2) throw NumericalError("fewer than two non-serving BSs in the neighbour list");

      if (gchos_decision(std::sqrt(served_r2), r_i[0], r_i[1], skip_done) == SkipDecision::skip) {
        skip_done = true;
        blacklisted = first_outsider;
        served.clear();
        for (std::size_t j = 0; j < near.size() && served.size() < m; ++j) {
          if (near.ids[j] != *blacklisted) served.push_back(near.ids[j]);
        }
      } else {
        ++result.handovers_gchos;
        skip_done = false;
        blacklisted.reset();
        served = true_set;
      }
    }
    result.duration = traj.duration;
    result.trajectory_length = traj.length();
    break;
  }
  result.rejected = attempt;
  return result;
}

RateEstimates estimate_handover_rates(const ScenarioParams& scenario, std::uint64_t trials,
                                      std::uint64_t base_seed, unsigned threads) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  trial_geometry(scenario);  // validate once up front
  std::vector<TrialResult> results(trials);
  parallel_for(trials, threads, [&](std::uint64_t i) {
    results[i] = run_handover_trial(scenario, derive_seed({base_seed, i}));
  });

  RateEstimates out;
  double total_time = 0.0;
  for (const auto& r : results) {
    total_time += r.duration;
    out.total_gcho += r.handovers_gcho;
    out.total_gchos += r.handovers_gchos;
    out.rejected += r.rejected;
  }
  auto summarize = [&](Policy p) {
    RateEstimate e;
    e.trials = trials;
    std::uint64_t total = 0;
    double mean = 0.0, m2 = 0.0;
    std::uint64_t n = 0;
    for (const auto& r : results) {
      total += r.count(p);
      const double rate = static_cast<double>(r.count(p)) / r.duration;
      ++n;
      const double delta = rate - mean;
      mean += delta / static_cast<double>(n);
      m2 += delta * (rate - mean);
    }
    e.mean = static_cast<double>(total) / total_time;
    if (n > 1) e.half_width_95 = 1.96 * std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
    return e;
  };
  out.traditional = summarize(Policy::traditional);
  out.gcho = summarize(Policy::gcho);
  out.gchos = summarize(Policy::gchos);
  out.fixed_region = summarize(Policy::fixed_region);
  return out;
}

RateEstimate estimate_handover_rate(const ScenarioParams& scenario, std::uint64_t trials,
                                    std::uint64_t base_seed, Policy policy, unsigned threads) {
  return estimate_handover_rates(scenario, trials, base_seed, threads).get(policy);
}

}  // namespace udngc::sim
