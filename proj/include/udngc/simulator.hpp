#pragma once

// Monte Carlo engine: drops a PPP, walks the UE along a straight line and
// counts handovers under four policies on the same geometry, plus the
// brute-force coverage oracles used to check the closed forms.

#include <cstdint>
#include <optional>

#include "udngc/analytics.hpp"
#include "udngc/geometry.hpp"
#include "udngc/scenario.hpp"

namespace udngc::sim {

// Serving group-cell: members ascending by distance, r_M the farthest.
struct GroupCellState {
  geometry::NeighborList members;
  double r_m = 0.0;
  bool skip_done = false;
  // BS passed over by the last skip; excluded until the next executed handover.
  std::optional<std::uint32_t> blacklisted;
};

GroupCellState initial_state(const geometry::Deployment& deployment, Point ue, std::size_t m);

struct StepOutcome {
  GroupCellState state;
  bool handover = false;
  // Members replaced by this step (0 when no handover).
  std::size_t replaced = 0;
};

// Recomputes the M-nearest set at `ue`. A handover occurs iff the set (not
// its order) changed; distances and r_M are always refreshed.
StepOutcome gcho_step(const GroupCellState& state, const geometry::Deployment& deployment,
                      Point ue);

enum class SkipDecision { skip, handover };

// Handover skipping rule, evaluated at a group-cell boundary crossing.
SkipDecision gchos_decision(double r_m, double r1_i, double r2_i, bool skip_done);

enum class Policy { traditional, gcho, gchos, fixed_region };
const char* policy_name(Policy p);

struct TrialResult {
  std::uint64_t handovers_gcho = 0;
  std::uint64_t handovers_gchos = 0;
  std::uint64_t handovers_traditional = 0;
  std::uint64_t handovers_fr = 0;
  double duration = 0.0;           // s
  double trajectory_length = 0.0;  // m
  std::uint32_t rejected = 0;      // deployments redrawn before this one was usable

  std::uint64_t count(Policy p) const;
};

// Geometry actually used by a handover trial (auto-sized where the scenario
// leaves window_radius / step at 0).
struct TrialGeometry {
  double trajectory_length = 0.0;
  double guard = 0.0;
  double window_radius = 0.0;
  double step = 0.0;  // s
};
TrialGeometry trial_geometry(const ScenarioParams& scenario);

TrialResult run_handover_trial(const ScenarioParams& scenario, std::uint64_t seed);

struct RateEstimate {
  double mean = 0.0;           // total handovers / total time, 1/s
  double half_width_95 = 0.0;  // 1.96 sd(per-trial rate) / sqrt(n)
  std::uint64_t trials = 0;
};

struct RateEstimates {
  RateEstimate traditional;
  RateEstimate gcho;
  RateEstimate gchos;
  RateEstimate fixed_region;
  std::uint64_t total_gcho = 0;
  std::uint64_t total_gchos = 0;
  std::uint64_t rejected = 0;

  const RateEstimate& get(Policy p) const;
};

// Trial i uses seed derive_seed(base_seed, i); totals are integer sums taken
// in trial order, so results do not depend on `threads` (0 = hardware count).
RateEstimates estimate_handover_rates(const ScenarioParams& scenario, std::uint64_t trials,
                                      std::uint64_t base_seed, unsigned threads = 0);
RateEstimate estimate_handover_rate(const ScenarioParams& scenario, std::uint64_t trials,
                                    std::uint64_t base_seed, Policy policy = Policy::gcho,
                                    unsigned threads = 0);

// Cell-edge model of the coverage analysis sampled directly: common
// cooperator distance R from the edge-distance law (nearest-distance law for
// M = 1), PPP interferers outside R, unit-mean exponential fading, LoS
// cooperators and NLoS interferers. Returns the fraction with SIR > tau.
double coverage_oracle_model(const analytics::CoverageParams& params, std::uint64_t trials,
                             std::uint64_t seed, unsigned threads = 0);

// Full geometry: PPP around a UE at the window centre, M nearest cooperate,
// each link on its own path-loss branch.
double coverage_oracle_geometric(const ScenarioParams& scenario, std::uint64_t trials,
                                 std::uint64_t seed, unsigned threads = 0);

// Runs body(i) for i in [0, n) on up to `threads` workers (0 = hardware
// count). Work is split into contiguous chunks; body must only write its own
// slot of any shared output.
template <class Body>
void parallel_for(std::uint64_t n, unsigned threads, Body body);

unsigned resolve_threads(unsigned threads);

}  // namespace udngc::sim

#include "udngc/detail/parallel_for.hpp"
