#pragma once

// Dual-slope path loss, Rayleigh fading and the SIR seen by a UE served
// jointly by its M nearest BSs. Interference-limited: no noise term.

#include <cstdint>
#include <span>

#include "udngc/core/point.hpp"
#include "udngc/geometry.hpp"

namespace udngc::channel {

struct PathLossParams {
  double eta1 = 2.0;         // exponent inside the critical distance (LoS)
  double eta2 = 4.0;         // exponent beyond it (NLoS)
  double d_critical = 10.0;  // m

  // Continuity constant D^(eta2 - eta1).
  double continuity() const;
  // Throws ParameterError unless 0 <= eta1 <= eta2 and D > 0.
  void validate() const;
};

// r^-eta1 for r <= D, D^(eta2-eta1) r^-eta2 beyond. r must be > 0.
double path_loss(double r, const PathLossParams& params);
// NLoS branch used for every interferer: D^(eta2-eta1) r^-eta2.
double nlos_path_loss(double r, const PathLossParams& params);

struct SirSample {
  double signal = 0.0;
  double interference = 0.0;
  double sir = 0.0;
};

// Unit-mean exponential gain of BS `bs_id` for a given fading seed. Drawn
// from a counter-based stream, so the value does not depend on which other
// BSs were evaluated first.
double fading_gain(std::uint64_t fading_seed, std::uint32_t bs_id);

// Cooperators use the branch matching their own distance; interferers use
// the NLoS branch.
SirSample sir_exact(const geometry::Deployment& deployment, Point ue, std::size_t m,
                    const PathLossParams& params, std::uint64_t fading_seed);
// Every cooperator is treated as a LoS link (r^-eta1) regardless of distance.
SirSample sir_approx(const geometry::Deployment& deployment, Point ue, std::size_t m,
                     const PathLossParams& params, std::uint64_t fading_seed);

// Variants taking one explicit gain per BS id (gains.size() == deployment.size()).
SirSample sir_exact(const geometry::Deployment& deployment, Point ue, std::size_t m,
                    const PathLossParams& params, std::span<const double> gains);
SirSample sir_approx(const geometry::Deployment& deployment, Point ue, std::size_t m,
                     const PathLossParams& params, std::span<const double> gains);

}  // namespace udngc::channel
