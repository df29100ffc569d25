#pragma once

// One evaluation point: deployment, channel, mobility and cost parameters.
// SIR thresholds are carried in dB here; this is the only place
// they are converted (tau_linear), everything downstream is linear.

#include <cstdint>

#include "udngc/analytics.hpp"
#include "udngc/channel.hpp"

namespace udngc {

double db_to_linear(double db);
double linear_to_db(double linear);

struct ScenarioParams {
  double lambda_bs = 0.0;      // BS/m^2, no default: must be given
  double eta1 = 2.0;
  double eta2 = 4.0;
  double d_critical = 10.0;    // m
  double speed = 10.0;         // m/s
  int m_group = 3;
  double tau_db = 0.0;
  double t_h = 0.3;            // s
  double mu = 1.0;
  double t_interval = 0.005;   // s
  double s1 = 0.3;             // s
  double s2 = 0.01 * 0.005;    // s
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  double window_radius = 0.0;  // m, 0 = sized automatically
  double step = 0.0;           // s, 0 = chosen automatically

  // Throws ParameterError naming the offending field and bound.
  void validate() const;

  double tau_linear() const { return db_to_linear(tau_db); }
  channel::PathLossParams pathloss() const { return {eta1, eta2, d_critical}; }
  analytics::CostParams costs() const { return {t_h, s1, s2, mu, t_interval}; }
  analytics::CoverageParams coverage() const;
};

}  // namespace udngc
