#include <algorithm>
#include <cmath>
#include <numbers>

#include "udngc/analytics.hpp"
#include "udngc/core/error.hpp"

namespace udngc::analytics {

using std::numbers::pi;

double length_intensity(double r_m) {
  if (!(r_m > 0.0)) throw ParameterError("protection radius must be > 0");
  return 1.0 / r_m;
}

double area_intensity(double r_m, double delta) {
  if (!(r_m > 0.0)) throw ParameterError("protection radius must be > 0");
  if (delta < 0.0) throw ParameterError("boundary extension must be >= 0");
  if (delta >= r_m) throw ParameterError("boundary extension must be much smaller than r_M");
  return 2.0 * delta / r_m;
}

double handover_rate_radius(double speed, double r_m) {
  if (!(speed > 0.0)) throw ParameterError("speed must be > 0");
  return 2.0 / pi * speed * length_intensity(r_m);
}

double handover_rate_gcho(double speed, double density, double m) {
  if (!(speed > 0.0)) throw ParameterError("speed must be > 0");
  if (!(density > 0.0)) throw ParameterError("BS density must be > 0");
  if (!(m > 0.0)) throw ParameterError("group-cell size must be > 0");
  return 2.0 * speed * std::sqrt(density) / (std::sqrt(pi) * std::sqrt(m));
}

double handover_rate_gchos(double speed, double density, double m) {
  return 0.5 * handover_rate_gcho(speed, density, m);
}

double signaling_overhead(double mu, double t_interval, double m) {
  if (!(mu > 0.0)) throw ParameterError("mu must be > 0");
  if (!(t_interval > 0.0)) throw ParameterError("feedback interval must be > 0");
  if (m < 0.0) throw ParameterError("group-cell size must be >= 0");
  return mu / t_interval * m;
}

HandoverCost handover_cost(double t_h, double rate) {
  if (t_h < 0.0 || rate < 0.0) throw ParameterError("handover delay and rate must be >= 0");
  HandoverCost out;
  out.value = t_h * rate;
  out.saturated = out.value >= 1.0;
  return out;
}

double cost_aware_coverage(double p, bool handover_event, double d_cost) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("coverage probability must lie in [0, 1]");
  if (!(d_cost >= 0.0 && d_cost <= 1.0)) throw ParameterError("handover cost must lie in [0, 1]");
  const double e = handover_event ? 1.0 : 0.0;
  return p * e * (1.0 - d_cost) + p * (1.0 - e);
}

double ase_cost(double density, double tau, double p_tilde) {
  if (!(density > 0.0)) throw ParameterError("BS density must be > 0");
  if (!(tau > 0.0)) throw ParameterError("SIR threshold must be > 0");
  return density * std::log2(1.0 + tau) * p_tilde;
}

const char* scheme_name(Scheme s) { return s == Scheme::gcho ? "gcho" : "gchos"; }

void CostParams::validate() const {
  if (!(t_h > 0.0)) throw ParameterError("t_h must be > 0");
  if (!(s1 > 0.0)) throw ParameterError("s1 must be > 0");
  if (!(s2 > 0.0)) throw ParameterError("s2 must be > 0");
  if (!(mu > 0.0)) throw ParameterError("mu must be > 0");
  if (!(t_interval > 0.0)) throw ParameterError("t_interval must be > 0");
}

double overall_cost(Scheme scheme, const CostParams& costs, double speed, double density,
                    double m) {
  costs.validate();
  const double rate = scheme == Scheme::gcho ? handover_rate_gcho(speed, density, m)
                                             : handover_rate_gchos(speed, density, m);
  return costs.s1 * rate + costs.s2 * signaling_overhead(costs.mu, costs.t_interval, m);
}

OptimalSize optimal_cluster_size(Scheme scheme, const CostParams& costs, double speed,
                                 double density) {
  costs.validate();
  if (!(speed > 0.0)) throw ParameterError("speed must be > 0");
  if (!(density > 0.0)) throw ParameterError("BS density must be > 0");
  // d/dM [a M^-1/2 + b M] = 0  =>  M = (a / 2b)^(2/3); skipping halves a.
  const double num = costs.s1 * costs.s1 * speed * speed * costs.t_interval * costs.t_interval *
                     density;
  const double den = pi * costs.mu * costs.mu * costs.s2 * costs.s2;
  const double factor = scheme == Scheme::gcho ? 1.0 : 4.0;
  OptimalSize out;
  out.continuous = std::cbrt(num / (factor * den));

  const int lo = std::max(1, static_cast<int>(std::floor(out.continuous)));
  const int hi = std::max(1, static_cast<int>(std::ceil(out.continuous)));
  const double c_lo = overall_cost(scheme, costs, speed, density, lo);
  const double c_hi = overall_cost(scheme, costs, speed, density, hi);
  out.integer = c_hi < c_lo ? hi : lo;
  return out;
}

}  // namespace udngc::analytics
