#pragma once

// Closed-form results: handover rates from boundary intensities, cooperation
// overhead and costs, cost-aware coverage/ASE, the optimal group-cell size,
// and the dual-slope coverage probability with its Laplace-derivative
// recursion.

#include <cstdint>
#include <vector>

#include "udngc/channel.hpp"

namespace udngc::analytics {

// ---------------------------------------------------------------------------
// Handover rates

// Length intensity of the group-cell boundary, 1 / r_M.
double length_intensity(double r_m);
// Leading term 2 delta / r_M of the boundary-neighbourhood area intensity.
// The O(delta^2) remainder is not modelled; delta >= r_M is out of regime.
double area_intensity(double r_m, double delta);
// 2 Psi / (pi r_M).
double handover_rate_radius(double speed, double r_m);
// 2 Psi sqrt(lambda) / (sqrt(pi) sqrt(M)); M = 1 is the single-BS baseline.
double handover_rate_gcho(double speed, double density, double m);
// Skipping halves the group-cell handover rate.
double handover_rate_gchos(double speed, double density, double m);

// CSI feedback messages per second for M cooperating BSs: (mu / T) M.
double signaling_overhead(double mu, double t_interval, double m);

struct HandoverCost {
  double value = 0.0;      // t_H * H, fraction of time spent in handover
  bool saturated = false;  // value >= 1: the scenario spends all its time handing over
};
HandoverCost handover_cost(double t_h, double rate);

// p (1 - d_cost) for a moving UE (handover_event = true), p otherwise.
double cost_aware_coverage(double p, bool handover_event, double d_cost);
// lambda log2(1 + tau) p_tilde, tau linear.
double ase_cost(double density, double tau, double p_tilde);

enum class Scheme { gcho, gchos };
const char* scheme_name(Scheme s);

struct CostParams {
  double t_h = 0.3;            // s per handover
  double s1 = 0.3;             // cost per handoff (= t_h)
  double s2 = 0.01 * 0.005;    // cost per CSI message
  double mu = 1.0;             // messages per BS per interval
  double t_interval = 0.005;   // feedback interval T, s

  void validate() const;
};

double overall_cost(Scheme scheme, const CostParams& costs, double speed, double density,
                    double m);

struct OptimalSize {
  double continuous = 0.0;  // stationary point of the cost
  int integer = 1;          // better of floor/ceil, never below 1
};
OptimalSize optimal_cluster_size(Scheme scheme, const CostParams& costs, double speed,
                                 double density);

// ---------------------------------------------------------------------------
// Coverage probability

// Switches reproducing two typeset forms of the coverage expression for
// comparison. Defaults give the derivation-consistent evaluation.
struct PrintedForm {
  // Use R^-eta1 instead of R^+eta1 in the Laplace argument s = tau R^eta1.
  bool negative_r_exponent = false;
  // Multiply every recursion term by the extra D^-(eta2-eta1)(n-i) factor.
  bool continuity_in_recursion = false;
};

struct CoverageParams {
  double tau = 1.0;      // SIR threshold, linear
  double density = 0.0;  // lambda_BS
  int m = 3;             // group-cell size
  channel::PathLossParams pathloss;
  double quad_tol = 1e-8;
  PrintedForm form;

  void validate() const;
};

// Inner integral of order i at lower limit theta:
//   i = 0:  int_theta^inf 1 / (1 + u^(eta2/2)) du
//   i >= 1: int_theta^inf 1 / ((1 + u^(eta2/2))^i (1 + u^(-eta2/2))) du
// eta2 = 4, i = 0 returns pi/2 - atan(theta) directly.
double k_integral(int i, double theta, double eta2, double rel_tol = 1e-8);
// Always integrates numerically (no closed-form shortcut).
double k_integral_quadrature(int i, double theta, double eta2, double rel_tol = 1e-8);

// Laplace transform of the aggregate NLoS interference from a PPP of
// interferers outside radius R: exp(-pi lambda (s Lambda)^(2/eta2) k_0(theta))
// with theta = R^2 / (s Lambda)^(2/eta2).
double laplace_interference(double s, double density, double r,
                            const channel::PathLossParams& pathloss, double rel_tol = 1e-8);

// Per-distance state of the coverage recursion.
struct ToeplitzState {
  std::vector<double> k_values;  // k_1 .. k_{M-1}
  std::vector<double> a_values;  // a_0 .. a_{M-1}
  double b0 = 0.0;
  double theta = 0.0;

  // A_{M-1} = a_1 + ... + a_{M-1}.
  double tail_sum() const;
};

ToeplitzState toeplitz_state(double r, const CoverageParams& params);

// Three independent evaluations of a_0..a_{M-1} from a_0, b_0 and k_1..k_{M-1}
// (k_values[j] holds k_{j+1}). `term_scale` multiplies k_j by term_scale^j
// (1 for the derivation-consistent recursion).
//
// Direct recursion: a_n = b_0 sum_{i<n} (n-i)/n k_{n-i} a_i.
std::vector<double> a_values_recursive(double a0, double b0, const std::vector<double>& k_values,
                                       int m, double term_scale = 1.0);
// Matrix form: a = a_0 e_0 + b_0 F a solved as a_0 sum_p (b_0 F)^p e_0, with F
// the strictly lower-triangular matrix F[n][i] = (n-i)/n k_{n-i}.
std::vector<double> a_values_matrix(double a0, double b0, const std::vector<double>& k_values,
                                    int m, double term_scale = 1.0);
// Lower-triangular Toeplitz exponential: a / a_0 is the first column of
// exp(T), T[n][i] = b_0 k_{n-i}.
std::vector<double> a_values_toeplitz_exp(double a0, double b0,
                                          const std::vector<double>& k_values, int m,
                                          double term_scale = 1.0);

// The M x M matrix F used by a_values_matrix (row-major).
std::vector<std::vector<double>> recursion_matrix(const std::vector<double>& k_values, int m,
                                                  double term_scale = 1.0);

struct CoverageResult {
  double probability = 0.0;
  double abs_error = 0.0;
  bool clamped = false;
};

// Coverage of the cell-edge UE: int f_R(R) (a_0 + A_{M-1}) dR, with f_R the
// edge-distance law for M >= 2 and the nearest-distance law for M = 1.
CoverageResult evaluate_coverage(const CoverageParams& params);
double coverage_probability(const CoverageParams& params);

// Number of coverage results clamped into [0, 1] since process start.
std::uint64_t clamp_warning_count();

}  // namespace udngc::analytics
