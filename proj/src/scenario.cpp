#include "udngc/scenario.hpp"

#include <cmath>
#include <string>

#include "udngc/core/error.hpp"

namespace udngc {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

namespace {

void require(bool ok, const char* field, const char* bound) {
  if (!ok) throw ParameterError(std::string(field) + " must be " + bound);
}

}  // namespace

void ScenarioParams::validate() const {
  require(lambda_bs > 0.0, "lambda_bs", "> 0");
  require(eta1 >= 0.0, "eta1", ">= 0");
  if (!(eta1 <= eta2)) throw ParameterError("eta1 <= eta2 violated");
  require(d_critical > 0.0, "d_critical", "> 0");
  require(speed > 0.0, "speed", "> 0");
  require(m_group >= 1, "m_group", ">= 1");
  require(std::isfinite(tau_db), "tau_db", "finite");
  require(t_h > 0.0, "t_h", "> 0");
  require(mu > 0.0, "mu", "> 0");
  require(t_interval > 0.0, "t_interval", "> 0");
  require(s1 > 0.0, "s1", "> 0");
  require(s2 > 0.0, "s2", "> 0");
  require(trials >= 1, "trials", ">= 1");
  require(window_radius >= 0.0, "window_radius", ">= 0 (0 = auto)");
  require(step >= 0.0, "step", ">= 0 (0 = auto)");
}

analytics::CoverageParams ScenarioParams::coverage() const {
  analytics::CoverageParams p;
  p.tau = tau_linear();
  p.density = lambda_bs;
  p.m = m_group;
  p.pathloss = pathloss();
  return p;
}

}  // namespace udngc
