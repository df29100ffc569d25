#pragma once

// Consistency suite for one scenario: closed forms against each other and
// against the Monte Carlo engine, plus optional golden values.
//
// Golden files hold `name=value` lines ('#' comments). A name is either a
// scenario key (checked against the configured scenario) or a metric of the
// analytic report (relative tolerance 1e-6).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udngc/harness/config.hpp"

namespace udngc::harness {

struct CheckResult {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidateOptions {
  unsigned threads = 0;
  std::optional<std::string> golden_path;
};

// Names of the built-in checks, in report order.
const std::vector<std::string>& registered_checks();

// Numerical failures are rethrown as NumericalError prefixed with the check name.
std::vector<CheckResult> run_validation(const ScenarioParams& scenario, const ValidateOptions& options);

std::vector<CheckResult> golden_checks(const ScenarioParams& scenario, const std::string& path);

void write_report(std::ostream& out, const std::vector<CheckResult>& checks);
bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace udngc::harness
