#pragma once

// Figure presets and the single-scenario reports behind `analytic` and
// `simulate`. Each preset is a parameter grid; overrides replace base
// scenario keys, and overriding a swept key collapses that grid axis to the
// given value.

#include <string>
#include <vector>

#include "udngc/harness/config.hpp"
#include "udngc/harness/csv.hpp"

namespace udngc::harness {

struct RunOptions {
  unsigned threads = 0;  // 0 = hardware count; 1 = bit-exact (runtime column left empty)
  KeyValues overrides;
};

const std::vector<std::string>& figure_presets();
// Throws ConfigError for an unknown preset.
std::vector<SweepRow> run_figure(const std::string& preset, const RunOptions& options);

// Closed-form metrics of one scenario.
std::vector<SweepRow> analytic_report(const ScenarioParams& scenario);
// Simulated handover rates and oracle coverage beside their closed forms.
std::vector<SweepRow> simulate_report(const ScenarioParams& scenario, unsigned threads);

}  // namespace udngc::harness
