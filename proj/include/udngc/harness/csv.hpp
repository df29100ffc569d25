#pragma once

// Sweep output: one row per (parameter value, metric). Numbers are written
// with 12 significant digits, '.' decimal point and LF line endings, so the
// same rows always serialize to the same bytes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace udngc::harness {

struct SweepRow {
  std::string parameter;
  double value = 0.0;
  std::string metric;
  std::optional<double> analytic;
  std::optional<double> simulated;
  std::optional<double> ci95;
  std::optional<std::uint64_t> trials;
  std::optional<double> runtime_ms;
};

inline constexpr const char* kCsvHeader =
    "parameter,value,metric,analytic,simulated,ci95,trials,runtime_ms";

std::string format_number(double v);
// Throws std::invalid_argument when a row has neither an analytic nor a
// simulated value.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<SweepRow>& rows);
void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace udngc::harness
