#include "udngc/harness/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "udngc/core/error.hpp"

namespace udngc::harness {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  // snprintf honours the C locale, which always uses '.'.
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    if (!r.analytic && !r.simulated) {
      throw std::invalid_argument("row " + r.metric + " has neither analytic nor simulated value");
    }
    out << field(r.parameter) << ',' << format_number(r.value) << ',' << field(r.metric) << ','
        << opt(r.analytic) << ',' << opt(r.simulated) << ',' << opt(r.ci95) << ','
        << (r.trials ? std::to_string(*r.trials) : std::string()) << ',' << opt(r.runtime_ms)
        << '\n';
  }
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  write_csv(out, rows);
  if (!out) throw ConfigError("write failed for '" + path + "'");
}

}  // namespace udngc::harness
