// udngc: closed forms, simulations, figure sweeps and validation reports for
// group-cell handover in ultra-dense networks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "udngc/core/error.hpp"
#include "udngc/harness/config.hpp"
#include "udngc/harness/csv.hpp"
#include "udngc/harness/figures.hpp"
#include "udngc/harness/validate.hpp"
#include "udngc/simd/kernels.hpp"

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kConfigError = 2, kNumericalError = 3 };

udngc::ScenarioParams load(const std::string& path) {
  auto s = udngc::harness::parse_config(path);
  udngc::harness::apply_seed_override(s);
  return s;
}

void emit(const std::vector<udngc::harness::SweepRow>& rows, const std::string& out) {
  if (out.empty() || out == "-") {
    udngc::harness::write_csv(std::cout, rows);
  } else {
    udngc::harness::write_csv_file(out, rows);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-cell handover analysis for ultra-dense networks"};
  app.set_version_flag("--version", std::string("udngc ") + UDNGC_VERSION);
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores, 1 = bit-exact output)")
      ->capture_default_str();

  std::string config, out, preset, golden;
  std::vector<std::string> sets;

  auto* analytic = app.add_subcommand("analytic", "Closed-form metrics for one scenario");
  analytic->add_option("config", config, "Scenario file")->required();
  analytic->add_option("--out", out, "CSV path (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates beside the closed forms");
  simulate->add_option("config", config, "Scenario file")->required();
  simulate->add_option("--out", out, "CSV path (default stdout)");

  auto* figure = app.add_subcommand("figure", "Run a figure sweep");
  figure->add_option("preset", preset, "fig3, fig5 ... fig13")->required();
  figure->add_option("--out", out, "CSV path (default stdout)");
  figure->add_option("--set", sets, "Override key=value (repeatable)");

  auto* validate = app.add_subcommand("validate", "Run the consistency checks; exit 1 on failure");
  validate->add_option("config", config, "Scenario file")->required();
  validate->add_option("--out", out, "Report CSV path (default stdout)");
  validate->add_option("--golden", golden, "Golden name=value file");

  auto* info = app.add_subcommand("backends", "List SIMD kernel backends");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*analytic) {
      emit(udngc::harness::analytic_report(load(config)), out);
    } else if (*simulate) {
      emit(udngc::harness::simulate_report(load(config), threads), out);
    } else if (*figure) {
      udngc::harness::RunOptions opt;
      opt.threads = threads;
      for (const auto& s : sets) {
        auto [k, v] = udngc::harness::split_assignment(s);
        opt.overrides[k] = v;
      }
      emit(udngc::harness::run_figure(preset, opt), out);
    } else if (*validate) {
      udngc::harness::ValidateOptions opt;
      opt.threads = threads;
      if (!golden.empty()) opt.golden_path = golden;
      const auto checks = udngc::harness::run_validation(load(config), opt);
      std::ostringstream report;
      udngc::harness::write_report(report, checks);
      if (out.empty() || out == "-") {
        std::cout << report.str();
      } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw udngc::ConfigError("cannot write '" + out + "'");
        f << report.str();
      }
      for (const auto& c : checks) {
        if (!c.pass) std::cerr << "udngc: check failed: " << c.name << '\n';
      }
      return udngc::harness::all_passed(checks) ? kOk : kValidationFailed;
    } else if (*info) {
      std::cout << "active: " << udngc::simd::active_kernels().name << '\n';
    }
  } catch (const udngc::ConfigError& e) {
    std::cerr << "udngc: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const udngc::ParameterError& e) {
    std::cerr << "udngc: invalid parameter: " << e.what() << '\n';
    return kConfigError;
  } catch (const udngc::NumericalError& e) {
    std::cerr << "udngc: numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const udngc::InsufficientPointsError& e) {
    std::cerr << "udngc: numerical error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kOk;
}
