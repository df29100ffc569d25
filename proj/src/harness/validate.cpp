#include "udngc/harness/validate.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "udngc/analytics.hpp"
#include "udngc/core/error.hpp"
#include "udngc/harness/csv.hpp"
#include "udngc/harness/figures.hpp"
#include "udngc/simulator.hpp"

namespace udngc::harness {

namespace an = udngc::analytics;
using std::numbers::pi;

namespace {

CheckResult absolute(std::string name, double expected, double observed, double tol) {
  return {std::move(name), expected, observed, tol, std::abs(observed - expected) <= tol};
}

CheckResult relative(std::string name, double expected, double observed, double tol) {
  const bool ok = std::abs(observed - expected) <= tol * std::abs(expected);
  return {std::move(name), expected, observed, tol, ok};
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

int exhaustive_optimum(an::Scheme scheme, const ScenarioParams& s) {
  int best = 1;
  double best_cost = an::overall_cost(scheme, s.costs(), s.speed, s.lambda_bs, 1);
  for (int m = 2; m <= 20; ++m) {
    const double c = an::overall_cost(scheme, s.costs(), s.speed, s.lambda_bs, m);
    if (c < best_cost) {
      best_cost = c;
      best = m;
    }
  }
  return best;
}

using Check = std::function<CheckResult(const ScenarioParams&, unsigned)>;

const std::vector<std::pair<std::string, Check>>& checks() {
  static const std::vector<std::pair<std::string, Check>> list = {
      {"gcho_rate_ratio_vs_inverse_sqrt_m",
       [](const ScenarioParams& s, unsigned) {
         const double r = an::handover_rate_gcho(s.speed, s.lambda_bs, s.m_group) /
                          an::handover_rate_gcho(s.speed, s.lambda_bs, 1.0);
         return absolute("", 1.0 / std::sqrt(s.m_group), r, 1e-12);
       }},
      {"gchos_rate_is_half_gcho",
       [](const ScenarioParams& s, unsigned) {
         const double r = an::handover_rate_gchos(s.speed, s.lambda_bs, s.m_group) /
                          an::handover_rate_gcho(s.speed, s.lambda_bs, s.m_group);
         return absolute("", 0.5, r, 1e-12);
       }},
      {"k0_quadrature_vs_arctan",
       [](const ScenarioParams&, unsigned) {
         const double theta = 0.7;
         return absolute("", 0.5 * pi - std::atan(theta), an::k_integral_quadrature(0, theta, 4.0), 1e-8);
       }},
      {"recursion_matrix_vs_direct",
       [](const ScenarioParams& s, unsigned) {
         auto p = s.coverage();
         p.m = std::max(p.m, 9);
         const double r = std::sqrt(1.5 / (pi * p.density));
         const auto st = an::toeplitz_state(r, p);
         const auto a = an::a_values_matrix(st.a_values[0], st.b0, st.k_values, p.m);
         return absolute("", 0.0, max_abs_diff(a, st.a_values), 1e-10);
       }},
      {"recursion_toeplitz_exp_vs_direct",
       [](const ScenarioParams& s, unsigned) {
         auto p = s.coverage();
         p.m = std::max(p.m, 9);
         const double r = std::sqrt(1.5 / (pi * p.density));
         const auto st = an::toeplitz_state(r, p);
         const auto a = an::a_values_toeplitz_exp(st.a_values[0], st.b0, st.k_values, p.m);
         return absolute("", 0.0, max_abs_diff(a, st.a_values), 1e-10);
       }},
      {"coverage_decreasing_in_tau",
       [](const ScenarioParams& s, unsigned) {
         auto p = s.coverage();
         double prev = 2.0;
         bool ok = true;
         for (double db : {-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0}) {
           p.tau = db_to_linear(db);
           const double v = an::coverage_probability(p);
           ok = ok && v >= 0.0 && v <= 1.0 && v < prev;
           prev = v;
         }
         return absolute("", 1.0, ok ? 1.0 : 0.0, 0.0);
       }},
      {"coverage_vs_model_oracle",
       [](const ScenarioParams& s, unsigned threads) {
         const auto p = s.coverage();
         return absolute("", an::coverage_probability(p),
                         sim::coverage_oracle_model(p, 100 * s.trials, s.seed, threads), 0.01);
       }},
      {"ase_gap_equals_d_cost",
       [](const ScenarioParams& s, unsigned) {
         const double p = an::coverage_probability(s.coverage());
         const double d = an::handover_cost(s.t_h, an::handover_rate_gcho(s.speed, s.lambda_bs, s.m_group)).value;
         const double still = an::ase_cost(s.lambda_bs, s.tau_linear(), p);
         const double moving = an::ase_cost(s.lambda_bs, s.tau_linear(), an::cost_aware_coverage(p, true, std::min(d, 1.0)));
         return absolute("", std::min(d, 1.0), (still - moving) / still, 1e-12);
       }},
      {"optimal_m_gchos_over_gcho",
       [](const ScenarioParams& s, unsigned) {
         const double a = an::optimal_cluster_size(an::Scheme::gcho, s.costs(), s.speed, s.lambda_bs).continuous;
         const double b = an::optimal_cluster_size(an::Scheme::gchos, s.costs(), s.speed, s.lambda_bs).continuous;
         return absolute("", std::pow(4.0, -1.0 / 3.0), b / a, 1e-12);
       }},
      {"optimal_m_integer_gcho_exhaustive",
       [](const ScenarioParams& s, unsigned) {
         const auto o = an::optimal_cluster_size(an::Scheme::gcho, s.costs(), s.speed, s.lambda_bs);
         return absolute("", exhaustive_optimum(an::Scheme::gcho, s), o.integer, 0.0);
       }},
      {"optimal_m_integer_gchos_exhaustive",
       [](const ScenarioParams& s, unsigned) {
         const auto o = an::optimal_cluster_size(an::Scheme::gchos, s.costs(), s.speed, s.lambda_bs);
         return absolute("", exhaustive_optimum(an::Scheme::gchos, s), o.integer, 0.0);
       }},
      {"sim_gchos_over_gcho_count",
       [](const ScenarioParams& s, unsigned threads) {
         const auto r = sim::estimate_handover_rates(s, s.trials, s.seed, threads);
         const double ratio = r.total_gcho ? static_cast<double>(r.total_gchos) / r.total_gcho : 0.0;
         return absolute("", 0.5, ratio, 0.05);
       }},
      {"sim_single_bs_rate_vs_closed_form",
       [](const ScenarioParams& s, unsigned threads) {
         auto one = s;
         one.m_group = 1;
         const auto e = sim::estimate_handover_rate(one, s.trials, s.seed, sim::Policy::gcho, threads);
         return relative("", an::handover_rate_gcho(s.speed, s.lambda_bs, 1.0), e.mean, 0.15);
       }},
      {"sim_rate_density_slope",
       [](const ScenarioParams& s, unsigned threads) {
         // Least-squares slope of log(rate) on log(lambda) over a decade.
         double sx = 0, sy = 0, sxx = 0, sxy = 0;
         const double factors[] = {0.1, 0.3, 1.0};
         for (double f : factors) {
           auto p = s;
           p.lambda_bs = s.lambda_bs * f;
           const double x = std::log(p.lambda_bs);
           const double y = std::log(sim::estimate_handover_rate(p, s.trials, s.seed, sim::Policy::gcho, threads).mean);
           sx += x; sy += y; sxx += x * x; sxy += x * y;
         }
         const double n = 3.0;
         return absolute("", 0.5, (n * sxy - sx * sy) / (n * sxx - sx * sx), 0.05);
       }},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : checks()) v.push_back(c.first);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_validation(const ScenarioParams& scenario, const ValidateOptions& options) {
  scenario.validate();
  std::vector<CheckResult> out;
  for (const auto& [name, check] : checks()) {
    try {
      auto r = check(scenario, options.threads);
      r.name = name;
      out.push_back(r);
    } catch (const NumericalError& e) {
      throw NumericalError("check " + name + ": " + e.what());
    }
  }
  if (options.golden_path) {
    auto g = golden_checks(scenario, *options.golden_path);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

std::vector<CheckResult> golden_checks(const ScenarioParams& scenario, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open golden file '" + path + "'");
  std::vector<CheckResult> out;
  std::vector<SweepRow> metrics;  // computed on first metric line
  const KeyValues configured = [&] {
    KeyValues kv;
    kv["lambda_bs"] = format_number(scenario.lambda_bs);
    kv["eta1"] = format_number(scenario.eta1);
    kv["eta2"] = format_number(scenario.eta2);
    kv["d_critical"] = format_number(scenario.d_critical);
    kv["speed"] = format_number(scenario.speed);
    kv["m_group"] = std::to_string(scenario.m_group);
    kv["tau_db"] = format_number(scenario.tau_db);
    kv["t_h"] = format_number(scenario.t_h);
    kv["mu"] = format_number(scenario.mu);
    kv["t_interval"] = format_number(scenario.t_interval);
    kv["s1"] = format_number(scenario.s1);
    kv["s2"] = format_number(scenario.s2);
    return kv;
  }();

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected name=value");
    }
    auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string name = strip(line.substr(0, eq));
    const std::string text = strip(line.substr(eq + 1));
    double expected = 0.0;
    try {
      std::size_t used = 0;
      expected = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": bad value '" + text + "'");
    }

    if (auto it = configured.find(name); it != configured.end()) {
      out.push_back(relative("golden:" + name, expected, std::stod(it->second), 1e-12));
      continue;
    }
    if (metrics.empty()) metrics = analytic_report(scenario);
    const SweepRow* row = nullptr;
    for (const auto& r : metrics) {
      if (r.metric == name) row = &r;
    }
    if (row == nullptr) throw ConfigError(path + ": unknown golden metric '" + name + "'");
    out.push_back(relative("golden:" + name, expected, *row->analytic, 1e-6));
  }
  return out;
}

void write_report(std::ostream& out, const std::vector<CheckResult>& checks) {
  out << "check,expected,observed,tolerance,status\n";
  for (const auto& c : checks) {
    out << c.name << ',' << format_number(c.expected) << ',' << format_number(c.observed) << ','
        << format_number(c.tolerance) << ',' << (c.pass ? "pass" : "FAIL") << '\n';
  }
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace udngc::harness
