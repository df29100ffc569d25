#include "udngc/harness/figures.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include "udngc/analytics.hpp"
#include "udngc/core/error.hpp"
#include "udngc/simulator.hpp"

namespace udngc::harness {

namespace an = udngc::analytics;

namespace {

SweepRow make_row(std::string parameter, double value, std::string metric) {
  SweepRow row;
  row.parameter = std::move(parameter);
  row.value = value;
  row.metric = std::move(metric);
  return row;
}

constexpr std::uint64_t kRateTrials = 1000;
constexpr std::uint64_t kCoverageTrials = 100000;

std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> v;
  const double a = std::log10(lo), b = std::log10(hi);
  for (int i = 0; i < n; ++i) v.push_back(std::pow(10.0, a + (b - a) * i / (n - 1)));
  return v;
}

std::vector<double> lin_space(double lo, double hi, double step) {
  std::vector<double> v;
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= n; ++i) v.push_back(lo + step * i);
  return v;
}

// Parses a single overridden value through the normal config path.
ScenarioParams probe(const std::string& key, const std::string& value) {
  KeyValues kv{{"lambda_bs", "1"}};
  kv[key] = value;
  return build_scenario(kv);
}

std::string label(const std::string& key, double v) { return key + "=" + format_number(v); }

std::string tag(const std::string& metric, std::initializer_list<std::string> parts) {
  std::string out = metric + "[";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ";";  // keeps metric names free of CSV quoting
    out += p;
    first = false;
  }
  return out + "]";
}

// Shared state of one preset run.
class Sweep {
 public:
  Sweep(const RunOptions& opt, KeyValues base) : opt_(opt), base_(std::move(base)) {
    for (const auto& [k, v] : opt.overrides) base_[k] = v;
  }

  // Grid for a swept key: the preset's values unless the key was overridden.
  std::vector<double> axis(const std::string& key, std::vector<double> values) const {
    if (auto it = opt_.overrides.find(key); it != opt_.overrides.end()) {
      return {probe(key, it->second).*field_of(key)};
    }
    return values;
  }

  ScenarioParams scenario(std::initializer_list<std::pair<std::string, double>> set) const {
    KeyValues kv = base_;
    for (const auto& [k, v] : set) kv[k] = format_number(v);
    auto s = build_scenario(kv);
    apply_seed_override(s);
    return s;
  }

  std::uint64_t trials(std::uint64_t fallback) const {
    if (auto it = opt_.overrides.find("trials"); it != opt_.overrides.end()) {
      return probe("trials", it->second).trials;
    }
    return fallback;
  }

  unsigned threads() const { return opt_.threads; }

  void add(SweepRow row) { rows_.push_back(std::move(row)); }

  // Times fn and stamps runtime_ms unless running bit-exact.
  template <class Fn>
  auto timed(Fn fn, std::optional<double>& runtime) const {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    const auto t1 = std::chrono::steady_clock::now();
    if (opt_.threads != 1) runtime = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
  }

  std::vector<SweepRow> take() { return std::move(rows_); }

 private:
  static double ScenarioParams::*field_of(const std::string& key) {
    static const std::map<std::string, double ScenarioParams::*> fields = {
        {"lambda_bs", &ScenarioParams::lambda_bs}, {"eta1", &ScenarioParams::eta1},
        {"eta2", &ScenarioParams::eta2},           {"d_critical", &ScenarioParams::d_critical},
        {"speed", &ScenarioParams::speed},         {"tau_db", &ScenarioParams::tau_db}};
    auto it = fields.find(key);
    if (it == fields.end()) throw ConfigError("cannot sweep '" + key + "'");
    return it->second;
  }

  const RunOptions& opt_;
  KeyValues base_;
  std::vector<SweepRow> rows_;
};

// m_group is an integer axis.
std::vector<int> m_axis(const RunOptions& opt, std::vector<int> values) {
  if (auto it = opt.overrides.find("m_group"); it != opt.overrides.end()) {
    return {probe("m_group", it->second).m_group};
  }
  return values;
}

double binomial_ci(double p, std::uint64_t n) {
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// Coverage curve point: analytic value with the cell-edge oracle beside it.
SweepRow coverage_rows(Sweep& sw, const ScenarioParams& s, const std::string& param,
                       double value, const std::string& metric, std::uint64_t trials,
                       bool geometric) {
  SweepRow row = make_row(param, value, metric);
  row.analytic = an::coverage_probability(s.coverage());
  const double p = sw.timed(
      [&] { return sim::coverage_oracle_model(s.coverage(), trials, s.seed, sw.threads()); },
      row.runtime_ms);
  row.simulated = p;
  row.ci95 = binomial_ci(p, trials);
  row.trials = trials;
  sw.add(row);
  if (geometric) {
    const auto bracket = metric.find('[');
    std::string name = metric;
    name.insert(bracket == std::string::npos ? name.size() : bracket, "_geometric");
    SweepRow g = make_row(param, value, name);
    const double pg = sw.timed(
        [&] { return sim::coverage_oracle_geometric(s, trials, s.seed, sw.threads()); },
        g.runtime_ms);
    g.simulated = pg;
    g.ci95 = binomial_ci(pg, trials);
    g.trials = trials;
    sw.add(g);
  }
  return row;
}

sim::RateEstimates rates(Sweep& sw, const ScenarioParams& s, std::uint64_t trials,
                         std::optional<double>& runtime) {
  return sw.timed([&] { return sim::estimate_handover_rates(s, trials, s.seed, sw.threads()); },
                  runtime);
}

SweepRow rate_row(const std::string& param, double value, const std::string& metric,
                  std::optional<double> analytic, const sim::RateEstimate& e,
                  std::optional<double> runtime) {
  SweepRow row = make_row(param, value, metric);
  row.analytic = analytic;
  row.simulated = e.mean;
  row.ci95 = e.half_width_95;
  row.trials = e.trials;
  row.runtime_ms = runtime;
  return row;
}

// --- presets ---------------------------------------------------------------

void fig3(Sweep& sw, bool) {
  const auto trials = sw.trials(kCoverageTrials);
  for (double lambda : sw.axis("lambda_bs", {0.001, 0.01})) {
    for (double d : sw.axis("d_critical", {10.0, 20.0})) {
      for (double tau : sw.axis("tau_db", lin_space(-10.0, 20.0, 2.5))) {
        const auto s = sw.scenario({{"lambda_bs", lambda}, {"d_critical", d}, {"tau_db", tau}});
        coverage_rows(sw, s, "tau_db", tau,
                      tag("coverage", {label("lambda", lambda), label("D", d)}), trials, true);
      }
    }
  }
}

void fig5(Sweep& sw, const RunOptions& opt) {
  const auto trials = sw.trials(kRateTrials);
  for (int m : m_axis(opt, {1, 3, 6, 9})) {
    for (double lambda : sw.axis("lambda_bs", log_space(1e-4, 1e-2, 9))) {
      const auto s = sw.scenario({{"lambda_bs", lambda}, {"m_group", m}});
      std::optional<double> rt;
      const auto r = rates(sw, s, trials, rt);
      sw.add(rate_row("lambda_bs", lambda, tag("handover_rate_gcho", {label("M", m)}),
                      an::handover_rate_gcho(s.speed, lambda, m), r.gcho, rt));
    }
  }
}

void fig6(Sweep& sw, const RunOptions& opt) {
  const auto trials = sw.trials(kRateTrials);
  for (int m : m_axis(opt, {1, 3, 6, 9})) {
    for (double speed : sw.axis("speed", lin_space(1.0, 30.0, 1.0))) {
      const auto s = sw.scenario({{"speed", speed}, {"m_group", m}});
      const std::string metric = tag("handover_rate_gcho", {label("M", m)});
      const double analytic = an::handover_rate_gcho(speed, s.lambda_bs, m);
      // Simulate every 5 m/s (and at 1 m/s); the rest of the curve is analytic.
      if (speed == 1.0 || std::fmod(speed, 5.0) == 0.0) {
        std::optional<double> rt;
        const auto r = rates(sw, s, trials, rt);
        sw.add(rate_row("speed", speed, metric, analytic, r.gcho, rt));
      } else {
        SweepRow row = make_row("speed", speed, metric);
        row.analytic = analytic;
        sw.add(row);
      }
    }
  }
}

void fig7(Sweep& sw, const RunOptions& opt) {
  const auto trials = sw.trials(kRateTrials);
  std::vector<int> ms;
  for (int m = 1; m <= 12; ++m) ms.push_back(m);
  for (double lambda : sw.axis("lambda_bs", {0.001, 0.005, 0.01})) {
    for (int m : m_axis(opt, ms)) {
      const auto s = sw.scenario({{"lambda_bs", lambda}, {"m_group", m}});
      std::optional<double> rt;
      const auto r = rates(sw, s, trials, rt);
      SweepRow row = make_row("m_group", static_cast<double>(m), tag("d_cost_gcho", {label("lambda", lambda)}));
      row.analytic = an::handover_cost(s.t_h, an::handover_rate_gcho(s.speed, lambda, m)).value;
      row.simulated = s.t_h * r.gcho.mean;
      row.ci95 = s.t_h * r.gcho.half_width_95;
      row.trials = trials;
      row.runtime_ms = rt;
      sw.add(row);
    }
  }
}

void fig8(Sweep& sw, bool) {
  const auto trials = sw.trials(kRateTrials);
  for (double lambda : sw.axis("lambda_bs", {0.001, 0.01})) {
    for (double speed : sw.axis("speed", {5.0, 10.0, 15.0, 20.0, 25.0, 30.0})) {
      const auto s = sw.scenario({{"lambda_bs", lambda}, {"speed", speed}});
      std::optional<double> rt;
      const auto r = rates(sw, s, trials, rt);
      sw.add(rate_row("speed", speed, tag("handover_rate_gcho", {label("lambda", lambda)}),
                      an::handover_rate_gcho(speed, lambda, s.m_group), r.gcho, rt));
      sw.add(rate_row("speed", speed, tag("fr_baseline_disk", {label("lambda", lambda)}),
                      std::nullopt, r.fixed_region, rt));
    }
  }
}

void fig9(Sweep& sw, bool) {
  const auto cov_trials = sw.trials(kCoverageTrials);
  const auto rate_trials = sw.trials(kRateTrials);
  const auto base = sw.scenario({});
  std::optional<double> rt;
  const auto r = rates(sw, base, rate_trials, rt);
  struct Mobile {
    const char* metric;
    double analytic_rate;
    const sim::RateEstimate& est;
  };
  const Mobile mobiles[] = {
      {"coverage_mobile_gcho", an::handover_rate_gcho(base.speed, base.lambda_bs, base.m_group), r.gcho},
      {"coverage_mobile_gchos", an::handover_rate_gchos(base.speed, base.lambda_bs, base.m_group), r.gchos}};
  for (double tau : sw.axis("tau_db", lin_space(-10.0, 20.0, 2.5))) {
    const auto s = sw.scenario({{"tau_db", tau}});
    const SweepRow still = coverage_rows(sw, s, "tau_db", tau, "coverage_stationary", cov_trials, false);
    for (const auto& mob : mobiles) {
      SweepRow row = make_row("tau_db", tau, mob.metric);
      const double d_an = an::handover_cost(s.t_h, mob.analytic_rate).value;
      const double d_sim = std::min(1.0, s.t_h * mob.est.mean);
      row.analytic = an::cost_aware_coverage(*still.analytic, true, std::min(1.0, d_an));
      row.simulated = an::cost_aware_coverage(*still.simulated, true, d_sim);
      // First-order propagation of both sampling errors.
      row.ci95 = std::hypot((1.0 - d_sim) * *still.ci95, *still.simulated * s.t_h * mob.est.half_width_95);
      row.trials = cov_trials;
      row.runtime_ms = still.runtime_ms;
      sw.add(row);
    }
  }
}

void fig10(Sweep& sw, bool) {
  for (double lambda : sw.axis("lambda_bs", lin_space(0.001, 0.01, 0.001))) {
    const auto s = sw.scenario({{"lambda_bs", lambda}});
    const double tau = s.tau_linear();
    const double p = an::coverage_probability(s.coverage());
    const double d = an::handover_cost(s.t_h, an::handover_rate_gcho(s.speed, lambda, s.m_group)).value;
    const double still = an::ase_cost(lambda, tau, p);
    const double moving = an::ase_cost(lambda, tau, an::cost_aware_coverage(p, true, std::min(1.0, d)));
    auto add = [&](const char* metric, double v) {
      SweepRow row = make_row("lambda_bs", lambda, metric);
      row.analytic = v;
      sw.add(row);
    };
    add("ase_stationary", still);
    add("ase_mobile_gcho", moving);
    add("ase_gap_gcho", still > 0.0 ? (still - moving) / still : 0.0);
  }
}

void fig11(Sweep& sw, bool) {
  const auto trials = sw.trials(kRateTrials);
  for (double speed : sw.axis("speed", {5.0, 10.0, 15.0, 20.0, 25.0, 30.0})) {
    const auto s = sw.scenario({{"speed", speed}});
    std::optional<double> rt;
    const auto r = rates(sw, s, trials, rt);
    const double h = an::handover_rate_gcho(speed, s.lambda_bs, s.m_group);
    const double hs = an::handover_rate_gchos(speed, s.lambda_bs, s.m_group);
    auto cost_row = [&](const char* metric, double rate, const sim::RateEstimate& e) {
      SweepRow row = make_row("speed", speed, metric);
      row.analytic = an::handover_cost(s.t_h, rate).value;
      row.simulated = s.t_h * e.mean;
      row.ci95 = s.t_h * e.half_width_95;
      row.trials = trials;
      row.runtime_ms = rt;
      sw.add(row);
    };
    cost_row("d_cost_gcho", h, r.gcho);
    cost_row("d_cost_gchos", hs, r.gchos);
    SweepRow ratio = make_row("speed", speed, "d_cost_ratio_gchos_gcho");
    ratio.analytic = an::handover_cost(s.t_h, hs).value / an::handover_cost(s.t_h, h).value;
    if (r.total_gcho > 0) {
      ratio.simulated = static_cast<double>(r.total_gchos) / static_cast<double>(r.total_gcho);
    }
    ratio.trials = trials;
    sw.add(ratio);
  }
}

void fig12(Sweep& sw, const RunOptions& opt) {
  std::vector<int> ms;
  for (int m = 1; m <= 12; ++m) ms.push_back(m);
  for (double lambda : sw.axis("lambda_bs", {0.001, 0.005, 0.01})) {
    const auto s = sw.scenario({{"lambda_bs", lambda}});
    for (auto scheme : {an::Scheme::gcho, an::Scheme::gchos}) {
      const std::string metric =
          tag(std::string("overall_cost_") + an::scheme_name(scheme), {label("lambda", lambda)});
      for (int m : m_axis(opt, ms)) {
        SweepRow row = make_row("m_group", static_cast<double>(m), metric);
        row.analytic = an::overall_cost(scheme, s.costs(), s.speed, lambda, m);
        sw.add(row);
      }
    }
  }
}

void fig13(Sweep& sw, bool) {
  for (double speed : sw.axis("speed", {5.0, 10.0, 20.0, 30.0})) {
    for (double lambda : sw.axis("lambda_bs", log_space(1e-4, 1e-2, 9))) {
      const auto s = sw.scenario({{"lambda_bs", lambda}, {"speed", speed}});
      for (auto scheme : {an::Scheme::gcho, an::Scheme::gchos}) {
        const auto opt = an::optimal_cluster_size(scheme, s.costs(), speed, lambda);
        const std::string name = an::scheme_name(scheme);
        SweepRow cont = make_row("lambda_bs", lambda, tag("optimal_m_" + name, {label("speed", speed)}));
        cont.analytic = opt.continuous;
        sw.add(cont);
        SweepRow integer = make_row("lambda_bs", lambda, tag("optimal_m_integer_" + name, {label("speed", speed)}));
        integer.analytic = opt.integer;
        sw.add(integer);
      }
    }
  }
}

struct Preset {
  const char* name;
  const char* base_lambda;  // used unless lambda_bs is overridden
  std::function<void(Sweep&, const RunOptions&)> run;
};

const std::vector<Preset>& presets() {
  auto plain = [](void (*f)(Sweep&, bool)) {
    return [f](Sweep& sw, const RunOptions&) { f(sw, true); };
  };
  static const std::vector<Preset> list = {
      {"fig3", "0.01", plain(fig3)},    {"fig5", "0.001", fig5},        {"fig6", "0.001", fig6},
      {"fig7", "0.001", fig7},          {"fig8", "0.001", plain(fig8)}, {"fig9", "0.01", plain(fig9)},
      {"fig10", "0.01", plain(fig10)},  {"fig11", "0.005", plain(fig11)},
      {"fig12", "0.005", fig12},        {"fig13", "0.005", plain(fig13)},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& figure_presets() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& p : presets()) v.push_back(p.name);
    return v;
  }();
  return names;
}

std::vector<SweepRow> run_figure(const std::string& preset, const RunOptions& options) {
  for (const auto& p : presets()) {
    if (preset != p.name) continue;
    Sweep sw(options, KeyValues{{"lambda_bs", p.base_lambda}});
    p.run(sw, options);
    return sw.take();
  }
  std::string known;
  for (const auto& n : figure_presets()) known += (known.empty() ? "" : ", ") + n;
  throw ConfigError("unknown preset '" + preset + "' (known: " + known + ")");
}

std::vector<SweepRow> analytic_report(const ScenarioParams& s) {
  std::vector<SweepRow> rows;
  auto add = [&](const std::string& metric, double v) {
    SweepRow row = make_row("lambda_bs", s.lambda_bs, metric);
    row.analytic = v;
    rows.push_back(row);
  };
  const double m = s.m_group;
  const double h1 = an::handover_rate_gcho(s.speed, s.lambda_bs, 1.0);
  const double h = an::handover_rate_gcho(s.speed, s.lambda_bs, m);
  const double hs = an::handover_rate_gchos(s.speed, s.lambda_bs, m);
  const auto d = an::handover_cost(s.t_h, h);
  const auto ds = an::handover_cost(s.t_h, hs);
  const double p = an::coverage_probability(s.coverage());
  const double tau = s.tau_linear();
  add("handover_rate_traditional", h1);
  add("handover_rate_gcho", h);
  add("handover_rate_gchos", hs);
  add("handover_rate_reduction_gcho", 1.0 - h / h1);
  add("signaling_overhead", an::signaling_overhead(s.mu, s.t_interval, m));
  add("d_cost_gcho", d.value);
  add("d_cost_gchos", ds.value);
  add("coverage_probability", p);
  add("coverage_mobile_gcho", an::cost_aware_coverage(p, true, std::min(1.0, d.value)));
  add("coverage_mobile_gchos", an::cost_aware_coverage(p, true, std::min(1.0, ds.value)));
  add("ase_stationary", an::ase_cost(s.lambda_bs, tau, p));
  add("ase_mobile_gcho", an::ase_cost(s.lambda_bs, tau, an::cost_aware_coverage(p, true, std::min(1.0, d.value))));
  for (auto scheme : {an::Scheme::gcho, an::Scheme::gchos}) {
    const std::string name = an::scheme_name(scheme);
    add("overall_cost_" + name, an::overall_cost(scheme, s.costs(), s.speed, s.lambda_bs, m));
    const auto opt = an::optimal_cluster_size(scheme, s.costs(), s.speed, s.lambda_bs);
    add("optimal_m_" + name, opt.continuous);
    add("optimal_m_integer_" + name, opt.integer);
  }
  return rows;
}

std::vector<SweepRow> simulate_report(const ScenarioParams& s, unsigned threads) {
  RunOptions opt;
  opt.threads = threads;
  Sweep sw(opt, {});
  std::optional<double> rt;
  const auto r = sw.timed([&] { return sim::estimate_handover_rates(s, s.trials, s.seed, threads); }, rt);
  const double m = s.m_group;
  sw.add(rate_row("lambda_bs", s.lambda_bs, "handover_rate_traditional",
                  an::handover_rate_gcho(s.speed, s.lambda_bs, 1.0), r.traditional, rt));
  sw.add(rate_row("lambda_bs", s.lambda_bs, "handover_rate_gcho",
                  an::handover_rate_gcho(s.speed, s.lambda_bs, m), r.gcho, rt));
  sw.add(rate_row("lambda_bs", s.lambda_bs, "handover_rate_gchos",
                  an::handover_rate_gchos(s.speed, s.lambda_bs, m), r.gchos, rt));
  coverage_rows(sw, s, "lambda_bs", s.lambda_bs, "coverage_probability", 100 * s.trials, false);
  return sw.take();
}

}  // namespace udngc::harness
