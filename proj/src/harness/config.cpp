#include "udngc/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "udngc/core/error.hpp"

namespace udngc::harness {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key + ": not a number: '" + text + "'");
  return v;
}

std::uint64_t to_uint(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(key + ": not a non-negative integer: '" + text + "'");
  }
  return v;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "lambda_bs", "eta1", "eta2", "d_critical", "speed", "m_group", "tau_db", "t_h",
      "mu", "t_interval", "s1", "s2", "trials", "seed", "window_radius", "step"};
  return keys;
}

KeyValues parse_key_values(std::string_view text, const std::string& source) {
  KeyValues kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
    if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
    if (!kv.emplace(key, value).second) throw ConfigError(where + ": repeated key '" + key + "'");
  }
  return kv;
}

ScenarioParams build_scenario(const KeyValues& kv) {
  ScenarioParams p;
  const auto& keys = config_keys();
  for (const auto& [key, value] : kv) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  auto num = [&](const char* key, double& field) {
    if (auto it = kv.find(key); it != kv.end()) field = to_double(key, it->second);
  };
  num("lambda_bs", p.lambda_bs);
  num("eta1", p.eta1);
  num("eta2", p.eta2);
  num("d_critical", p.d_critical);
  num("speed", p.speed);
  num("tau_db", p.tau_db);
  num("t_h", p.t_h);
  num("mu", p.mu);
  num("t_interval", p.t_interval);
  num("window_radius", p.window_radius);
  num("step", p.step);
  // The handoff cost is the handover delay and the CSI message cost is 1 % of
  // the feedback interval unless given explicitly.
  p.s1 = p.t_h;
  p.s2 = 0.01 * p.t_interval;
  num("s1", p.s1);
  num("s2", p.s2);
  if (auto it = kv.find("m_group"); it != kv.end()) {
    const auto m = to_uint("m_group", it->second);
    if (m > 1000) throw ConfigError("m_group must be <= 1000");
    p.m_group = static_cast<int>(m);
  }
  if (auto it = kv.find("trials"); it != kv.end()) p.trials = to_uint("trials", it->second);
  if (auto it = kv.find("seed"); it != kv.end()) p.seed = to_uint("seed", it->second);
  // Path-loss ordering is reported first: it is a model constraint, not a
  // missing input.
  if (!(p.eta1 <= p.eta2)) throw ConfigError("eta1 <= eta2 violated");
  if (!kv.count("lambda_bs")) throw ConfigError("lambda_bs required");
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  return p;
}

ScenarioParams parse_config_text(std::string_view text, const std::string& source) {
  return build_scenario(parse_key_values(text, source));
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_values(buf.str(), path);
}

ScenarioParams parse_config(const std::string& path) { return build_scenario(read_config_file(path)); }

std::pair<std::string, std::string> split_assignment(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("expected key=value, got '" + arg + "'");
  auto kv = parse_key_values(arg, "--set");
  return *kv.begin();
}

void apply_seed_override(ScenarioParams& params) {
  const char* env = std::getenv("UDNGC_SEED");
  if (env == nullptr || *env == '\0') return;
  params.seed = to_uint("UDNGC_SEED", env);
}

}  // namespace udngc::harness
