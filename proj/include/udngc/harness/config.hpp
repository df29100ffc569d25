#pragma once

// Flat key=value scenario files. Keys are exactly the ScenarioParams field
// names; '#' starts a comment. Omitted keys take the usual defaults (D = 10 m,
// t_H = 0.3 s, mu = 1, T = 5 ms, S1 = t_H, S2 = 0.01 T); lambda_bs has no
// default and must be given.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "udngc/scenario.hpp"

namespace udngc::harness {

using KeyValues = std::map<std::string, std::string>;

const std::vector<std::string>& config_keys();

// Parses text into key/value pairs. Throws ConfigError on malformed lines,
// unknown or repeated keys; `source` names the input in messages.
KeyValues parse_key_values(std::string_view text, const std::string& source = "<config>");

// Builds validated params from pairs; throws ConfigError naming the field.
ScenarioParams build_scenario(const KeyValues& kv);

ScenarioParams parse_config_text(std::string_view text, const std::string& source = "<config>");
ScenarioParams parse_config(const std::string& path);
KeyValues read_config_file(const std::string& path);

// Splits "key=value" (a --set argument); throws ConfigError.
std::pair<std::string, std::string> split_assignment(const std::string& arg);

// Applies UDNGC_SEED, if set, over the configured seed.
void apply_seed_override(ScenarioParams& params);

}  // namespace udngc::harness
