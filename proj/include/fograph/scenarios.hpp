#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fograph {

struct ScenarioResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  // one line per checked fact
  nlohmann::json report;
  double runtime_ms = 0;
};

struct ScenarioContext {
  nlohmann::json config;
  std::string config_hash;  // FNV-1a over the config file bytes
  uint64_t seed = 0;
  int jobs = 1;
};

std::vector<std::string> scenario_names();
bool has_scenario(const std::string& name);
ScenarioResult run_scenario(const std::string& name,
                            const ScenarioContext& ctx);

nlohmann::json default_config();
std::string fnv1a_hex(const std::string& bytes);

}  // namespace fograph
