#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "mktsim/agents/policy.hpp"

namespace mktsim {

// Versioned JSON checkpoint: policy type, parameter arrays, normalizer
// state where applicable. Round-trips doubles exactly.
nlohmann::json policy_to_json(const Policy& policy);
std::unique_ptr<Policy> policy_from_json(const nlohmann::json& doc);

void save_policy(const Policy& policy, const std::string& path);
std::unique_ptr<Policy> load_policy(const std::string& path);

}  // namespace mktsim
