// Copyright 2026 The cloudfog Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <filesystem>
#include <memory>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "cloudfog/placement.hpp"

namespace cloudfog {

/// Expands a `users_per_node` value: either `{"<node>": count, ...}` or
/// `{"uniform_total": N}`, which spreads N users evenly over all nodes
/// (the first N mod |nodes| nodes get one extra user).
std::map<NodeId, int> parse_users(const nlohmann::json& value, const Topology& topology);

/// Parses one VM object of a scenario document.
VmSpec parse_vm(const nlohmann::json& value, const Topology& topology);

/// Parses a scenario document, either `{"vm": {...}}` or
/// `{"vms": [{...}, ...], "coop": [{"between": [a, b], "rate_mbps": r}]}`,
/// and validates it against `topology`.
Scenario load_scenario(std::string_view document, std::shared_ptr<const Topology> topology, PowerParams params);
Scenario load_scenario_file(const std::filesystem::path& path, std::shared_ptr<const Topology> topology,
                            PowerParams params);

/// Solution export: replicas and assignment per VM plus the power breakdown.
nlohmann::json solution_to_json(const PlacementSolution& solution, const Scenario& scenario);

}  // namespace cloudfog
