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

#include "cloudfog/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cloudfog/error.hpp"

namespace cloudfog {

namespace {

nlohmann::json site_json(const Site& s) { return {{"node", s.node.value}, {"tier", to_string(s.tier)}}; }

NodeId parse_node_key(const std::string& key) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != key.size()) throw ParseError("users_per_node: '" + key + "' is not a node id");
    return NodeId{value};
}

}  // namespace

std::map<NodeId, int> parse_users(const nlohmann::json& value, const Topology& topology) {
    if (!value.is_object()) throw ParseError("users_per_node must be an object");
    std::map<NodeId, int> users;
    if (value.contains("uniform_total")) {
        if (value.size() != 1) throw ParseError("users_per_node: uniform_total cannot be mixed with node counts");
        const long total = value.at("uniform_total").get<long>();
        if (total < 0) throw ValidationError("uniform_total must be non-negative");
        const long n = static_cast<long>(topology.node_count());
        long index = 0;
        for (NodeId node : topology.nodes()) {
            users[node] = static_cast<int>(total / n + (index < total % n ? 1 : 0));
            ++index;
        }
        return users;
    }
    for (const auto& [key, count] : value.items()) users[parse_node_key(key)] = count.get<int>();
    return users;
}

VmSpec parse_vm(const nlohmann::json& value, const Topology& topology) {
    VmSpec vm;
    vm.name = value.value("name", std::string("vm"));
    vm.profile = profile_from_string(value.at("profile").get<std::string>());
    vm.peak_workload = value.at("peak_workload").get<double>();
    vm.rate_per_user_mbps = value.at("rate_per_user_mbps").get<double>();
    vm.sync_rate_mbps = value.value("sync_rate_mbps", 0.0);
    vm.users_per_node = parse_users(value.at("users_per_node"), topology);
    return vm;
}

Scenario load_scenario(std::string_view document, std::shared_ptr<const Topology> topology, PowerParams params) {
    if (!topology) throw ValidationError("scenario needs a topology");
    Scenario sc;
    sc.topology = std::move(topology);
    sc.params = params;
    try {
        const auto doc = nlohmann::json::parse(document);
        if (!doc.is_object()) throw ParseError("scenario: document must be a JSON object");
        if (doc.contains("vm") == doc.contains("vms")) throw ParseError("scenario: give exactly one of \"vm\" or \"vms\"");
        if (doc.contains("vm")) {
            sc.vms.push_back(parse_vm(doc.at("vm"), *sc.topology));
        } else {
            for (const auto& v : doc.at("vms")) sc.vms.push_back(parse_vm(v, *sc.topology));
        }
        for (std::size_t i = 0; i < sc.vms.size(); ++i) {
            if (sc.vms[i].name == "vm" && sc.vms.size() > 1) sc.vms[i].name = "vm" + std::to_string(i);
        }

        auto index_of_vm = [&](const std::string& name) {
            for (std::size_t i = 0; i < sc.vms.size(); ++i) {
                if (sc.vms[i].name == name) return i;
            }
            throw ValidationError("coop: unknown vm '" + name + "'");
        };
        if (doc.contains("coop") && !doc.at("coop").is_null()) {
            for (const auto& link : doc.at("coop")) {
                const auto& between = link.at("between");
                if (!between.is_array() || between.size() != 2) throw ParseError("coop: \"between\" must name two VMs");
                const std::size_t a = index_of_vm(between[0].get<std::string>());
                const std::size_t b = index_of_vm(between[1].get<std::string>());
                if (sc.vms[a].coop_peer) throw ValidationError("coop: vm '" + sc.vms[a].name + "' already has a peer");
                sc.vms[a].coop_peer = CoopPeer{b, link.at("rate_mbps").get<double>()};
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
    sc.validate();
    return sc;
}

Scenario load_scenario_file(const std::filesystem::path& path, std::shared_ptr<const Topology> topology,
                            PowerParams params) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str(), std::move(topology), params);
}

nlohmann::json solution_to_json(const PlacementSolution& solution, const Scenario& scenario) {
    nlohmann::json vms = nlohmann::json::array();
    for (std::size_t i = 0; i < solution.vms.size(); ++i) {
        const VmPlacement& p = solution.vms[i];
        nlohmann::json replicas = nlohmann::json::array();
        for (const Site& s : p.replicas) replicas.push_back(site_json(s));
        nlohmann::json assignment = nlohmann::json::array();
        for (const auto& [node, site] : p.assignment) {
            assignment.push_back({{"node", node.value}, {"site", site_json(site)}});
        }
        vms.push_back({{"name", i < scenario.vms.size() ? scenario.vms[i].name : std::string{}},
                       {"replicas", std::move(replicas)},
                       {"assignment", std::move(assignment)}});
    }

    const PowerBreakdown& b = solution.breakdown;
    nlohmann::json processing = nlohmann::json::object();
    for (Tier t : kAllTiers) processing[std::string(to_string(t))] = b.processing(t);
    nlohmann::json network = nlohmann::json::object();
    for (Layer l : {Layer::Access, Layer::Metro, Layer::Core}) network[std::string(to_string(l))] = b.network(l);

    return {{"vms", std::move(vms)},
            {"processing_watts_by_tier", std::move(processing)},
            {"network_watts_by_layer", std::move(network)},
            {"total_watts", b.total_watts()}};
}

}  // namespace cloudfog
