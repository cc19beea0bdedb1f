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

#include "cloudfog/topology.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <span>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cloudfog/error.hpp"

namespace cloudfog {

namespace {

constexpr int kUnreached = -1;

// Layers a site's traffic crosses to reach its core node.
RouteSegments upward_leg(Tier tier) {
    switch (tier) {
        case Tier::Cloud: return {};
        case Tier::MetroFog: return {0, 1, 0, 0};
        case Tier::AccessFog: return {1, 1, 0, 0};
    }
    return {};
}

RouteSegments core_transit(int hops) { return {0, 0, hops, hops + 1}; }

}  // namespace

std::string to_string(NodeId id) { return std::to_string(id.value); }

std::string_view to_string(Tier tier) {
    switch (tier) {
        case Tier::Cloud: return "cloud";
        case Tier::MetroFog: return "metro";
        case Tier::AccessFog: return "access";
    }
    return "?";
}

Tier tier_from_string(std::string_view text) {
    if (text == "cloud") return Tier::Cloud;
    if (text == "metro") return Tier::MetroFog;
    if (text == "access") return Tier::AccessFog;
    throw ParseError("unknown tier '" + std::string(text) + "' (expected cloud, metro or access)");
}

std::string to_string(const Site& site) {
    return std::string(to_string(site.tier)) + "@" + to_string(site.node);
}

Topology Topology::create(std::string name,
                          std::vector<NodeId> nodes,
                          std::vector<std::pair<NodeId, NodeId>> edges,
                          std::vector<NodeId> cloud_candidates) {
    if (nodes.empty()) throw ValidationError("topology has no nodes");

    Topology t;
    t.name_ = std::move(name);

    std::ranges::sort(nodes);
    if (std::ranges::adjacent_find(nodes) != nodes.end())
        throw ValidationError("duplicate node id in topology");
    t.nodes_ = std::move(nodes);

    const auto n = t.nodes_.size();
    t.adjacency_.assign(n, {});

    std::set<std::pair<NodeId, NodeId>> seen;
    for (auto [a, b] : edges) {
        if (a == b) throw ValidationError("self-loop on node " + to_string(a));
        if (!t.contains(a) || !t.contains(b)) {
            throw ValidationError("edge " + to_string(a) + "-" + to_string(b) +
                                  " references an undeclared node");
        }
        if (b < a) std::swap(a, b);
        if (!seen.emplace(a, b).second)
            throw ValidationError("duplicate edge " + to_string(a) + "-" + to_string(b));
        t.adjacency_[t.index(a)].push_back(b);
        t.adjacency_[t.index(b)].push_back(a);
    }
    t.edges_.assign(seen.begin(), seen.end());
    for (auto& adj : t.adjacency_) std::ranges::sort(adj);

    if (cloud_candidates.empty()) throw ValidationError("cloud_candidates is empty");
    std::ranges::sort(cloud_candidates);
    if (std::ranges::adjacent_find(cloud_candidates) != cloud_candidates.end())
        throw ValidationError("duplicate cloud candidate");
    for (auto c : cloud_candidates) {
        if (!t.contains(c)) throw ValidationError("cloud candidate " + to_string(c) + " is not a node");
    }
    t.clouds_ = std::move(cloud_candidates);

    // All-pairs hop counts by BFS from every source.
    t.hops_.assign(n * n, kUnreached);
    std::queue<std::size_t> frontier;
    for (std::size_t s = 0; s < n; ++s) {
        int* row = &t.hops_[s * n];
        row[s] = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            const auto u = frontier.front();
            frontier.pop();
            for (auto v_id : t.adjacency_[u]) {
                const auto v = t.index(v_id);
                if (row[v] == kUnreached) {
                    row[v] = row[u] + 1;
                    frontier.push(v);
                }
            }
        }
        if (s == 0 && std::ranges::count(std::span(row, n), kUnreached) > 0)
            throw ValidationError("topology '" + t.name_ + "' is not connected");
    }
    return t;
}

std::size_t Topology::index(NodeId id) const {
    auto it = std::ranges::lower_bound(nodes_, id);
    if (it == nodes_.end() || *it != id) throw ValidationError("unknown node id " + to_string(id));
    return static_cast<std::size_t>(it - nodes_.begin());
}

bool Topology::contains(NodeId id) const noexcept { return std::ranges::binary_search(nodes_, id); }

bool Topology::is_cloud_candidate(NodeId id) const noexcept { return std::ranges::binary_search(clouds_, id); }

const std::vector<NodeId>& Topology::neighbours(NodeId id) const { return adjacency_[index(id)]; }

int Topology::min_hops(NodeId a, NodeId b) const { return hops_[index(a) * nodes_.size() + index(b)]; }

void Topology::check_site(const Site& site) const {
    if (!contains(site.node)) throw ValidationError("site " + to_string(site) + " names an unknown node");
    if (site.tier == Tier::Cloud && !is_cloud_candidate(site.node))
        throw ValidationError("node " + to_string(site.node) + " cannot host a cloud");
}

int min_hops(const Topology& t, NodeId a, NodeId b) { return t.min_hops(a, b); }

Topology load_topology(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("topology: ") + e.what());
    }

    std::string name;
    std::vector<NodeId> nodes;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> clouds;
    try {
        if (!doc.is_object()) throw ParseError("topology: document must be a JSON object");
        name = doc.value("name", std::string{});
        for (const auto& v : doc.at("nodes")) nodes.emplace_back(v.get<std::int32_t>());
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("topology: every edge must be a pair [a, b]");
            edges.emplace_back(NodeId{e[0].get<std::int32_t>()}, NodeId{e[1].get<std::int32_t>()});
        }
        for (const auto& v : doc.at("cloud_candidates")) clouds.emplace_back(v.get<std::int32_t>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("topology: ") + e.what());
    }
    return Topology::create(std::move(name), std::move(nodes), std::move(edges), std::move(clouds));
}

Topology load_topology_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open topology file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_topology(buf.str());
}

RouteSegments route_user_to_site(const Topology& t, NodeId user_node, const Site& site) {
    t.check_site(site);
    if (!t.contains(user_node)) throw ValidationError("unknown user node " + to_string(user_node));
    switch (site.tier) {
        case Tier::AccessFog:
        case Tier::MetroFog:
            if (site.node != user_node) {
                throw ValidationError("users of node " + to_string(user_node) +
                                      " cannot reach fog site " + to_string(site));
            }
            return site.tier == Tier::AccessFog ? RouteSegments{1, 0, 0, 0} : RouteSegments{1, 1, 0, 0};
        case Tier::Cloud:
            return RouteSegments{1, 1, 0, 0} + core_transit(t.min_hops(user_node, site.node));
    }
    return {};
}

RouteSegments route_site_to_site(const Topology& t, const Site& a, const Site& b) {
    t.check_site(a);
    t.check_site(b);
    if (a == b) throw ValidationError("route between identical sites " + to_string(a));
    if (a.node == b.node) return upward_leg(std::max(a.tier, b.tier));
    return upward_leg(a.tier) + core_transit(t.min_hops(a.node, b.node)) + upward_leg(b.tier);
}

}  // namespace cloudfog
