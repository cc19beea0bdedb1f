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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cloudfog {

/// Identifier of a core node. Ids are the 1-based labels used in topology files.
struct NodeId {
    std::int32_t value = 0;

    constexpr NodeId() = default;
    constexpr explicit NodeId(std::int32_t v) : value(v) {}

    friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

std::string to_string(NodeId id);

/// Processing tier. The enumerator order is the tie-break preference order.
enum class Tier : std::uint8_t { Cloud = 0, MetroFog = 1, AccessFog = 2 };

inline constexpr std::size_t kTierCount = 3;
inline constexpr Tier kAllTiers[kTierCount] = {Tier::Cloud, Tier::MetroFog, Tier::AccessFog};

std::string_view to_string(Tier tier);
Tier tier_from_string(std::string_view text);

constexpr std::size_t index_of(Tier tier) { return static_cast<std::size_t>(tier); }

/// A place that can host a VM replica: a core node and one of its tiers.
/// Sites order by (node, tier).
struct Site {
    NodeId node;
    Tier tier = Tier::Cloud;

    friend constexpr auto operator<=>(const Site&, const Site&) = default;
};

std::string to_string(const Site& site);

/// Network layers traversed by a flow.
///
/// `core_router_ports` is `core_hops + 1` whenever the flow enters the IP
/// over WDM core (non-bypass: one port per hop plus the aggregation port),
/// and zero otherwise.
struct RouteSegments {
    int access_traversals = 0;
    int metro_traversals = 0;
    int core_hops = 0;
    int core_router_ports = 0;

    friend constexpr bool operator==(const RouteSegments&, const RouteSegments&) = default;

    constexpr RouteSegments& operator+=(const RouteSegments& o) {
        access_traversals += o.access_traversals;
        metro_traversals += o.metro_traversals;
        core_hops += o.core_hops;
        core_router_ports += o.core_router_ports;
        return *this;
    }
    friend constexpr RouteSegments operator+(RouteSegments a, const RouteSegments& b) { return a += b; }
};

/// Three-layer network: core nodes joined by fiber links, each node owning
/// one aggregated metro fog site and one aggregated access fog site.
///
/// Immutable after construction. All-pairs hop counts are computed once by
/// breadth-first search, so `min_hops` is a table lookup.
class Topology {
 public:
    /// Validates and builds a topology. Throws ValidationError on duplicate
    /// nodes or edges, self-loops, dangling edge endpoints, an empty or
    /// unknown cloud candidate set, or a disconnected graph.
    static Topology create(std::string name,
                           std::vector<NodeId> nodes,
                           std::vector<std::pair<NodeId, NodeId>> edges,
                           std::vector<NodeId> cloud_candidates);

    const std::string& name() const noexcept { return name_; }
    /// Node ids in ascending order.
    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
    /// Edges as (low, high) pairs in ascending order.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const noexcept { return edges_; }
    /// Cloud-capable nodes in ascending order.
    const std::vector<NodeId>& cloud_candidates() const noexcept { return clouds_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }

    bool contains(NodeId id) const noexcept;
    bool is_cloud_candidate(NodeId id) const noexcept;
    /// Neighbours of `id` in ascending order.
    const std::vector<NodeId>& neighbours(NodeId id) const;

    /// Length of a shortest unweighted path. Throws ValidationError for
    /// unknown ids.
    int min_hops(NodeId a, NodeId b) const;

    /// Throws ValidationError unless `site` names an existing node and a
    /// Cloud site sits on a cloud candidate.
    void check_site(const Site& site) const;

 private:
    Topology() = default;
    std::size_t index(NodeId id) const;

    std::string name_;
    std::vector<NodeId> nodes_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<NodeId> clouds_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<int> hops_;  // row-major node_count x node_count
};

/// Parses a topology document:
/// `{"name": str, "nodes": [int], "edges": [[int,int]], "cloud_candidates": [int]}`.
/// Throws ParseError for malformed documents and ValidationError for invalid graphs.
Topology load_topology(std::string_view document);
Topology load_topology_file(const std::filesystem::path& path);

/// Free-function form of Topology::min_hops.
int min_hops(const Topology& t, NodeId a, NodeId b);

/// Segments of a user flow from `user_node`'s access network to `site`.
/// Fog sites must belong to the user's own region.
RouteSegments route_user_to_site(const Topology& t, NodeId user_node, const Site& site);

/// Segments of an inter-site flow (synchronization or cooperation traffic).
/// Distinct nodes: upward legs of both sites plus min-hop core transit.
/// Same node: only the layers between the two tiers, no core.
/// Throws ValidationError for identical sites.
RouteSegments route_site_to_site(const Topology& t, const Site& a, const Site& b);

}  // namespace cloudfog

template <>
struct std::hash<cloudfog::NodeId> {
    std::size_t operator()(cloudfog::NodeId id) const noexcept { return std::hash<std::int32_t>{}(id.value); }
};
