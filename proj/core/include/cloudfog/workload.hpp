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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloudfog/topology.hpp"

namespace cloudfog {

/// CPU workload as a function of served users: flat or proportional with
/// zero intercept.
enum class Profile : std::uint8_t { Constant, Linear };

std::string_view to_string(Profile profile);
Profile profile_from_string(std::string_view text);

/// Bandwidth category of an application by per-user data rate.
enum class AppCategory : std::uint8_t { Basic, Intermediate, Advanced };

std::string_view to_string(AppCategory category);

/// Largest per-user workload (peak / total users) a linear VM may have.
inline constexpr double kMaxPerUserWorkload = 0.6;

/// Cooperation link from one VM to another VM of the same scenario.
struct CoopPeer {
    std::size_t vm_index = 0;
    double rate_mbps = 0.0;
};

struct VmSpec {
    std::string name;
    Profile profile = Profile::Linear;
    /// Workload (fraction of one server CPU) when every user sits on one replica.
    double peak_workload = 0.1;
    std::map<NodeId, int> users_per_node;
    double rate_per_user_mbps = 0.0;
    /// Rate from the sync root to every other replica.
    double sync_rate_mbps = 0.0;
    std::optional<CoopPeer> coop_peer;

    long total_users() const;
    /// Users at `node`, zero when the node has none.
    int users_at(NodeId node) const;

    /// Throws ValidationError on a peak outside (0, 1], no users, negative
    /// user counts or rates, or a linear per-user workload above 60%.
    void validate() const;
};

/// A traffic demand between two replica sites.
struct Demand {
    Site from;
    Site to;
    double rate_mbps = 0.0;

    friend bool operator==(const Demand&, const Demand&) = default;
};

/// Workload of a replica serving `users_assigned` of the VM's users.
double vm_workload(const VmSpec& spec, long users_assigned);

/// Throws ValidationError for negative or non-finite rates.
AppCategory classify_app(double rate_mbps);

/// Root of the synchronization star: the Cloud replica if present, else the
/// lowest (node, tier) replica. `replicas` must be non-empty.
Site sync_root(std::span<const Site> replicas);

/// Synchronization demands of a replica set: one root-to-replica flow per
/// non-root replica. Throws ValidationError on empty or duplicate replicas.
std::vector<Demand> sync_demands(std::span<const Site> replicas, const VmSpec& spec);

/// Cooperation demand between the sync roots of VM `a` and its declared peer
/// `b_index`. Throws ValidationError if `a` declares no such peer or if
/// either VM has no replicas.
Demand coop_demand(const VmSpec& a, std::span<const Site> a_replicas, std::size_t b_index,
                   std::span<const Site> b_replicas);

}  // namespace cloudfog
