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

#include "cloudfog/workload.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cloudfog/error.hpp"

namespace cloudfog {

std::string_view to_string(Profile profile) {
    return profile == Profile::Constant ? "constant" : "linear";
}

Profile profile_from_string(std::string_view text) {
    if (text == "constant") return Profile::Constant;
    if (text == "linear") return Profile::Linear;
    throw ParseError("unknown profile '" + std::string(text) + "' (expected constant or linear)");
}

std::string_view to_string(AppCategory category) {
    switch (category) {
        case AppCategory::Basic: return "basic";
        case AppCategory::Intermediate: return "intermediate";
        case AppCategory::Advanced: return "advanced";
    }
    return "?";
}

long VmSpec::total_users() const {
    long total = 0;
    for (const auto& [node, count] : users_per_node) total += count;
    return total;
}

int VmSpec::users_at(NodeId node) const {
    auto it = users_per_node.find(node);
    return it == users_per_node.end() ? 0 : it->second;
}

void VmSpec::validate() const {
    const std::string who = name.empty() ? "vm" : "vm '" + name + "'";
    if (!(peak_workload > 0.0 && peak_workload <= 1.0))
        throw ValidationError(who + ": peak_workload must lie in (0, 1]");
    for (const auto& [node, count] : users_per_node) {
        if (count < 0) throw ValidationError(who + ": negative user count at node " + to_string(node));
    }
    const long total = total_users();
    if (total <= 0) throw ValidationError(who + ": needs at least one user");
    if (!std::isfinite(rate_per_user_mbps) || rate_per_user_mbps < 0.0)
        throw ValidationError(who + ": rate_per_user_mbps must be non-negative");
    if (!std::isfinite(sync_rate_mbps) || sync_rate_mbps < 0.0)
        throw ValidationError(who + ": sync_rate_mbps must be non-negative");
    if (profile == Profile::Linear && peak_workload / static_cast<double>(total) > kMaxPerUserWorkload)
        throw ValidationError(who + ": per-user workload exceeds 60% of a server");
    if (coop_peer && (!std::isfinite(coop_peer->rate_mbps) || coop_peer->rate_mbps < 0.0))
        throw ValidationError(who + ": coop rate must be non-negative");
}

double vm_workload(const VmSpec& spec, long users_assigned) {
    const long total = spec.total_users();
    if (users_assigned < 0 || users_assigned > total) {
        throw ValidationError("assigned users " + std::to_string(users_assigned) + " outside [0, " +
                              std::to_string(total) + "]");
    }
    if (users_assigned == 0) return 0.0;
    if (spec.profile == Profile::Constant) return spec.peak_workload;
    return spec.peak_workload * static_cast<double>(users_assigned) / static_cast<double>(total);
}

AppCategory classify_app(double rate_mbps) {
    if (!std::isfinite(rate_mbps) || rate_mbps < 0.0) throw ValidationError("data rate must be non-negative");
    if (rate_mbps <= 0.75) return AppCategory::Basic;
    if (rate_mbps <= 2.5) return AppCategory::Intermediate;
    return AppCategory::Advanced;
}

Site sync_root(std::span<const Site> replicas) {
    if (replicas.empty()) throw ValidationError("a VM needs at least one replica");
    // Any cloud replica outranks every fog replica.
    auto by_tier_then_site = [](const Site& a, const Site& b) {
        const bool ac = a.tier == Tier::Cloud;
        const bool bc = b.tier == Tier::Cloud;
        if (ac != bc) return ac;
        return a < b;
    };
    return *std::ranges::min_element(replicas, by_tier_then_site);
}

std::vector<Demand> sync_demands(std::span<const Site> replicas, const VmSpec& spec) {
    std::set<Site> unique(replicas.begin(), replicas.end());
    if (unique.size() != replicas.size()) throw ValidationError("duplicate replica site");
    const Site root = sync_root(replicas);
    std::vector<Demand> out;
    out.reserve(replicas.size() - 1);
    for (const Site& s : unique) {
        if (s != root) out.push_back({root, s, spec.sync_rate_mbps});
    }
    return out;
}

Demand coop_demand(const VmSpec& a, std::span<const Site> a_replicas, std::size_t b_index,
                   std::span<const Site> b_replicas) {
    if (!a.coop_peer || a.coop_peer->vm_index != b_index)
        throw ValidationError("no cooperation link declared from '" + a.name + "'");
    if (a_replicas.empty() || b_replicas.empty())
        throw ValidationError("cooperation declared but a peer VM is unplaced");
    return {sync_root(a_replicas), sync_root(b_replicas), a.coop_peer->rate_mbps};
}

}  // namespace cloudfog
