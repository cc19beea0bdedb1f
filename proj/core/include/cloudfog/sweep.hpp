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

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cloudfog/placement.hpp"

namespace cloudfog {

struct PueSet {
    double cloud = 1.3;
    double metro = 1.4;
    double access = 1.5;

    friend bool operator==(const PueSet&, const PueSet&) = default;
};

/// Cross product of VM profiles, peak workloads, user data rates and PUE
/// triples applied to a single-VM base scenario.
struct GridSpec {
    std::vector<Profile> profiles;
    std::vector<double> peak_workloads;
    std::vector<double> rates_mbps;
    std::vector<PueSet> pue_sets;
    /// Supplies topology, params, users and sync rate; its VM's profile,
    /// peak, rate and the PUEs are overwritten per grid point.
    Scenario base;

    std::size_t size() const {
        return profiles.size() * peak_workloads.size() * rates_mbps.size() * pue_sets.size();
    }
    /// Throws ValidationError on an empty dimension or a multi-VM base.
    void validate() const;
};

/// User-weighted share of demand served per tier, in percent.
struct TierDistribution {
    double pct_cloud = 0.0;
    double pct_metro = 0.0;
    double pct_access = 0.0;

    friend bool operator==(const TierDistribution&, const TierDistribution&) = default;
};

struct SweepRow {
    Profile profile = Profile::Linear;
    double peak_workload = 0.0;
    double rate_mbps = 0.0;
    PueSet pue_set;
    double pct_users_cloud = 0.0;
    double pct_users_metro = 0.0;
    double pct_users_access = 0.0;
    std::array<int, kTierCount> replica_count_by_tier{};
    double total_watts = 0.0;

    TierDistribution distribution() const { return {pct_users_cloud, pct_users_metro, pct_users_access}; }
    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Distribution of the scenario's users over serving tiers, summed over all
/// VMs. Throws ValidationError if the solution assigns nobody.
TierDistribution distribution(const PlacementSolution& solution, const Scenario& scenario);

/// Replica counts per tier, summed over all VMs.
std::array<int, kTierCount> replica_counts(const PlacementSolution& solution);

/// Scenario for one grid point.
Scenario grid_point(const GridSpec& grid, Profile profile, double peak_workload, double rate_mbps, const PueSet& pue);

/// Solves every grid point with solve_exact_single_vm. Rows are ordered by
/// (profile, workload, rate, PUE set) following the grid's list order,
/// independent of `jobs`. Solver errors are rethrown with the grid point
/// prepended to the message.
std::vector<SweepRow> run_grid(const GridSpec& grid, unsigned jobs = 1);

/// Parses `profiles`, `peak_workloads`, `rates_mbps`, `pue_sets`,
/// `users_per_node` and optional `sync_rate_mbps` from a grid document.
GridSpec grid_from_json(const nlohmann::json& doc, std::shared_ptr<const Topology> topology, PowerParams params);

}  // namespace cloudfog
