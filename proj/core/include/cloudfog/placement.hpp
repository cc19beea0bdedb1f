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
#include <memory>
#include <vector>

#include "cloudfog/power_model.hpp"
#include "cloudfog/topology.hpp"
#include "cloudfog/workload.hpp"

namespace cloudfog {

struct Scenario {
    std::shared_ptr<const Topology> topology;
    PowerParams params;
    std::vector<VmSpec> vms;

    /// Checks params, every VM, user nodes against the topology, and
    /// cooperation peer indices. Throws ValidationError.
    void validate() const;
};

/// Replicas of one VM and the serving site of every user-bearing node.
struct VmPlacement {
    std::vector<Site> replicas;          // ascending (node, tier)
    std::map<NodeId, Site> assignment;   // user node -> serving replica
};

struct PlacementSolution {
    std::vector<VmPlacement> vms;
    PowerBreakdown breakdown;

    double total_watts() const { return breakdown.total_watts(); }
};

/// Power of a complete placement: PUE-weighted replica power, user
/// transport, synchronization stars and cooperation flows.
///
/// Throws ConstraintViolation if a user node is unassigned or assigned to a
/// site outside the replica set, a fog serves another region, a replica
/// serves nobody or exceeds server capacity, or a cloud sits off a
/// candidate node.
PowerBreakdown evaluate(const PlacementSolution& solution, const Scenario& scenario);

/// Globally optimal placement of a single VM.
///
/// Enumerates the sync root (each cloud candidate, or a fog at the lowest
/// user node when no cloud is used). For a fixed root every region's choice
/// between the root, its own metro fog and its own access fog has an
/// independent additive cost, so the per-region argmin is optimal. Ties go
/// to Cloud, then MetroFog, then AccessFog, then the lower node id.
///
/// Throws ValidationError for multi-VM scenarios and InfeasibleError when a
/// replica would exceed server capacity.
PlacementSolution solve_exact_single_vm(const Scenario& scenario);

/// Largest topology accepted by brute_force_oracle.
inline constexpr std::size_t kBruteForceMaxNodes = 6;

/// Exhaustive search over every per-region choice and cloud site, scored by
/// `evaluate`. Reference for solve_exact_single_vm on tiny instances.
/// Throws InstanceTooLarge above kBruteForceMaxNodes nodes.
PlacementSolution brute_force_oracle(const Scenario& scenario);

/// Heuristic for several VMs with cooperation traffic: VMs are placed in
/// declaration order, each with the exact single-VM method plus the
/// cooperation cost towards already placed peers. Falls back to the best
/// all-cloud placement if that is cheaper.
PlacementSolution solve_greedy_multi_vm(const Scenario& scenario);

}  // namespace cloudfog
