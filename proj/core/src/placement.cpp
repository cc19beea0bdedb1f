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

#include "cloudfog/placement.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "cloudfog/error.hpp"

namespace cloudfog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void add_flow(PowerBreakdown& out, const RouteSegments& segments, double rate_mbps, const PowerParams& params) {
    const auto parts = transport_power_by_layer(segments, rate_mbps, params);
    for (std::size_t i = 0; i < kLayerCount; ++i) out.network_watts[i] += parts[i];
}

bool baseline_active(const VmSpec& vm) { return vm.profile == Profile::Constant; }

void require_capacity(const VmSpec& vm, const PowerParams& params) {
    const double cap = params.server_capacity_workload;
    const std::string who = vm.name.empty() ? "vm" : "vm '" + vm.name + "'";
    for (const auto& [node, users] : vm.users_per_node) {
        if (users > 0 && vm_workload(vm, users) > cap) {
            throw InfeasibleError(who + ": users of node " + to_string(node) +
                                  " alone exceed one server's capacity");
        }
    }
    // A single replica may end up serving every user.
    if (vm.peak_workload > cap) throw InfeasibleError(who + ": peak workload exceeds one server's capacity");
}

// Cost of routing the sync root's flow to every other replica of one VM.
using RootCost = std::function<double(const Site&)>;

struct SingleVmResult {
    VmPlacement placement;
    double objective = kInf;
};

// The separable single-VM problem. For a fixed sync root the cost of a
// solution is a root-dependent constant plus one independent term per user
// region.
class SingleVmProblem {
 public:
    SingleVmProblem(const Topology& topology, const PowerParams& params, const VmSpec& vm)
        : topology_(topology), params_(params), vm_(vm) {
        for (const auto& [node, users] : vm.users_per_node) {
            if (users > 0) user_nodes_.push_back(node);
        }
    }

    SingleVmResult solve(const RootCost& extra) const {
        SingleVmResult best;
        for (NodeId c : topology_.cloud_candidates()) consider(best, solve_cloud_root(c, extra));
        for (Tier t : {Tier::MetroFog, Tier::AccessFog}) consider(best, solve_fog_root(t, extra));
        if (best.objective == kInf) throw InfeasibleError("no feasible placement for vm '" + vm_.name + "'");
        return best;
    }

 private:
    struct Choice {
        Site site;
        double cost = kInf;
    };

    static void consider(SingleVmResult& best, std::optional<SingleVmResult> candidate) {
        if (candidate && candidate->objective < best.objective) best = std::move(*candidate);
    }

    double users_rate(NodeId n) const { return vm_.users_at(n) * vm_.rate_per_user_mbps; }

    double fog_replica_power(Tier tier, NodeId n) const {
        const double workload = vm_workload(vm_, vm_.users_at(n));
        return facility_power(replica_it_power(workload, params_, baseline_active(vm_)), tier, params_);
    }

    double fog_option(Tier tier, NodeId n, const Site& root) const {
        const Site site{n, tier};
        return fog_replica_power(tier, n) +
               transport_power(route_user_to_site(topology_, n, site), users_rate(n), params_) +
               transport_power(route_site_to_site(topology_, root, site), vm_.sync_rate_mbps, params_);
    }

    std::optional<SingleVmResult> solve_cloud_root(NodeId c, const RootCost& extra) const {
        const Site root{c, Tier::Cloud};
        const double pue = params_.pue(Tier::Cloud);
        const double total = static_cast<double>(vm_.total_users());
        // Constant profile: the cloud replica costs its full workload once.
        // Linear profile: its cost splits per served user.
        double objective = pue * (baseline_active(vm_) ? params_.server_baseline_power : 0.0);
        if (vm_.profile == Profile::Constant) objective += pue * vm_.peak_workload * params_.server_prop_power;

        std::vector<Choice> chosen;
        std::vector<double> cloud_cost;
        chosen.reserve(user_nodes_.size());
        for (NodeId n : user_nodes_) {
            double via_cloud = transport_power(route_user_to_site(topology_, n, root), users_rate(n), params_);
            if (vm_.profile == Profile::Linear)
                via_cloud += pue * vm_.peak_workload * vm_.users_at(n) / total * params_.server_prop_power;
            Choice best{root, via_cloud};
            for (Tier t : {Tier::MetroFog, Tier::AccessFog}) {
                const double cost = fog_option(t, n, root);
                if (cost < best.cost) best = {Site{n, t}, cost};
            }
            chosen.push_back(best);
            cloud_cost.push_back(via_cloud);
        }

        // The cloud replica must serve someone; move the region with the
        // smallest regret onto it if nobody picked it.
        const bool cloud_used = std::ranges::any_of(chosen, [](const Choice& ch) { return ch.site.tier == Tier::Cloud; });
        if (!cloud_used) {
            std::size_t pick = 0;
            double least = kInf;
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                const double regret = cloud_cost[i] - chosen[i].cost;
                if (regret < least) {
                    least = regret;
                    pick = i;
                }
            }
            chosen[pick] = {root, cloud_cost[pick]};
        }

        for (const auto& ch : chosen) objective += ch.cost;
        objective += extra(root);
        return assemble(chosen, objective);
    }

    std::optional<SingleVmResult> solve_fog_root(Tier root_tier, const RootCost& extra) const {
        // Without a cloud the root is the lowest (node, tier) replica, which
        // must be a fog of the lowest user region.
        const NodeId first = user_nodes_.front();
        const Site root{first, root_tier};
        std::vector<Choice> chosen;
        chosen.reserve(user_nodes_.size());
        chosen.push_back({root, fog_replica_power(root_tier, first) +
                                    transport_power(route_user_to_site(topology_, first, root),
                                                    users_rate(first), params_)});
        double objective = chosen.front().cost;
        for (std::size_t i = 1; i < user_nodes_.size(); ++i) {
            const NodeId n = user_nodes_[i];
            Choice best;
            for (Tier t : {Tier::MetroFog, Tier::AccessFog}) {
                const double cost = fog_option(t, n, root);
                if (cost < best.cost) best = {Site{n, t}, cost};
            }
            objective += best.cost;
            chosen.push_back(best);
        }
        objective += extra(root);
        return assemble(chosen, objective);
    }

    std::optional<SingleVmResult> assemble(const std::vector<Choice>& chosen, double objective) const {
        SingleVmResult result;
        result.objective = objective;
        std::set<Site> replicas;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            replicas.insert(chosen[i].site);
            result.placement.assignment.emplace(user_nodes_[i], chosen[i].site);
        }
        result.placement.replicas.assign(replicas.begin(), replicas.end());
        return result;
    }

    const Topology& topology_;
    const PowerParams& params_;
    const VmSpec& vm_;
    std::vector<NodeId> user_nodes_;
};

double no_extra(const Site&) { return 0.0; }

double site_flow_power(const Topology& t, const Site& a, const Site& b, double rate, const PowerParams& params) {
    if (a == b) return 0.0;
    return transport_power(route_site_to_site(t, a, b), rate, params);
}

void require_single_vm(const Scenario& scenario) {
    if (scenario.vms.size() != 1)
        throw ValidationError("single-VM solver called on a scenario with " + std::to_string(scenario.vms.size()) + " VMs");
}

}  // namespace

void Scenario::validate() const {
    if (!topology) throw ValidationError("scenario has no topology");
    params.validate();
    if (vms.empty()) throw ValidationError("scenario has no VMs");
    for (std::size_t i = 0; i < vms.size(); ++i) {
        const VmSpec& vm = vms[i];
        vm.validate();
        for (const auto& [node, users] : vm.users_per_node) {
            if (!topology->contains(node))
                throw ValidationError("vm '" + vm.name + "' has users at unknown node " + to_string(node));
        }
        if (vm.coop_peer && (vm.coop_peer->vm_index >= vms.size() || vm.coop_peer->vm_index == i))
            throw ValidationError("vm '" + vm.name + "' declares an invalid cooperation peer");
    }
}

PowerBreakdown evaluate(const PlacementSolution& solution, const Scenario& scenario) {
    const Topology& topo = *scenario.topology;
    const PowerParams& params = scenario.params;
    if (solution.vms.size() != scenario.vms.size())
        throw ConstraintViolation("solution places " + std::to_string(solution.vms.size()) + " VMs, scenario has " +
                                  std::to_string(scenario.vms.size()));

    PowerBreakdown out;
    for (std::size_t i = 0; i < scenario.vms.size(); ++i) {
        const VmSpec& vm = scenario.vms[i];
        const VmPlacement& p = solution.vms[i];
        const std::string who = "vm '" + vm.name + "': ";

        std::map<Site, long> served;
        for (const Site& s : p.replicas) {
            try {
                topo.check_site(s);
            } catch (const ValidationError& e) {
                throw ConstraintViolation(who + e.what());
            }
            if (!served.emplace(s, 0).second) throw ConstraintViolation(who + "duplicate replica " + to_string(s));
        }
        if (served.empty()) throw ConstraintViolation(who + "no replicas");

        for (const auto& [node, site] : p.assignment) {
            if (vm.users_at(node) <= 0)
                throw ConstraintViolation(who + "assignment for node " + to_string(node) + " which has no users");
        }
        for (const auto& [node, users] : vm.users_per_node) {
            if (users <= 0) continue;
            auto it = p.assignment.find(node);
            if (it == p.assignment.end())
                throw ConstraintViolation(who + "users of node " + to_string(node) + " are unassigned");
            const Site& site = it->second;
            auto rep = served.find(site);
            if (rep == served.end())
                throw ConstraintViolation(who + "node " + to_string(node) + " assigned to non-replica " + to_string(site));
            if (site.tier != Tier::Cloud && site.node != node)
                throw ConstraintViolation(who + "fog " + to_string(site) + " cannot serve node " + to_string(node));
            rep->second += users;
            add_flow(out, route_user_to_site(topo, node, site), users * vm.rate_per_user_mbps, params);
        }

        for (const auto& [site, users] : served) {
            if (users == 0) throw ConstraintViolation(who + "replica " + to_string(site) + " serves no users");
            const double workload = vm_workload(vm, users);
            if (workload > params.server_capacity_workload)
                throw ConstraintViolation(who + "replica " + to_string(site) + " exceeds server capacity");
            out.processing_watts[index_of(site.tier)] +=
                facility_power(replica_it_power(workload, params, baseline_active(vm)), site.tier, params);
        }

        for (const Demand& d : sync_demands(p.replicas, vm)) add_flow(out, route_site_to_site(topo, d.from, d.to), d.rate_mbps, params);
    }

    for (std::size_t i = 0; i < scenario.vms.size(); ++i) {
        const VmSpec& vm = scenario.vms[i];
        if (!vm.coop_peer) continue;
        const std::size_t j = vm.coop_peer->vm_index;
        const Demand d = coop_demand(vm, solution.vms[i].replicas, j, solution.vms[j].replicas);
        if (d.from != d.to) add_flow(out, route_site_to_site(topo, d.from, d.to), d.rate_mbps, params);
    }
    return out;
}

PlacementSolution solve_exact_single_vm(const Scenario& scenario) {
    scenario.validate();
    require_single_vm(scenario);
    const VmSpec& vm = scenario.vms.front();
    require_capacity(vm, scenario.params);

    SingleVmProblem problem(*scenario.topology, scenario.params, vm);
    PlacementSolution solution;
    solution.vms.push_back(problem.solve(no_extra).placement);
    solution.breakdown = evaluate(solution, scenario);
    return solution;
}

PlacementSolution brute_force_oracle(const Scenario& scenario) {
    scenario.validate();
    require_single_vm(scenario);
    const Topology& topo = *scenario.topology;
    if (topo.node_count() > kBruteForceMaxNodes) {
        throw InstanceTooLarge("instance too large: brute force accepts at most " +
                               std::to_string(kBruteForceMaxNodes) + " nodes, got " + std::to_string(topo.node_count()));
    }
    const VmSpec& vm = scenario.vms.front();

    std::vector<NodeId> user_nodes;
    for (const auto& [node, users] : vm.users_per_node) {
        if (users > 0) user_nodes.push_back(node);
    }
    const std::size_t k = user_nodes.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < k; ++i) combos *= kTierCount;

    // Cloud sites first, then the cloud-free family.
    std::vector<std::optional<NodeId>> roots(topo.cloud_candidates().begin(), topo.cloud_candidates().end());
    roots.emplace_back(std::nullopt);

    std::optional<PlacementSolution> best;
    double best_total = kInf;
    std::vector<Tier> choice(k);
    for (const auto& cloud : roots) {
        for (std::size_t code = 0; code < combos; ++code) {
            // Node 0 is the most significant digit so cloud-heavy, low-id
            // choices come first.
            std::size_t rest = code;
            for (std::size_t i = k; i-- > 0;) {
                choice[i] = kAllTiers[rest % kTierCount];
                rest /= kTierCount;
            }
            const bool uses_cloud = std::ranges::find(choice, Tier::Cloud) != choice.end();
            if (uses_cloud != cloud.has_value()) continue;

            VmPlacement p;
            std::set<Site> replicas;
            for (std::size_t i = 0; i < k; ++i) {
                const Site s = choice[i] == Tier::Cloud ? Site{*cloud, Tier::Cloud} : Site{user_nodes[i], choice[i]};
                p.assignment.emplace(user_nodes[i], s);
                replicas.insert(s);
            }
            p.replicas.assign(replicas.begin(), replicas.end());

            PlacementSolution candidate;
            candidate.vms.push_back(std::move(p));
            try {
                candidate.breakdown = evaluate(candidate, scenario);
            } catch (const ConstraintViolation&) {
                continue;  // over capacity
            }
            if (candidate.total_watts() < best_total) {
                best_total = candidate.total_watts();
                best = std::move(candidate);
            }
        }
    }
    if (!best) throw InfeasibleError("no feasible placement for vm '" + vm.name + "'");
    return *best;
}

PlacementSolution solve_greedy_multi_vm(const Scenario& scenario) {
    scenario.validate();
    const Topology& topo = *scenario.topology;
    const PowerParams& params = scenario.params;
    for (const VmSpec& vm : scenario.vms) require_capacity(vm, params);

    // Cooperation rate between every pair, whichever side declared it.
    const std::size_t count = scenario.vms.size();
    std::vector<std::vector<double>> coop(count, std::vector<double>(count, 0.0));
    for (std::size_t i = 0; i < count; ++i) {
        if (const auto& peer = scenario.vms[i].coop_peer) {
            coop[i][peer->vm_index] += peer->rate_mbps;
            coop[peer->vm_index][i] += peer->rate_mbps;
        }
    }

    PlacementSolution greedy;
    std::vector<Site> roots;
    for (std::size_t k = 0; k < count; ++k) {
        auto extra = [&](const Site& root) {
            double watts = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                if (coop[k][j] > 0.0) watts += site_flow_power(topo, root, roots[j], coop[k][j], params);
            }
            return watts;
        };
        SingleVmProblem problem(topo, params, scenario.vms[k]);
        greedy.vms.push_back(problem.solve(extra).placement);
        roots.push_back(sync_root(greedy.vms.back().replicas));
    }
    greedy.breakdown = evaluate(greedy, scenario);

    // All-cloud baseline: every VM as one replica on a shared cloud site.
    for (NodeId c : topo.cloud_candidates()) {
        PlacementSolution baseline;
        const Site cloud{c, Tier::Cloud};
        for (const VmSpec& vm : scenario.vms) {
            VmPlacement p;
            p.replicas = {cloud};
            for (const auto& [node, users] : vm.users_per_node) {
                if (users > 0) p.assignment.emplace(node, cloud);
            }
            baseline.vms.push_back(std::move(p));
        }
        baseline.breakdown = evaluate(baseline, scenario);
        if (baseline.total_watts() < greedy.total_watts()) greedy = std::move(baseline);
    }
    return greedy;
}

}  // namespace cloudfog
