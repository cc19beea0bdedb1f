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

#include "cloudfog/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "cloudfog/error.hpp"
#include "cloudfog/scenario_io.hpp"

namespace cloudfog {

namespace {

struct GridPoint {
    Profile profile;
    double peak_workload;
    double rate_mbps;
    PueSet pue;
};

std::string describe(const GridPoint& p) {
    std::ostringstream os;
    os << "grid point (" << to_string(p.profile) << ", peak " << p.peak_workload << ", " << p.rate_mbps
       << " Mbps, PUE " << p.pue.cloud << "/" << p.pue.metro << "/" << p.pue.access << "): ";
    return os.str();
}

[[noreturn]] void rethrow_annotated(const std::exception_ptr& error, const std::string& prefix) {
    try {
        std::rethrow_exception(error);
    } catch (const InfeasibleError& e) {
        throw InfeasibleError(prefix + e.what());
    } catch (const ConstraintViolation& e) {
        throw ConstraintViolation(prefix + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(prefix + e.what());
    } catch (const ParseError& e) {
        throw ParseError(prefix + e.what());
    } catch (const Error& e) {
        throw Error(prefix + e.what());
    }
}

SweepRow solve_point(const GridSpec& grid, const GridPoint& p) {
    const Scenario sc = grid_point(grid, p.profile, p.peak_workload, p.rate_mbps, p.pue);
    const PlacementSolution sol = solve_exact_single_vm(sc);
    const TierDistribution d = distribution(sol, sc);
    SweepRow row;
    row.profile = p.profile;
    row.peak_workload = p.peak_workload;
    row.rate_mbps = p.rate_mbps;
    row.pue_set = p.pue;
    row.pct_users_cloud = d.pct_cloud;
    row.pct_users_metro = d.pct_metro;
    row.pct_users_access = d.pct_access;
    row.replica_count_by_tier = replica_counts(sol);
    row.total_watts = sol.total_watts();
    return row;
}

}  // namespace

void GridSpec::validate() const {
    if (profiles.empty() || peak_workloads.empty() || rates_mbps.empty() || pue_sets.empty())
        throw ValidationError("grid: every dimension needs at least one value");
    if (base.vms.size() != 1) throw ValidationError("grid: base scenario must hold exactly one VM");
    if (!base.topology) throw ValidationError("grid: base scenario has no topology");
}

TierDistribution distribution(const PlacementSolution& solution, const Scenario& scenario) {
    std::array<double, kTierCount> users{};
    double total = 0.0;
    for (std::size_t i = 0; i < solution.vms.size() && i < scenario.vms.size(); ++i) {
        for (const auto& [node, site] : solution.vms[i].assignment) {
            const double u = scenario.vms[i].users_at(node);
            users[index_of(site.tier)] += u;
            total += u;
        }
    }
    if (total <= 0.0) throw ValidationError("distribution of an empty assignment");
    return {100.0 * users[0] / total, 100.0 * users[1] / total, 100.0 * users[2] / total};
}

std::array<int, kTierCount> replica_counts(const PlacementSolution& solution) {
    std::array<int, kTierCount> counts{};
    for (const VmPlacement& p : solution.vms) {
        for (const Site& s : p.replicas) ++counts[index_of(s.tier)];
    }
    return counts;
}

Scenario grid_point(const GridSpec& grid, Profile profile, double peak_workload, double rate_mbps, const PueSet& pue) {
    Scenario sc = grid.base;
    VmSpec& vm = sc.vms.front();
    vm.profile = profile;
    vm.peak_workload = peak_workload;
    vm.rate_per_user_mbps = rate_mbps;
    sc.params.pue_cloud = pue.cloud;
    sc.params.pue_metro = pue.metro;
    sc.params.pue_access = pue.access;
    return sc;
}

std::vector<SweepRow> run_grid(const GridSpec& grid, unsigned jobs) {
    grid.validate();
    std::vector<GridPoint> points;
    points.reserve(grid.size());
    for (Profile profile : grid.profiles)
        for (double w : grid.peak_workloads)
            for (double r : grid.rates_mbps)
                for (const PueSet& pue : grid.pue_sets) points.push_back({profile, w, r, pue});

    std::vector<SweepRow> rows(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                rows[i] = solve_point(grid, points[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t threads = std::clamp<std::size_t>(jobs, 1, points.size());
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < points.size(); ++i) {
        if (errors[i]) rethrow_annotated(errors[i], describe(points[i]));
    }
    return rows;
}

GridSpec grid_from_json(const nlohmann::json& doc, std::shared_ptr<const Topology> topology, PowerParams params) {
    GridSpec grid;
    try {
        for (const auto& p : doc.at("profiles")) grid.profiles.push_back(profile_from_string(p.get<std::string>()));
        grid.peak_workloads = doc.at("peak_workloads").get<std::vector<double>>();
        grid.rates_mbps = doc.at("rates_mbps").get<std::vector<double>>();
        for (const auto& triple : doc.at("pue_sets")) {
            const auto v = triple.get<std::vector<double>>();
            if (v.size() != 3) throw ParseError("grid: every PUE set needs three values (cloud, metro, access)");
            grid.pue_sets.push_back({v[0], v[1], v[2]});
        }
        grid.base.topology = std::move(topology);
        grid.base.params = params;
        VmSpec vm;
        vm.name = doc.value("name", std::string("vm"));
        vm.profile = grid.profiles.empty() ? Profile::Linear : grid.profiles.front();
        vm.peak_workload = grid.peak_workloads.empty() ? 1.0 : grid.peak_workloads.front();
        vm.sync_rate_mbps = doc.value("sync_rate_mbps", 0.0);
        vm.users_per_node = parse_users(doc.at("users_per_node"), *grid.base.topology);
        grid.base.vms.push_back(std::move(vm));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("grid: ") + e.what());
    }
    grid.validate();
    return grid;
}

}  // namespace cloudfog
