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

#include <fstream>
#include <numeric>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cloudfog/error.hpp"
#include "cloudfog/sweep.hpp"
#include "test_support.hpp"

namespace cloudfog {
namespace {

using testing::N;

GridSpec reference_grid() {
    std::ifstream in(testing::data_dir() / "reference_grid.json");
    const auto doc = nlohmann::json::parse(in);
    auto topo = std::make_shared<const Topology>(load_topology_file(testing::data_dir() / "att25.json"));
    return grid_from_json(doc, topo, load_params_file(testing::data_dir() / "reference_params.json"));
}

TEST(Sweep, ReferenceGridHas42Rows) {
    const auto grid = reference_grid();
    EXPECT_EQ(grid.size(), 42u);
    const auto rows = run_grid(grid);
    ASSERT_EQ(rows.size(), 42u);
    // Nested order: profile, workload, rate.
    EXPECT_EQ(rows.front().profile, grid.profiles.front());
    EXPECT_EQ(rows.front().peak_workload, 0.1);
    EXPECT_EQ(rows.front().rate_mbps, 0.1);
    EXPECT_EQ(rows[1].rate_mbps, 1.0);
    EXPECT_EQ(rows[7].peak_workload, 0.5);
    EXPECT_EQ(rows.back().profile, grid.profiles.back());
    EXPECT_EQ(rows.back().rate_mbps, 200.0);
}

TEST(Sweep, SinglePointMatchesDirectSolve) {
    auto grid = reference_grid();
    grid.profiles = {Profile::Constant};
    grid.peak_workloads = {0.5};
    grid.rates_mbps = {100.0};
    const auto rows = run_grid(grid);
    ASSERT_EQ(rows.size(), 1u);

    const auto sc = grid_point(grid, Profile::Constant, 0.5, 100.0, grid.pue_sets.front());
    const auto sol = solve_exact_single_vm(sc);
    const auto d = distribution(sol, sc);
    EXPECT_EQ(rows[0].distribution(), d);
    EXPECT_EQ(rows[0].replica_count_by_tier, replica_counts(sol));
    EXPECT_EQ(rows[0].total_watts, sol.total_watts());
    EXPECT_EQ(rows[0].pct_users_cloud, 44.0);
    EXPECT_EQ(rows[0].pct_users_metro, 56.0);
}

TEST(Sweep, GridPointOverridesVmAndPues) {
    const auto grid = reference_grid();
    const PueSet pue{1.1, 1.2, 1.7};
    const auto sc = grid_point(grid, Profile::Linear, 0.7, 33.0, pue);
    ASSERT_EQ(sc.vms.size(), 1u);
    EXPECT_EQ(sc.vms[0].profile, Profile::Linear);
    EXPECT_EQ(sc.vms[0].peak_workload, 0.7);
    EXPECT_EQ(sc.vms[0].rate_per_user_mbps, 33.0);
    EXPECT_EQ(sc.params.pue_cloud, 1.1);
    EXPECT_EQ(sc.params.pue_metro, 1.2);
    EXPECT_EQ(sc.params.pue_access, 1.7);
    EXPECT_EQ(sc.vms[0].total_users(), 800);
}

TEST(Sweep, LinearRowsAreAllAccessAboveOneMbps) {
    for (const auto& row : run_grid(reference_grid())) {
        if (row.profile != Profile::Linear || row.rate_mbps < 1.0) continue;
        EXPECT_EQ(row.distribution(), (TierDistribution{0, 0, 100})) << row.peak_workload << " " << row.rate_mbps;
    }
}

TEST(Sweep, PercentagesSumToHundred) {
    for (const auto& row : run_grid(reference_grid())) {
        EXPECT_NEAR(row.pct_users_cloud + row.pct_users_metro + row.pct_users_access, 100.0, 1e-9);
        const int replicas = std::accumulate(row.replica_count_by_tier.begin(), row.replica_count_by_tier.end(), 0);
        EXPECT_GE(replicas, 1);
        EXPECT_LE(replicas, 25);
    }
}

TEST(Sweep, RowCountIsProductOfDimensions) {
    auto grid = reference_grid();
    grid.profiles = {Profile::Linear};
    grid.peak_workloads = {0.2, 0.4};
    grid.rates_mbps = {1, 2, 3};
    grid.pue_sets = {{1.3, 1.4, 1.5}, {1.0, 1.0, 1.0}};
    const auto rows = run_grid(grid);
    EXPECT_EQ(rows.size(), 12u);
    // PUE sets vary fastest.
    EXPECT_EQ(rows[0].pue_set, grid.pue_sets[0]);
    EXPECT_EQ(rows[1].pue_set, grid.pue_sets[1]);
}

TEST(Sweep, ResultIndependentOfJobCount) {
    const auto grid = reference_grid();
    const auto serial = run_grid(grid, 1);
    EXPECT_EQ(run_grid(grid, 3), serial);
    EXPECT_EQ(run_grid(grid, 64), serial);
}

TEST(Sweep, ErrorsNameTheGridPoint) {
    auto grid = reference_grid();
    grid.base.params.server_capacity_workload = 0.3;
    grid.profiles = {Profile::Constant};
    grid.peak_workloads = {0.1, 0.5};
    try {
        run_grid(grid, 2);
        FAIL() << "expected InfeasibleError";
    } catch (const InfeasibleError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("0.5"), std::string::npos) << msg;
        EXPECT_NE(msg.find("constant"), std::string::npos) << msg;
    }
}

TEST(Sweep, GridValidation) {
    auto grid = reference_grid();
    grid.rates_mbps.clear();
    EXPECT_THROW(grid.validate(), ValidationError);
    EXPECT_THROW(run_grid(grid), ValidationError);
    grid = reference_grid();
    grid.base.vms.push_back(grid.base.vms.front());
    EXPECT_THROW(grid.validate(), ValidationError);
}

TEST(Distribution, Examples) {
    const auto t = testing::ring(4, {N(1)});
    VmSpec vm = testing::make_vm(*t, Profile::Linear, 0.5, 1.0, 0.0, 100);
    const auto sc = testing::make_scenario(t, PowerParams{}, {vm});

    PlacementSolution all_cloud;
    VmPlacement vp;
    vp.replicas = {{N(1), Tier::Cloud}};
    for (NodeId n : t->nodes()) vp.assignment.emplace(n, Site{N(1), Tier::Cloud});
    all_cloud.vms.push_back(vp);
    EXPECT_EQ(distribution(all_cloud, sc), (TierDistribution{100, 0, 0}));

    // 44 cloud users, 56 metro users.
    auto split_vm = vm;
    split_vm.users_per_node = {{N(1), 44}, {N(2), 30}, {N(3), 26}};
    const auto split_sc = testing::make_scenario(t, PowerParams{}, {split_vm});
    PlacementSolution split;
    split.vms.push_back({{{N(1), Tier::Cloud}, {N(2), Tier::MetroFog}, {N(3), Tier::MetroFog}},
                         {{N(1), {N(1), Tier::Cloud}}, {N(2), {N(2), Tier::MetroFog}}, {N(3), {N(3), Tier::MetroFog}}}});
    EXPECT_EQ(distribution(split, split_sc), (TierDistribution{44, 56, 0}));
    EXPECT_EQ(replica_counts(split), (std::array<int, kTierCount>{1, 2, 0}));

    PlacementSolution empty;
    empty.vms.push_back({});
    EXPECT_THROW(distribution(empty, sc), ValidationError);
}

}  // namespace
}  // namespace cloudfog
