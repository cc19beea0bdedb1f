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

#include <filesystem>
#include <fstream>
#include <memory>

#include <benchmark/benchmark.h>
#include <nlohmann/json.hpp>

#include "cloudfog/sweep.hpp"

namespace {

using namespace cloudfog;

const std::filesystem::path kData = CLOUDFOG_DATA_DIR;

GridSpec reference_grid() {
    std::ifstream in(kData / "reference_grid.json");
    auto topo = std::make_shared<const Topology>(load_topology_file(kData / "att25.json"));
    return grid_from_json(nlohmann::json::parse(in), topo, load_params_file(kData / "reference_params.json"));
}

void BM_SolveExact(benchmark::State& state) {
    const auto grid = reference_grid();
    const auto sc = grid_point(grid, Profile::Constant, 0.5, static_cast<double>(state.range(0)), grid.pue_sets.front());
    for (auto _ : state) benchmark::DoNotOptimize(solve_exact_single_vm(sc));
}
BENCHMARK(BM_SolveExact)->Arg(1)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_BruteForceRing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<NodeId> nodes;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 1; i <= n; ++i) {
        nodes.push_back(NodeId{i});
        edges.emplace_back(NodeId{i}, NodeId{i % n + 1});
    }
    Scenario sc;
    sc.topology = std::make_shared<const Topology>(Topology::create("ring", nodes, edges, nodes));
    VmSpec vm;
    vm.profile = Profile::Constant;
    vm.peak_workload = 0.5;
    vm.rate_per_user_mbps = 50;
    vm.sync_rate_mbps = 1;
    for (NodeId node : nodes) vm.users_per_node[node] = 10;
    sc.vms = {vm};
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(sc));
}
BENCHMARK(BM_BruteForceRing)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ReferenceSweep(benchmark::State& state) {
    const auto grid = reference_grid();
    for (auto _ : state) benchmark::DoNotOptimize(run_grid(grid, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ReferenceSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
