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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cloudfog/error.hpp"
#include "cloudfog/sweep.hpp"
#include "test_support.hpp"

namespace {

using namespace cloudfog;
using testing::N;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
    std::printf("%s %-8s %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

std::string dist_text(const TierDistribution& d) {
    return fmt("(%g/%g/%g)", d.pct_cloud, d.pct_metro, d.pct_access);
}

std::shared_ptr<const Topology> att25() {
    return std::make_shared<const Topology>(load_topology_file(testing::data_dir() / "att25.json"));
}

PowerParams reference() { return load_params_file(testing::data_dir() / "reference_params.json"); }

GridSpec reference_grid() {
    std::ifstream in(testing::data_dir() / "reference_grid.json");
    return grid_from_json(nlohmann::json::parse(in), att25(), reference());
}

const SweepRow& row_at(const std::vector<SweepRow>& rows, Profile p, double w, double r) {
    for (const auto& row : rows)
        if (row.profile == p && row.peak_workload == w && row.rate_mbps == r) return row;
    throw std::runtime_error("grid point missing");
}

void a1_oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937 rng(5);
    const auto random5 = std::make_shared<const Topology>(
        Topology::create("random5", testing::node_range(5), testing::random_connected_edges(5, rng), {N(2), N(4), N(5)}));
    const std::vector<std::shared_ptr<const Topology>> topologies{testing::ring(4, {N(1), N(3)}), random5};
    int checked = 0;
    double worst = 0.0;
    for (const auto& t : topologies)
        for (double sync : {0.0, 1.0})
            for (Profile prof : {Profile::Constant, Profile::Linear})
                for (double w : testing::grid_workloads())
                    for (double r : testing::grid_rates()) {
                        const auto sc = testing::make_scenario(t, reference(), {testing::make_vm(*t, prof, w, r, sync)});
                        const double exact = evaluate(solve_exact_single_vm(sc), sc).total_watts();
                        const double brute = evaluate(brute_force_oracle(sc), sc).total_watts();
                        worst = std::max(worst, testing::rel_diff(exact, brute));
                        ++checked;
                    }
    const double elapsed = seconds_since(start);
    report("A1", checked == 168 && worst <= 1e-9 && elapsed < 30.0,
           fmt("exact vs brute force on %g instances, worst rel diff %.3g, %.2f s", checked, worst, elapsed));
}

void a2_monotone_offload(const std::vector<SweepRow>& rows) {
    bool ok = true;
    std::string where;
    for (Profile prof : {Profile::Constant, Profile::Linear})
        for (double w : testing::grid_workloads()) {
            const SweepRow* prev = nullptr;
            for (double r : testing::grid_rates()) {
                const SweepRow& row = row_at(rows, prof, w, r);
                if (prev && (row.pct_users_access < prev->pct_users_access || row.pct_users_cloud > prev->pct_users_cloud)) {
                    ok = false;
                    where = std::string(to_string(prof)) + fmt(" %g at %g Mbps", w, r);
                }
                prev = &row;
            }
        }
    report("A2", ok, ok ? "access share non-decreasing and cloud share non-increasing in rate" : "violated: " + where);
}

void a3_linear_invariance(const std::vector<SweepRow>& rows) {
    bool ok = true;
    for (double r : testing::grid_rates()) {
        const auto base = row_at(rows, Profile::Linear, 0.1, r).distribution();
        for (double w : {0.5, 1.0}) ok &= row_at(rows, Profile::Linear, w, r).distribution() == base;
    }
    report("A3", ok, "linear 10/50/100% rows share one distribution at every rate");
}

void a4_reference_sweep(const std::vector<SweepRow>& rows) {
    const TierDistribution all_cloud{100, 0, 0}, all_metro{0, 100, 0}, all_access{0, 0, 100};

    bool i_ok = true;
    for (double w : testing::grid_workloads())
        for (double r : testing::grid_rates())
            if (r >= 1.0) i_ok &= row_at(rows, Profile::Linear, w, r).distribution() == all_access;
    report("A4(i)", i_ok, "linear profile at >= 1 Mbps is fully on access fogs");

    const auto c10 = row_at(rows, Profile::Constant, 0.1, 20).distribution();
    report("A4(ii)a", c10 == all_metro, "constant 10% at 20 Mbps fully on metro fogs: got " + dist_text(c10));
    const auto c50 = row_at(rows, Profile::Constant, 0.5, 20).distribution();
    const auto c100 = row_at(rows, Profile::Constant, 1.0, 20).distribution();
    report("A4(ii)b", c50 == all_cloud && c100 == all_cloud,
           "constant 50%/100% at 20 Mbps fully in the cloud: got " + dist_text(c50) + " " + dist_text(c100));

    // Hop structure around the cloud root.
    const auto grid = reference_grid();
    const auto sc = grid_point(grid, Profile::Constant, 0.5, 100.0, grid.pue_sets.front());
    const auto sol = solve_exact_single_vm(sc);
    std::vector<Site> clouds;
    std::set<int> metro, access, far;
    for (const Site& s : sol.vms[0].replicas) {
        if (s.tier == Tier::Cloud) clouds.push_back(s);
        if (s.tier == Tier::MetroFog) metro.insert(s.node.value);
        if (s.tier == Tier::AccessFog) access.insert(s.node.value);
    }
    bool iii_ok = clouds.size() == 1 && access.empty();
    if (iii_ok) {
        for (NodeId n : sc.topology->nodes())
            if (sc.topology->min_hops(n, clouds[0].node) >= 2) far.insert(n.value);
        iii_ok = metro == far;
    }
    report("A4(iii)", iii_ok,
           fmt("constant 50%% at 100 Mbps: root cloud at node %g, %g metro replicas, %g nodes >= 2 hops away",
               clouds.empty() ? -1 : clouds[0].node.value, static_cast<double>(metro.size()), static_cast<double>(far.size())));

    report("A4", i_ok && c10 == all_metro && c50 == all_cloud && c100 == all_cloud && iii_ok,
           "qualitative tier distributions of the reference sweep");
}

void a5_equal_pue() {
    const auto t = att25();
    auto p = reference();
    p.pue_cloud = p.pue_metro = p.pue_access = 1.0;
    bool linear_ok = true;
    for (double w : testing::grid_workloads())
        for (double r : testing::grid_rates()) {
            const auto sc = testing::make_scenario(t, p, {testing::make_vm(*t, Profile::Linear, w, r)});
            linear_ok &= distribution(solve_exact_single_vm(sc), sc) == TierDistribution{0, 0, 100};
        }
    bool constant_ok = true;
    for (double w : testing::grid_workloads()) {
        const auto sc = testing::make_scenario(t, p, {testing::make_vm(*t, Profile::Constant, w, 0.0)});
        const auto sol = solve_exact_single_vm(sc);
        constant_ok &= sol.vms[0].replicas.size() == 1 && sol.vms[0].replicas[0].tier == Tier::Cloud;
    }
    report("A5", linear_ok && constant_ok, "equal PUEs: linear goes to access fogs, zero-rate constant stays on one cloud");
}

void a6_determinism(const GridSpec& grid) {
    const auto start = Clock::now();
    const std::string first = cli::emit_report(run_grid(grid, 1), cli::Format::Csv);
    const double elapsed = seconds_since(start);
    const std::string second = cli::emit_report(run_grid(grid, 1), cli::Format::Csv);
    report("A6", first == second && elapsed < 10.0,
           fmt("42-point sweep single-threaded in %.3f s, CSV ", elapsed) + (first == second ? "byte-identical" : "differs"));
}

// Property suites checked against independent oracles.
void a7_properties() {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    bool metric = true;
    for (int g = 0; g < 1000 && metric; ++g) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const auto edges = testing::random_connected_edges(n, rng, 0.15);
        const auto t = Topology::create("g", testing::node_range(n), edges, {N(1)});
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                const int h = t.min_hops(N(a), N(b));
                metric &= h == testing::bfs_hops(edges, N(a), N(b)) && h == t.min_hops(N(b), N(a)) && (h == 0) == (a == b);
                for (int c = 1; c <= n; ++c) metric &= h <= t.min_hops(N(a), N(c)) + t.min_hops(N(c), N(b));
            }
    }

    bool transport = true;
    const PowerParams p = reference();
    for (int i = 0; i < 500; ++i) {
        const RouteSegments s{std::uniform_int_distribution<int>(0, 2)(rng), std::uniform_int_distribution<int>(0, 2)(rng),
                              std::uniform_int_distribution<int>(0, 9)(rng), std::uniform_int_distribution<int>(0, 10)(rng)};
        const RouteSegments s2{1, 0, 3, 4};
        const double r1 = 100 * unit(rng), r2 = 100 * unit(rng), k = 10 * unit(rng);
        transport &= testing::rel_diff(transport_power(s, k * r1, p), k * transport_power(s, r1, p)) <= 1e-12 ||
                     transport_power(s, r1, p) == 0.0;
        transport &= testing::rel_diff(transport_power(s, r1 + r2, p), transport_power(s, r1, p) + transport_power(s, r2, p)) <= 1e-12 ||
                     transport_power(s, r1 + r2, p) == 0.0;
        transport &= std::abs(transport_power(s + s2, r1, p) - transport_power(s, r1, p) - transport_power(s2, r1, p)) <= 1e-9;
    }

    bool workload = true;
    for (int i = 0; i < 500; ++i) {
        VmSpec vm;
        vm.profile = i % 2 ? Profile::Constant : Profile::Linear;
        vm.peak_workload = 0.01 + 0.99 * unit(rng);
        vm.users_per_node = {{N(1), std::uniform_int_distribution<int>(1, 1000)(rng)}};
        const long total = vm.total_users();
        const long a = std::uniform_int_distribution<long>(0, total)(rng);
        const long b = total - a;
        if (vm.profile == Profile::Linear) {
            workload &= std::abs(vm_workload(vm, a) + vm_workload(vm, b) - vm.peak_workload) <= 1e-12;
        } else {
            workload &= (a == 0 || vm_workload(vm, a) == vm.peak_workload) && vm_workload(vm, 0) == 0.0;
        }
        workload &= vm_workload(vm, total) == vm.peak_workload || std::abs(vm_workload(vm, total) - vm.peak_workload) <= 1e-15;
    }

    bool rows_ok = true;
    auto grid = reference_grid();
    grid.peak_workloads = {0.3, 0.9};
    grid.rates_mbps = {0.5, 5, 500};
    grid.pue_sets = {{1.3, 1.4, 1.5}, {1.0, 1.0, 1.0}};
    const auto rows = run_grid(grid, 2);
    rows_ok &= rows.size() == grid.size() && rows.size() == 24;
    for (const auto& row : rows)
        rows_ok &= std::abs(row.pct_users_cloud + row.pct_users_metro + row.pct_users_access - 100.0) <= 1e-9;

    report("A7", metric && transport && workload && rows_ok,
           std::string("min_hops metric ") + (metric ? "ok" : "FAILED") + ", transport linearity " +
               (transport ? "ok" : "FAILED") + ", workload additivity " + (workload ? "ok" : "FAILED") +
               ", percentage/row-count " + (rows_ok ? "ok" : "FAILED"));
}

void guarded(const char* id, const std::function<void()>& check) {
    try {
        check();
    } catch (const std::exception& e) {
        report(id, false, std::string("threw: ") + e.what());
    }
}

}  // namespace

int main() {
    std::vector<SweepRow> rows;
    GridSpec grid;
    try {
        grid = reference_grid();
        rows = run_grid(grid, 1);
    } catch (const std::exception& e) {
        std::printf("FAIL setup    reference sweep threw: %s\n", e.what());
        return 1;
    }
    guarded("A1", a1_oracle_equivalence);
    guarded("A2", [&] { a2_monotone_offload(rows); });
    guarded("A3", [&] { a3_linear_invariance(rows); });
    guarded("A4", [&] { a4_reference_sweep(rows); });
    guarded("A5", a5_equal_pue);
    guarded("A6", [&] { a6_determinism(grid); });
    guarded("A7", a7_properties);
    std::printf("%d criterion line(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
