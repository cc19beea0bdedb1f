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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cloudfog/error.hpp"
#include "cloudfog/scenario_io.hpp"

namespace cloudfog::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
    std::string topology_path;
    std::string params_path;
    std::string scenario_path;
    std::string grid_path;
    std::string output_path;
    std::string format = "csv";
    unsigned jobs = 1;
    bool quiet = false;
};

class UsageError : public Error {
 public:
    using Error::Error;
};

fs::path bundled(const char* file) { return fs::path(CLOUDFOG_DEFAULT_DATA_DIR) / file; }

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool same_file(const fs::path& a, const fs::path& b) {
    std::error_code ec;
    return fs::exists(a, ec) && fs::exists(b, ec) && fs::equivalent(a, b, ec);
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out,
                  const std::vector<std::string>& inputs) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    for (const auto& in : inputs) {
        if (!in.empty() && same_file(cfg.output_path, in))
            throw UsageError("--out would overwrite input file " + in);
    }
    std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw ValidationError("cannot write " + cfg.output_path);
    file << text;
    if (!file) throw ValidationError("failed writing " + cfg.output_path);
}

PowerParams load_params_or_default(const std::string& path) {
    return load_params_file(path.empty() ? bundled("reference_params.json") : fs::path(path));
}

// Grid documents may name their topology and params relative to themselves.
struct LoadedGrid {
    GridSpec grid;
    std::string topology_path;
    std::string params_path;
};

LoadedGrid load_grid(const RunConfig& cfg) {
    const fs::path grid_path(cfg.grid_path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(grid_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("grid: ") + e.what());
    }
    auto relative = [&](const char* key) -> std::string {
        if (!doc.is_object() || !doc.contains(key)) return {};
        return (grid_path.parent_path() / doc.at(key).get<std::string>()).string();
    };
    LoadedGrid out;
    out.topology_path = cfg.topology_path.empty() ? relative("topology") : cfg.topology_path;
    out.params_path = cfg.params_path.empty() ? relative("params") : cfg.params_path;
    if (out.topology_path.empty()) throw UsageError("sweep needs --topology or a \"topology\" entry in the grid");
    auto topology = std::make_shared<const Topology>(load_topology_file(out.topology_path));
    out.grid = grid_from_json(doc, std::move(topology), load_params_or_default(out.params_path));
    return out;
}

int solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto topology = std::make_shared<const Topology>(load_topology_file(cfg.topology_path));
    const Scenario sc = load_scenario_file(cfg.scenario_path, topology, load_params_or_default(cfg.params_path));
    const PlacementSolution sol = sc.vms.size() == 1 ? solve_exact_single_vm(sc) : solve_greedy_multi_vm(sc);
    write_output(cfg, solution_to_json(sol, sc).dump(2) + "\n", out,
                 {cfg.topology_path, cfg.params_path, cfg.scenario_path});
    if (!cfg.quiet) {
        const TierDistribution d = distribution(sol, sc);
        err << "total " << sol.total_watts() << " W (processing " << sol.breakdown.processing_total()
            << " W, network " << sol.breakdown.network_total() << " W); users cloud/metro/access "
            << d.pct_cloud << "/" << d.pct_metro << "/" << d.pct_access << " %\n";
    }
    return kExitOk;
}

int sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Format format = format_from_string(cfg.format);
    const LoadedGrid loaded = load_grid(cfg);
    const auto rows = run_grid(loaded.grid, cfg.jobs);
    write_output(cfg, emit_report(rows, format), out,
                 {cfg.grid_path, loaded.topology_path, loaded.params_path});
    if (!cfg.quiet) err << rows.size() << " grid points solved\n";
    return kExitOk;
}

int validate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.topology_path.empty() && cfg.grid_path.empty())
        throw UsageError("validate needs --topology or --grid");
    const PowerParams params = load_params_or_default(cfg.params_path);
    std::shared_ptr<const Topology> topology;
    if (!cfg.topology_path.empty()) {
        topology = std::make_shared<const Topology>(load_topology_file(cfg.topology_path));
        out << "topology '" << topology->name() << "': " << topology->node_count() << " nodes, "
            << topology->edges().size() << " edges\n";
    }
    if (!cfg.scenario_path.empty()) {
        if (!topology) throw UsageError("validating a scenario needs --topology");
        const Scenario sc = load_scenario_file(cfg.scenario_path, topology, params);
        out << "scenario: " << sc.vms.size() << " VM(s)\n";
    }
    if (!cfg.grid_path.empty()) {
        const LoadedGrid loaded = load_grid(cfg);
        out << "grid: " << loaded.grid.size() << " points\n";
    }
    out << "ok\n";
    return kExitOk;
}

void add_common(CLI::App& cmd, RunConfig& cfg) {
    cmd.add_option("--params", cfg.params_path, "Power parameter file (default: bundled reference_params.json)");
    cmd.add_flag("--quiet", cfg.quiet, "Suppress the human-readable summary");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Energy-minimizing VM placement over cloud and fog tiers", "cloudfog"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "Place the VMs of a scenario and print the solution as JSON");
    solve_cmd->add_option("--topology", cfg.topology_path, "Topology file")->required();
    solve_cmd->add_option("--scenario", cfg.scenario_path, "Scenario file")->required();
    solve_cmd->add_option("--out", cfg.output_path, "Write the solution here instead of stdout");
    add_common(*solve_cmd, cfg);

    auto* sweep_cmd = app.add_subcommand("sweep", "Solve every point of a scenario grid");
    sweep_cmd->add_option("--grid", cfg.grid_path, "Grid file")->required();
    sweep_cmd->add_option("--topology", cfg.topology_path, "Topology file (default: the grid's \"topology\")");
    sweep_cmd->add_option("--out", cfg.output_path, "Write the report here instead of stdout");
    sweep_cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_common(*sweep_cmd, cfg);

    auto* validate_cmd = app.add_subcommand("validate", "Check input files without solving");
    validate_cmd->add_option("--topology", cfg.topology_path, "Topology file");
    validate_cmd->add_option("--scenario", cfg.scenario_path, "Scenario file");
    validate_cmd->add_option("--grid", cfg.grid_path, "Grid file");
    add_common(*validate_cmd, cfg);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return solve(cfg, out, err);
        if (sweep_cmd->parsed()) return sweep(cfg, out, err);
        return validate(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ParseError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace cloudfog::cli
