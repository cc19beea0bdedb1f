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

#include "cloudfog/power_model.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cloudfog/error.hpp"

namespace cloudfog {

double PowerParams::pue(Tier tier) const noexcept {
    switch (tier) {
        case Tier::Cloud: return pue_cloud;
        case Tier::MetroFog: return pue_metro;
        case Tier::AccessFog: return pue_access;
    }
    return pue_cloud;
}

void PowerParams::validate() const {
    auto finite_at_least = [](double v, double lo, const char* what) {
        if (!std::isfinite(v) || v < lo)
            throw ValidationError(std::string(what) + " must be a finite value >= " + std::to_string(lo));
    };
    finite_at_least(pue_cloud, 1.0, "pue_cloud");
    finite_at_least(pue_metro, 1.0, "pue_metro");
    finite_at_least(pue_access, 1.0, "pue_access");
    finite_at_least(server_prop_power, 0.0, "server_prop_power");
    finite_at_least(server_baseline_power, 0.0, "server_baseline_power");
    finite_at_least(e_router_port, 0.0, "e_router_port");
    finite_at_least(e_wdm_line, 0.0, "e_wdm_line");
    finite_at_least(e_metro, 0.0, "e_metro");
    finite_at_least(e_access, 0.0, "e_access");
    if (!std::isfinite(server_capacity_workload) || server_capacity_workload <= 0.0)
        throw ValidationError("server_capacity_workload must be positive");
}

std::string_view to_string(Layer layer) {
    switch (layer) {
        case Layer::Access: return "access";
        case Layer::Metro: return "metro";
        case Layer::Core: return "core";
    }
    return "?";
}

double PowerBreakdown::processing_total() const {
    return std::accumulate(processing_watts.begin(), processing_watts.end(), 0.0);
}

double PowerBreakdown::network_total() const {
    return std::accumulate(network_watts.begin(), network_watts.end(), 0.0);
}

PowerBreakdown& PowerBreakdown::operator+=(const PowerBreakdown& other) {
    for (std::size_t i = 0; i < kTierCount; ++i) processing_watts[i] += other.processing_watts[i];
    for (std::size_t i = 0; i < kLayerCount; ++i) network_watts[i] += other.network_watts[i];
    return *this;
}

double replica_it_power(double workload, const PowerParams& params, bool baseline_active) {
    if (!(workload >= 0.0)) throw ValidationError("replica workload must be non-negative");
    if (workload > params.server_capacity_workload) {
        throw ValidationError("replica workload " + std::to_string(workload) + " exceeds server capacity " +
                              std::to_string(params.server_capacity_workload));
    }
    return (baseline_active ? params.server_baseline_power : 0.0) + workload * params.server_prop_power;
}

double facility_power(double it_watts, Tier tier, const PowerParams& params) {
    return it_watts * params.pue(tier);
}

std::array<double, kLayerCount> transport_power_by_layer(const RouteSegments& s, double rate_mbps,
                                                         const PowerParams& params) {
    return {
        rate_mbps * s.access_traversals * params.e_access,
        rate_mbps * s.metro_traversals * params.e_metro,
        rate_mbps * (s.core_router_ports * params.e_router_port + s.core_hops * params.e_wdm_line),
    };
}

double transport_power(const RouteSegments& segments, double rate_mbps, const PowerParams& params) {
    const auto parts = transport_power_by_layer(segments, rate_mbps, params);
    return parts[0] + parts[1] + parts[2];
}

void to_json(nlohmann::json& j, const PowerParams& p) {
    j = nlohmann::json{
        {"pue_cloud", p.pue_cloud},
        {"pue_metro", p.pue_metro},
        {"pue_access", p.pue_access},
        {"server_capacity_workload", p.server_capacity_workload},
        {"server_prop_power", p.server_prop_power},
        {"server_baseline_power", p.server_baseline_power},
        {"e_router_port", p.e_router_port},
        {"e_wdm_line", p.e_wdm_line},
        {"e_metro", p.e_metro},
        {"e_access", p.e_access},
    };
}

void from_json(const nlohmann::json& j, PowerParams& p) {
    j.at("pue_cloud").get_to(p.pue_cloud);
    j.at("pue_metro").get_to(p.pue_metro);
    j.at("pue_access").get_to(p.pue_access);
    j.at("server_capacity_workload").get_to(p.server_capacity_workload);
    j.at("server_prop_power").get_to(p.server_prop_power);
    j.at("server_baseline_power").get_to(p.server_baseline_power);
    j.at("e_router_port").get_to(p.e_router_port);
    j.at("e_wdm_line").get_to(p.e_wdm_line);
    j.at("e_metro").get_to(p.e_metro);
    j.at("e_access").get_to(p.e_access);
}

PowerParams load_params(std::string_view document) {
    PowerParams params;
    try {
        nlohmann::json::parse(document).get_to(params);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("params: ") + e.what());
    }
    params.validate();
    return params;
}

PowerParams load_params_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open params file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_params(buf.str());
}

}  // namespace cloudfog
