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
#include <filesystem>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "cloudfog/topology.hpp"

namespace cloudfog {

/// Device and facility energy parameters.
///
/// Energy-per-bit values are stored as watts per Mbps of sustained traffic.
/// Defaults are the bundled reference set (data/reference_params.json).
/// Server power is affine in workload: an optional per-replica baseline plus
/// `server_prop_power` watts per full server of CPU workload.
struct PowerParams {
    double pue_cloud = 1.3;
    double pue_metro = 1.4;
    double pue_access = 1.5;
    double server_capacity_workload = 1.0;
    double server_prop_power = 3.0;
    double server_baseline_power = 200.0;
    double e_router_port = 0.03;
    double e_wdm_line = 0.01;
    double e_metro = 0.005;
    double e_access = 0.002;

    double pue(Tier tier) const noexcept;

    /// Throws ValidationError if a PUE is below 1, an energy value is
    /// negative or not finite, or the server capacity is not positive.
    void validate() const;
};

/// Network layers used for the transport power breakdown.
enum class Layer : std::uint8_t { Access = 0, Metro = 1, Core = 2 };
inline constexpr std::size_t kLayerCount = 3;
std::string_view to_string(Layer layer);

/// Power split into facility-level processing per tier and transport per layer.
struct PowerBreakdown {
    std::array<double, kTierCount> processing_watts{};
    std::array<double, kLayerCount> network_watts{};

    double processing(Tier tier) const { return processing_watts[index_of(tier)]; }
    double network(Layer layer) const { return network_watts[static_cast<std::size_t>(layer)]; }
    double processing_total() const;
    double network_total() const;
    double total_watts() const { return processing_total() + network_total(); }

    PowerBreakdown& operator+=(const PowerBreakdown& other);
};

/// IT power of one replica running at `workload` (fraction of a server).
/// Throws ValidationError if the workload is negative or above capacity.
double replica_it_power(double workload, const PowerParams& params, bool baseline_active);

/// Facility power: IT power scaled by the tier's PUE.
double facility_power(double it_watts, Tier tier, const PowerParams& params);

/// Transport power of a flow of `rate_mbps` split per network layer.
std::array<double, kLayerCount> transport_power_by_layer(const RouteSegments& segments, double rate_mbps,
                                                         const PowerParams& params);

/// Transport power of a flow of `rate_mbps` over `segments`.
double transport_power(const RouteSegments& segments, double rate_mbps, const PowerParams& params);

void to_json(nlohmann::json& j, const PowerParams& p);
void from_json(const nlohmann::json& j, PowerParams& p);

/// Parses and validates a parameter document whose keys are the PowerParams
/// field names. Missing keys are errors.
PowerParams load_params(std::string_view document);
PowerParams load_params_file(const std::filesystem::path& path);

}  // namespace cloudfog
