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

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cloudfog/error.hpp"

namespace cloudfog::cli {

namespace {

std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

nlohmann::json tier_counts(const std::array<int, kTierCount>& c) {
    return {{"cloud", c[0]}, {"metro", c[1]}, {"access", c[2]}};
}

}  // namespace

Format format_from_string(std::string_view text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    throw ValidationError("unknown format '" + std::string(text) + "'");
}

std::string emit_report(const std::vector<SweepRow>& rows, Format format) {
    if (rows.empty()) throw ValidationError("no rows to report");

    if (format == Format::Csv) {
        std::string out(kCsvHeader);
        out += '\n';
        for (const SweepRow& r : rows) {
            out += to_string(r.profile);
            for (double v : {r.peak_workload, r.rate_mbps, r.pue_set.cloud, r.pue_set.metro, r.pue_set.access,
                             r.pct_users_cloud, r.pct_users_metro, r.pct_users_access}) {
                out += ',';
                out += sig6(v);
            }
            for (int c : r.replica_count_by_tier) {
                out += ',';
                out += std::to_string(c);
            }
            out += ',';
            out += sig6(r.total_watts);
            out += '\n';
        }
        return out;
    }

    nlohmann::json doc = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        doc.push_back({
            {"profile", to_string(r.profile)},
            {"peak_workload", r.peak_workload},
            {"rate_mbps", r.rate_mbps},
            {"pue_set", {{"cloud", r.pue_set.cloud}, {"metro", r.pue_set.metro}, {"access", r.pue_set.access}}},
            {"pct_users_cloud", r.pct_users_cloud},
            {"pct_users_metro", r.pct_users_metro},
            {"pct_users_access", r.pct_users_access},
            {"replica_count_by_tier", tier_counts(r.replica_count_by_tier)},
            {"total_watts", r.total_watts},
        });
    }
    return doc.dump(2) + "\n";
}

std::vector<SweepRow> rows_from_json(std::string_view document) {
    std::vector<SweepRow> rows;
    try {
        for (const auto& o : nlohmann::json::parse(document)) {
            SweepRow r;
            r.profile = profile_from_string(o.at("profile").get<std::string>());
            r.peak_workload = o.at("peak_workload").get<double>();
            r.rate_mbps = o.at("rate_mbps").get<double>();
            const auto& pue = o.at("pue_set");
            r.pue_set = {pue.at("cloud").get<double>(), pue.at("metro").get<double>(), pue.at("access").get<double>()};
            r.pct_users_cloud = o.at("pct_users_cloud").get<double>();
            r.pct_users_metro = o.at("pct_users_metro").get<double>();
            r.pct_users_access = o.at("pct_users_access").get<double>();
            const auto& c = o.at("replica_count_by_tier");
            r.replica_count_by_tier = {c.at("cloud").get<int>(), c.at("metro").get<int>(), c.at("access").get<int>()};
            r.total_watts = o.at("total_watts").get<double>();
            rows.push_back(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return rows;
}

}  // namespace cloudfog::cli
