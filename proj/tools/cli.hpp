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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cloudfog/sweep.hpp"

namespace cloudfog::cli {

enum class Format { Csv, Json };

Format format_from_string(std::string_view text);

/// Header of the sweep CSV.
inline constexpr std::string_view kCsvHeader =
    "profile,peak_workload,rate_mbps,pue_cloud,pue_metro,pue_access,pct_cloud,pct_metro,pct_access,"
    "replicas_cloud,replicas_metro,replicas_access,total_watts";

/// Renders sweep rows. CSV numbers use 6 significant digits; JSON numbers
/// use the shortest exact representation so the document parses back to
/// the same rows. Output is byte-stable for identical rows. Throws
/// ValidationError on empty input.
std::string emit_report(const std::vector<SweepRow>& rows, Format format);

/// Inverse of the JSON report.
std::vector<SweepRow> rows_from_json(std::string_view document);

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;
inline constexpr int kExitInfeasible = 4;

/// Runs the command line `args` (without the program name), writing
/// documents to `out` and diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cloudfog::cli
