// Copyright 2026 The searchtime Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Rendering of command results as CSV, JSON and plain text. Everything here
// goes through the C interface.

#ifndef SEARCHTIME_TOOLS_REPORT_HPP_
#define SEARCHTIME_TOOLS_REPORT_HPP_

#include <cstdint>
#include <string>

#include "json.hpp"
#include "searchtime/searchtime.h"

namespace searchtime::cli {

using Json = nlohmann::ordered_json;

// Shortest round-tripping decimal form; empty for NaN.
std::string FormatNumber(double value);

const char* MethodText(st_method m);
const char* VerdictText(st_verdict v);
const char* ConditioningText(st_conditioning c);
const char* ModelText(st_model m);
// The verdict, with a band resolved by comparing the two means.
const char* Recommendation(const st_estimate_report& report);

Json Meta(uint64_t seed, uint64_t trials);
Json EstimateToJson(const st_estimate& e);
Json ProblemToJson(const st_problem& problem);

Json EstimateReportJson(const st_problem& problem, st_conditioning c,
                        const st_estimate_report& report);
std::string EstimateReportCsv(const st_estimate_report& report);
std::string EstimateReportText(const st_problem& problem,
                               const st_estimate_report& report);

Json SimulateReportJson(const st_problem& problem, st_method m,
                        uint64_t trials, uint64_t seed, bool conditioned,
                        const st_simulate_report& report);
std::string SimulateReportCsv(const st_simulate_report& report);
std::string SimulateReportText(st_method m, const st_simulate_report& report);

Json TableJson(const char* name, const st_table* table, uint64_t trials,
               uint64_t seed);
std::string TableCsv(const char* name, const st_table* table);

Json BoundaryJson(const char* name, const st_boundary* boundary,
                  uint64_t samples, uint64_t seed);
std::string BoundaryCsv(const st_boundary* boundary);

Json DatasetJson(const st_dataset* dataset, uint64_t count, uint64_t seed);
std::string DatasetCsv(const st_dataset* dataset);

}  // namespace searchtime::cli

#endif  // SEARCHTIME_TOOLS_REPORT_HPP_
