// Copyright 2026 The qcpart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcpart/executor.h"
#include "qcpart/partitioner.h"

namespace qcpart {

/// One column of the memo table: a subset and its optimal cost for every k (nullopt = N.A).
struct DpTableRow {
    uint32_t index = 0;
    std::string qubits;
    std::vector<std::optional<int64_t>> costs;

    bool operator==(const DpTableRow &) const = default;
};

std::vector<DpTableRow> table_rows(const DpTable &table);

/// Effective options echoed back in every report.
struct RunFlags {
    std::string source;
    std::string format = "text";
    bool table = false;
    bool trace = false;
    bool decompose_mct = false;
    bool force = false;
    bool no_timing = false;
    uint32_t threads = 1;
    std::optional<uint32_t> max_part_size;

    bool operator==(const RunFlags &) const = default;
};

struct RunReport {
    std::string algorithm = "dp";
    std::string circuit_name;
    uint32_t width = 0;
    uint64_t gate_count = 0;
    uint32_t parts = 0;
    int64_t cost = 0;
    std::string ratio_r;
    /// 1-based qubit lists, one per part, in part order.
    std::vector<std::vector<uint32_t>> assignment;
    bool approximate = false;
    bool constrained = false;
    std::optional<std::vector<TraceEntry>> trace;
    std::optional<std::vector<DpTableRow>> dp_table;
    int64_t wall_time_ms = 0;
    RunFlags flags;
    /// Filled by the oracle when a DP report is supplied for comparison.
    std::optional<int64_t> dp_cost;
    std::optional<bool> match;

    bool operator==(const RunReport &) const = default;
};

/// Fills the circuit/result fields of a report; trace, table, timing and flags are left to the caller.
RunReport make_report(const Circuit &circuit, const PartitionResult &result, std::string algorithm);

nlohmann::json to_json(const RunReport &report);
RunReport report_from_json(const nlohmann::json &j);

std::string render_text(const RunReport &report);

/// Summary CSV shared by `partition --format csv` and `bench`.
std::string csv_header();
std::string csv_row(const RunReport &report);
std::string csv_error_row(const std::string &name, std::optional<uint32_t> width, std::optional<uint64_t> gates,
                          std::optional<uint32_t> parts, const std::string &error);

/// Quotes a CSV field when it contains a comma, quote, or newline.
std::string csv_escape(const std::string &field);

}  // namespace qcpart
