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
#include <string>
#include <vector>

#include "qcpart/circuit.h"
#include "qcpart/partitioner.h"

namespace qcpart {

enum class GateKind { Local, Global };

struct TraceEntry {
    uint32_t gate_ordinal = 0;
    /// e.g. "CNOT(q1,q2,p0)" for a local gate, "CNOT(q3,p1,q1,p0)" for a global one.
    std::string rendering;
    GateKind kind = GateKind::Local;
    /// Sorted, distinct part indices touched by the gate.
    std::vector<uint32_t> parts;
    uint64_t teleports_so_far = 0;

    bool operator==(const TraceEntry &) const = default;
};

/// Exact non-negative fraction kept in lowest terms.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    static Rational of(int64_t num, int64_t den);

    /// Decimal with `digits` fractional digits, rounded half up.
    std::string to_fixed(int digits = 2) const;
    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    bool operator==(const Rational &) const = default;
};

struct Metrics {
    uint64_t teleportations = 0;
    uint32_t qubits = 0;
    /// teleportations / (2 * qubits)
    Rational ratio_r;
    std::vector<uint32_t> per_part_sizes;
};

/// Walks the gates in execution order and classifies each against the assignment. A two-qubit
/// gate whose qubits sit in different parts is global and costs one teleportation.
/// Throws std::invalid_argument when the assignment does not cover the circuit's qubits.
std::vector<TraceEntry> trace_execution(const Circuit &circuit, const PartitionAssignment &assignment);

Metrics compute_metrics(const Circuit &circuit, const PartitionResult &result);

/// Aligned text table with the columns "# of Gate", "Gate_name" and "Type" (L/G).
std::string render_trace_table(const std::vector<TraceEntry> &trace);

}  // namespace qcpart
