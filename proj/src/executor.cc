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

#include "qcpart/executor.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcpart {

namespace {

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::toupper(c));
    });
    return s;
}

std::string q(QubitId id) {
    return "q" + std::to_string(id.index + 1);
}

std::string p(uint32_t part) {
    return "p" + std::to_string(part);
}

}  // namespace

Rational Rational::of(int64_t num, int64_t den) {
    if (den <= 0 || num < 0) {
        throw std::invalid_argument("rational needs num >= 0 and den > 0");
    }
    int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

std::string Rational::to_fixed(int digits) const {
    int64_t scale = 1;
    for (int i = 0; i < digits; i++) {
        scale *= 10;
    }
    // round(num * scale / den) with ties up, in integers.
    int64_t scaled = (2 * num * scale + den) / (2 * den);
    std::string out = std::to_string(scaled / scale);
    if (digits > 0) {
        std::string frac = std::to_string(scaled % scale);
        out += '.' + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

std::vector<TraceEntry> trace_execution(const Circuit &circuit, const PartitionAssignment &assignment) {
    if (assignment.qubit_count() != circuit.width()) {
        throw std::invalid_argument(
            "assignment covers " + std::to_string(assignment.qubit_count()) + " qubits but the circuit has " +
            std::to_string(circuit.width()));
    }
    std::vector<TraceEntry> trace;
    trace.reserve(circuit.gates().size());
    uint64_t teleports = 0;
    for (const Gate &g : circuit.gates()) {
        TraceEntry entry;
        entry.gate_ordinal = g.ordinal;
        const uint32_t target_part = assignment.part_of(g.target);
        const std::string name = upper(g.label);
        if (!g.is_two_qubit()) {
            entry.parts = {target_part};
            entry.rendering = name + "(" + q(g.target) + "," + p(target_part) + ")";
        } else {
            const uint32_t control_part = assignment.part_of(*g.control);
            if (control_part == target_part) {
                entry.parts = {target_part};
                entry.rendering = name + "(" + q(*g.control) + "," + q(g.target) + "," + p(target_part) + ")";
            } else {
                entry.kind = GateKind::Global;
                entry.parts = {std::min(control_part, target_part), std::max(control_part, target_part)};
                entry.rendering = name + "(" + q(*g.control) + "," + p(control_part) + "," + q(g.target) + "," +
                                  p(target_part) + ")";
                teleports++;
            }
        }
        entry.teleports_so_far = teleports;
        trace.push_back(std::move(entry));
    }
    return trace;
}

Metrics compute_metrics(const Circuit &circuit, const PartitionResult &result) {
    Metrics m;
    m.teleportations = static_cast<uint64_t>(result.cost);
    m.qubits = circuit.width();
    m.ratio_r = Rational::of(result.cost, 2 * static_cast<int64_t>(circuit.width()));
    for (QubitSubset part : result.assignment.parts()) {
        m.per_part_sizes.push_back(part.size());
    }
    return m;
}

std::string render_trace_table(const std::vector<TraceEntry> &trace) {
    const std::string h1 = "# of Gate";
    const std::string h2 = "Gate_name";
    const std::string h3 = "Type";
    size_t w1 = h1.size();
    size_t w2 = h2.size();
    for (const TraceEntry &e : trace) {
        w1 = std::max(w1, std::to_string(e.gate_ordinal + 1).size() + 1);
        w2 = std::max(w2, e.rendering.size());
    }
    auto pad = [](const std::string &s, size_t width) {
        return s + std::string(width - s.size(), ' ');
    };
    std::ostringstream out;
    out << pad(h1, w1) << " | " << pad(h2, w2) << " | " << h3 << "\n";
    out << std::string(w1, '-') << "-+-" << std::string(w2, '-') << "-+-" << std::string(h3.size(), '-') << "\n";
    for (const TraceEntry &e : trace) {
        out << pad("g" + std::to_string(e.gate_ordinal + 1), w1) << " | " << pad(e.rendering, w2) << " | "
            << (e.kind == GateKind::Global ? "G" : "L") << "\n";
    }
    return out.str();
}

}  // namespace qcpart
