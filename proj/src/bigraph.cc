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

#include "qcpart/bigraph.h"

#include <sstream>
#include <stdexcept>

namespace qcpart {

BipartiteGraph::BipartiteGraph(uint32_t qubit_count, uint32_t gate_count, std::vector<BigraphEdge> edges)
    : qubit_count_(qubit_count), gate_count_(gate_count), edges_(std::move(edges)), gate_offsets_(gate_count + 1, 0) {
    for (const BigraphEdge &e : edges_) {
        if (e.gate >= gate_count_ || e.qubit.index >= qubit_count_) {
            throw std::invalid_argument("bigraph edge references a missing vertex");
        }
        gate_offsets_[e.gate + 1]++;
    }
    for (uint32_t g = 0; g < gate_count_; g++) {
        gate_offsets_[g + 1] += gate_offsets_[g];
    }
    for (size_t k = 1; k < edges_.size(); k++) {
        if (edges_[k].gate < edges_[k - 1].gate) {
            throw std::invalid_argument("bigraph edges must be grouped in gate order");
        }
    }
}

std::vector<QubitId> BipartiteGraph::x_vertices() const {
    std::vector<QubitId> out;
    out.reserve(qubit_count_);
    for (uint32_t q = 0; q < qubit_count_; q++) {
        out.push_back(QubitId{q});
    }
    return out;
}

std::vector<uint32_t> BipartiteGraph::y_vertices() const {
    std::vector<uint32_t> out;
    out.reserve(gate_count_);
    for (uint32_t g = 0; g < gate_count_; g++) {
        out.push_back(g);
    }
    return out;
}

std::vector<QubitId> BipartiteGraph::qubits_of(uint32_t gate) const {
    std::vector<QubitId> out;
    for (uint32_t k = gate_offsets_.at(gate); k < gate_offsets_.at(gate + 1); k++) {
        out.push_back(edges_[k].qubit);
    }
    return out;
}

uint32_t BipartiteGraph::degree(uint32_t gate) const {
    return gate_offsets_.at(gate + 1) - gate_offsets_.at(gate);
}

WeightMatrix::WeightMatrix(uint32_t n) : n_(n), w_(static_cast<size_t>(n) * n, 0) {
}

void WeightMatrix::add(uint32_t i, uint32_t j, uint64_t amount) {
    if (i == j || i >= n_ || j >= n_) {
        throw std::invalid_argument("weight matrix entries need two distinct in-range qubits");
    }
    w_[static_cast<size_t>(i) * n_ + j] += amount;
    w_[static_cast<size_t>(j) * n_ + i] += amount;
}

uint64_t WeightMatrix::total() const {
    uint64_t sum = 0;
    for (uint32_t i = 0; i < n_; i++) {
        for (uint32_t j = i + 1; j < n_; j++) {
            sum += at(i, j);
        }
    }
    return sum;
}

BipartiteGraph qc_to_bigraph(const Circuit &circuit) {
    std::vector<BigraphEdge> edges;
    edges.reserve(circuit.gates().size() * 2);
    for (const Gate &g : circuit.gates()) {
        // Single-qubit gates contribute exactly one edge.
        if (g.control.has_value()) {
            edges.push_back({g.ordinal, *g.control});
        }
        edges.push_back({g.ordinal, g.target});
    }
    return BipartiteGraph(circuit.width(), static_cast<uint32_t>(circuit.gates().size()), std::move(edges));
}

WeightMatrix weight_matrix(const BipartiteGraph &graph) {
    WeightMatrix w(graph.qubit_count());
    for (uint32_t g = 0; g < graph.gate_count(); g++) {
        if (graph.degree(g) == 2) {
            auto qs = graph.qubits_of(g);
            w.add(qs[0].index, qs[1].index);
        }
    }
    return w;
}

uint64_t bigraph_connect(const BipartiteGraph &graph, uint64_t s1, uint64_t s2) {
    if (s1 & s2) {
        throw std::invalid_argument("connect requires disjoint qubit sets");
    }
    uint64_t count = 0;
    for (uint32_t i = 0; i < graph.qubit_count(); i++) {
        if (!(s1 >> i & 1)) {
            continue;
        }
        for (uint32_t j = 0; j < graph.qubit_count(); j++) {
            if (!(s2 >> j & 1)) {
                continue;
            }
            for (uint32_t g = 0; g < graph.gate_count(); g++) {
                bool touches_i = false;
                bool touches_j = false;
                for (QubitId q : graph.qubits_of(g)) {
                    touches_i |= q.index == i;
                    touches_j |= q.index == j;
                }
                if (touches_i && touches_j) {
                    count++;
                }
            }
        }
    }
    return count;
}

std::string to_dot(const BipartiteGraph &graph, const std::string &name) {
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    out << "  rankdir=TB;\n";
    out << "  { rank=same;";
    for (QubitId q : graph.x_vertices()) {
        out << " q" << q.index + 1 << ";";
    }
    out << " }\n";
    out << "  { rank=same;";
    for (uint32_t g : graph.y_vertices()) {
        out << " g" << g + 1 << " [shape=box];";
    }
    out << " }\n";
    for (const BigraphEdge &e : graph.edges()) {
        out << "  g" << e.gate + 1 << " -- q" << e.qubit.index + 1 << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace qcpart
