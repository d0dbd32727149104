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

namespace qcpart {

/// Incidence between a gate vertex and a qubit vertex.
struct BigraphEdge {
    uint32_t gate = 0;
    QubitId qubit;

    bool operator==(const BigraphEdge &) const = default;
    auto operator<=>(const BigraphEdge &) const = default;
};

/// Bipartite qubit/gate graph. X holds the qubits, Y the gates (one vertex per gate, so
/// repeated gates on the same pair stay distinct), and every edge joins a gate to a qubit
/// it acts on.
class BipartiteGraph {
   public:
    BipartiteGraph(uint32_t qubit_count, uint32_t gate_count, std::vector<BigraphEdge> edges);

    uint32_t qubit_count() const {
        return qubit_count_;
    }
    uint32_t gate_count() const {
        return gate_count_;
    }
    uint32_t vertex_count() const {
        return qubit_count_ + gate_count_;
    }
    std::vector<QubitId> x_vertices() const;
    std::vector<uint32_t> y_vertices() const;

    /// Edges in insertion order (gate order, then control before target).
    const std::vector<BigraphEdge> &edges() const {
        return edges_;
    }

    /// Qubits adjacent to a gate vertex.
    std::vector<QubitId> qubits_of(uint32_t gate) const;
    uint32_t degree(uint32_t gate) const;

   private:
    uint32_t qubit_count_;
    uint32_t gate_count_;
    std::vector<BigraphEdge> edges_;
    // CSR offsets into edges_ per gate vertex.
    std::vector<uint32_t> gate_offsets_;
};

/// Symmetric qubit interaction counts: at(i, j) is the number of two-qubit gates on {i, j}.
class WeightMatrix {
   public:
    explicit WeightMatrix(uint32_t n);

    uint32_t size() const {
        return n_;
    }
    uint64_t at(uint32_t i, uint32_t j) const {
        return w_[static_cast<size_t>(i) * n_ + j];
    }
    /// Adds `amount` to both (i, j) and (j, i). Requires i != j.
    void add(uint32_t i, uint32_t j, uint64_t amount = 1);

    /// Sum over unordered pairs.
    uint64_t total() const;

    bool operator==(const WeightMatrix &) const = default;

   private:
    uint32_t n_;
    std::vector<uint64_t> w_;
};

BipartiteGraph qc_to_bigraph(const Circuit &circuit);

WeightMatrix weight_matrix(const BipartiteGraph &graph);

/// Number of gate vertices adjacent to one qubit of `s1` and one of `s2`, counted gate by
/// gate straight from the edge set. Sets are given as qubit bitmasks and must be disjoint.
uint64_t bigraph_connect(const BipartiteGraph &graph, uint64_t s1, uint64_t s2);

/// Graphviz rendering with qubits and gates on two ranks.
std::string to_dot(const BipartiteGraph &graph, const std::string &name = "bigraph");

}  // namespace qcpart
