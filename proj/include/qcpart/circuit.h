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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcpart {

/// 0-based qubit index. File formats and reports use 1-based numbering.
struct QubitId {
    uint32_t index = 0;

    auto operator<=>(const QubitId &) const = default;
};

/// A single- or two-qubit gate. The label is opaque; only arity matters to partitioning.
struct Gate {
    uint32_t ordinal = 0;
    std::string label;
    std::optional<QubitId> control;
    QubitId target;

    bool is_two_qubit() const {
        return control.has_value();
    }

    bool operator==(const Gate &) const = default;
};

/// Ordered gate list over `width` qubits.
///
/// Gates are validated on append: qubits must be in range and a two-qubit gate may not
/// act twice on the same qubit. Ordinals are assigned sequentially from 0.
class Circuit {
   public:
    explicit Circuit(uint32_t width, std::string name = "");

    void append(std::string label, QubitId target);
    void append(std::string label, QubitId control, QubitId target);

    uint32_t width() const {
        return width_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const std::string &name() const {
        return name_;
    }
    void set_name(std::string name) {
        name_ = std::move(name);
    }

    /// True when multi-controlled gates were replaced by pairwise CNOTs during import.
    bool approximate() const {
        return approximate_;
    }
    void mark_approximate() {
        approximate_ = true;
    }

    size_t two_qubit_gate_count() const;

    /// Gate-for-gate equality (name and approximation flag are metadata and ignored).
    bool operator==(const Circuit &other) const {
        return width_ == other.width_ && gates_ == other.gates_;
    }

   private:
    uint32_t width_;
    std::vector<Gate> gates_;
    std::string name_;
    bool approximate_ = false;
};

/// Parses the `.qc` line format:
///
///     qubits <n>
///     <label> <q>                 # single-qubit gate
///     <label> <control> <target>  # two-qubit gate
///
/// Qubit indices are 1-based. Blank lines and `#` comments are ignored; CRLF is accepted.
/// Throws ParseError with the offending line number.
Circuit parse_circuit(std::string_view text, std::string name = "");

/// Inverse of parse_circuit.
std::string render_circuit(const Circuit &circuit);

/// Imports the RevLib `.real` subset (`.numvars`, `.variables`, `.begin`/`.end`, gate lines
/// `<name><arity> <vars...>`). Gates on three or more lines are rejected unless
/// `decompose_mct` is set, in which case each control is paired with the last operand as
/// a CNOT and the result is marked approximate.
Circuit import_real(std::string_view text, bool decompose_mct, std::string name = "");

/// Quantum Fourier transform: for each qubit i, an H on i followed by a controlled
/// phase from every later qubit j onto i.
Circuit gen_qft(uint32_t n);

}  // namespace qcpart
