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

#include "qcpart/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "qcpart/errors.h"

namespace qcpart {

namespace {

bool is_valid_label(std::string_view label) {
    if (label.empty()) {
        return false;
    }
    return std::none_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isspace(c) || c == '#';
    });
}

/// Splits text into lines, dropping `#` comments, trailing CR, and surrounding whitespace.
/// Each entry carries its 1-based line number.
std::vector<std::pair<size_t, std::vector<std::string_view>>> tokenized_lines(std::string_view text) {
    std::vector<std::pair<size_t, std::vector<std::string_view>>> result;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        line_no++;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string_view> tokens;
        size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) {
                p++;
            }
            size_t q = p;
            while (q < line.size() && !std::isspace(static_cast<unsigned char>(line[q]))) {
                q++;
            }
            if (q > p) {
                tokens.push_back(line.substr(p, q - p));
            }
            p = q;
        }
        if (!tokens.empty()) {
            result.emplace_back(line_no, std::move(tokens));
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return result;
}

std::optional<uint64_t> parse_uint(std::string_view token) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

QubitId parse_qubit(std::string_view token, uint32_t width, size_t line) {
    auto value = parse_uint(token);
    if (!value.has_value()) {
        throw ParseError(line, "expected a qubit index but got '" + std::string(token) + "'");
    }
    if (*value < 1 || *value > width) {
        throw ParseError(
            line, "qubit index " + std::string(token) + " out of range 1.." + std::to_string(width));
    }
    return QubitId{static_cast<uint32_t>(*value - 1)};
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

}  // namespace

Circuit::Circuit(uint32_t width, std::string name) : width_(width), name_(std::move(name)) {
    if (width == 0) {
        throw std::invalid_argument("circuit width must be at least 1");
    }
}

void Circuit::append(std::string label, QubitId target) {
    if (!is_valid_label(label)) {
        throw std::invalid_argument("invalid gate label '" + label + "'");
    }
    if (target.index >= width_) {
        throw std::invalid_argument("qubit " + std::to_string(target.index + 1) + " out of range");
    }
    gates_.push_back(Gate{static_cast<uint32_t>(gates_.size()), std::move(label), std::nullopt, target});
}

void Circuit::append(std::string label, QubitId control, QubitId target) {
    if (!is_valid_label(label)) {
        throw std::invalid_argument("invalid gate label '" + label + "'");
    }
    if (control.index >= width_ || target.index >= width_) {
        throw std::invalid_argument("qubit out of range");
    }
    if (control == target) {
        throw std::invalid_argument(
            "self-loop: control and target are both qubit " + std::to_string(target.index + 1));
    }
    gates_.push_back(Gate{static_cast<uint32_t>(gates_.size()), std::move(label), control, target});
}

size_t Circuit::two_qubit_gate_count() const {
    return static_cast<size_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) {
        return g.is_two_qubit();
    }));
}

Circuit parse_circuit(std::string_view text, std::string name) {
    auto lines = tokenized_lines(text);
    if (lines.empty() || lines.front().second.front() != "qubits") {
        size_t line = lines.empty() ? 0 : lines.front().first;
        throw ParseError(line, "missing 'qubits <n>' header");
    }
    const auto &[header_line, header] = lines.front();
    if (header.size() != 2) {
        throw ParseError(header_line, "expected 'qubits <n>'");
    }
    auto width = parse_uint(header[1]);
    if (!width.has_value() || *width < 1 || *width > UINT32_MAX) {
        throw ParseError(header_line, "invalid qubit count '" + std::string(header[1]) + "'");
    }

    Circuit circuit(static_cast<uint32_t>(*width), std::move(name));
    for (size_t i = 1; i < lines.size(); i++) {
        const auto &[line, tokens] = lines[i];
        if (tokens[0] == "qubits") {
            throw ParseError(line, "duplicate 'qubits' header");
        }
        std::string label(tokens[0]);
        if (tokens.size() == 2) {
            circuit.append(std::move(label), parse_qubit(tokens[1], circuit.width(), line));
        } else if (tokens.size() == 3) {
            QubitId control = parse_qubit(tokens[1], circuit.width(), line);
            QubitId target = parse_qubit(tokens[2], circuit.width(), line);
            if (control == target) {
                throw ParseError(line, "self-loop: control and target are both qubit " + std::string(tokens[1]));
            }
            circuit.append(std::move(label), control, target);
        } else {
            throw ParseError(
                line, "gate '" + label + "' has " + std::to_string(tokens.size() - 1) +
                          " operands; only 1- and 2-qubit gates are supported");
        }
    }
    return circuit;
}

std::string render_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.width() << "\n";
    for (const Gate &g : circuit.gates()) {
        out << g.label;
        if (g.control.has_value()) {
            out << ' ' << g.control->index + 1;
        }
        out << ' ' << g.target.index + 1 << "\n";
    }
    return out.str();
}

Circuit import_real(std::string_view text, bool decompose_mct, std::string name) {
    std::optional<uint64_t> numvars;
    std::map<std::string, uint32_t, std::less<>> variables;
    std::optional<Circuit> circuit;
    bool in_body = false;
    bool ended = false;

    for (const auto &[line, tokens] : tokenized_lines(text)) {
        std::string head = lowercase(tokens[0]);
        if (ended) {
            throw ParseError(line, "content after .end");
        }
        if (head.starts_with('.')) {
            if (head == ".numvars") {
                if (tokens.size() != 2 || !(numvars = parse_uint(tokens[1])) || *numvars < 1) {
                    throw ParseError(line, "malformed .numvars");
                }
            } else if (head == ".variables") {
                if (!numvars.has_value()) {
                    throw ParseError(line, ".variables before .numvars");
                }
                if (tokens.size() - 1 != *numvars) {
                    throw ParseError(
                        line, ".variables lists " + std::to_string(tokens.size() - 1) + " names but .numvars is " +
                                  std::to_string(*numvars));
                }
                for (size_t k = 1; k < tokens.size(); k++) {
                    if (!variables.emplace(std::string(tokens[k]), static_cast<uint32_t>(k - 1)).second) {
                        throw ParseError(line, "duplicate variable '" + std::string(tokens[k]) + "'");
                    }
                }
            } else if (head == ".begin") {
                if (variables.empty()) {
                    throw ParseError(line, ".begin before .numvars/.variables");
                }
                circuit.emplace(static_cast<uint32_t>(*numvars), name);
                in_body = true;
            } else if (head == ".end") {
                if (!in_body) {
                    throw ParseError(line, ".end without .begin");
                }
                in_body = false;
                ended = true;
            }
            // .version, .inputs, .outputs, .constants, .garbage and friends carry no structure.
            continue;
        }

        if (!in_body) {
            throw ParseError(line, "gate outside .begin/.end");
        }
        size_t digits = head.find_first_of("0123456789");
        auto arity = digits == std::string::npos ? std::nullopt : parse_uint(std::string_view(head).substr(digits));
        if (digits == 0 || !arity.has_value() || *arity < 1) {
            throw ParseError(line, "malformed gate '" + std::string(tokens[0]) + "'");
        }
        if (tokens.size() - 1 != *arity) {
            throw ParseError(
                line, "gate '" + std::string(tokens[0]) + "' expects " + std::to_string(*arity) + " operands");
        }
        std::string kind = head.substr(0, digits);
        std::vector<QubitId> operands;
        for (size_t k = 1; k < tokens.size(); k++) {
            auto it = variables.find(tokens[k]);
            if (it == variables.end()) {
                throw ParseError(line, "unknown variable '" + std::string(tokens[k]) + "'");
            }
            if (std::find(operands.begin(), operands.end(), QubitId{it->second}) != operands.end()) {
                throw ParseError(line, "variable '" + std::string(tokens[k]) + "' repeated in one gate");
            }
            operands.push_back(QubitId{it->second});
        }

        if (operands.size() == 1) {
            circuit->append(kind == "t" ? "x" : kind, operands[0]);
        } else if (operands.size() == 2) {
            circuit->append(kind == "t" ? "cnot" : kind, operands[0], operands[1]);
        } else if (decompose_mct) {
            for (size_t k = 0; k + 1 < operands.size(); k++) {
                circuit->append("cnot", operands[k], operands.back());
            }
            circuit->mark_approximate();
        } else {
            throw ParseError(
                line, "unsupported " + std::to_string(operands.size()) + "-qubit gate '" + std::string(tokens[0]) +
                          "' (use --decompose-mct)");
        }
    }

    if (!circuit.has_value()) {
        throw ParseError(0, "missing .begin section");
    }
    if (in_body) {
        throw ParseError(0, "missing .end");
    }
    return std::move(*circuit);
}

Circuit gen_qft(uint32_t n) {
    if (n < 1) {
        throw InfeasibleError("qft needs at least 1 qubit");
    }
    Circuit circuit(n, "qft_" + std::to_string(n));
    for (uint32_t i = 0; i < n; i++) {
        circuit.append("h", QubitId{i});
        for (uint32_t j = i + 1; j < n; j++) {
            circuit.append("cr", QubitId{j}, QubitId{i});
        }
    }
    return circuit;
}

}  // namespace qcpart
