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

#include "qcpart/report.h"

#include <sstream>

namespace qcpart {

using nlohmann::json;

std::vector<DpTableRow> table_rows(const DpTable &table) {
    std::vector<DpTableRow> rows;
    const uint32_t full = QubitSubset::all(table.qubit_count()).mask();
    for (uint32_t mask = 1; mask != 0 && mask <= full; mask++) {
        QubitSubset s(mask);
        DpTableRow row{mask, s.render(), {}};
        for (uint32_t k = 1; k <= table.max_parts(); k++) {
            row.costs.push_back(table.cost(s, k));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RunReport make_report(const Circuit &circuit, const PartitionResult &result, std::string algorithm) {
    RunReport r;
    r.algorithm = std::move(algorithm);
    r.circuit_name = circuit.name();
    r.width = circuit.width();
    r.gate_count = circuit.gates().size();
    r.parts = result.assignment.part_count();
    r.cost = result.cost;
    r.ratio_r = compute_metrics(circuit, result).ratio_r.to_fixed(2);
    for (QubitSubset part : result.assignment.parts()) {
        std::vector<uint32_t> qubits;
        for (QubitId q : part.qubits()) {
            qubits.push_back(q.index + 1);
        }
        r.assignment.push_back(std::move(qubits));
    }
    r.approximate = circuit.approximate();
    r.constrained = result.max_part_size.has_value();
    return r;
}

namespace {

json trace_to_json(const TraceEntry &e) {
    return json{{"gate", e.gate_ordinal + 1},
                {"rendering", e.rendering},
                {"type", e.kind == GateKind::Global ? "G" : "L"},
                {"parts", e.parts},
                {"teleports_so_far", e.teleports_so_far}};
}

TraceEntry trace_from_json(const json &j) {
    TraceEntry e;
    e.gate_ordinal = j.at("gate").get<uint32_t>() - 1;
    e.rendering = j.at("rendering").get<std::string>();
    e.kind = j.at("type").get<std::string>() == "G" ? GateKind::Global : GateKind::Local;
    e.parts = j.at("parts").get<std::vector<uint32_t>>();
    e.teleports_so_far = j.at("teleports_so_far").get<uint64_t>();
    return e;
}

template <typename T>
json optional_to_json(const std::optional<T> &v) {
    return v.has_value() ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

std::string assignment_cell(const RunReport &r) {
    std::string out;
    for (size_t p = 0; p < r.assignment.size(); p++) {
        if (p > 0) {
            out += '|';
        }
        for (size_t k = 0; k < r.assignment[p].size(); k++) {
            if (k > 0) {
                out += ' ';
            }
            out += std::to_string(r.assignment[p][k]);
        }
    }
    return out;
}

}  // namespace

json to_json(const RunReport &r) {
    json flags{{"source", r.flags.source},
               {"format", r.flags.format},
               {"table", r.flags.table},
               {"trace", r.flags.trace},
               {"decompose_mct", r.flags.decompose_mct},
               {"force", r.flags.force},
               {"no_timing", r.flags.no_timing},
               {"threads", r.flags.threads},
               {"max_part_size", optional_to_json(r.flags.max_part_size)}};
    json j{{"algorithm", r.algorithm},
           {"circuit_name", r.circuit_name},
           {"width", r.width},
           {"gate_count", r.gate_count},
           {"K", r.parts},
           {"cost", r.cost},
           {"ratio_r", r.ratio_r},
           {"assignment", r.assignment},
           {"approximate", r.approximate},
           {"constrained", r.constrained},
           {"wall_time_ms", r.wall_time_ms},
           {"flags", flags}};
    if (r.trace.has_value()) {
        json trace = json::array();
        for (const TraceEntry &e : *r.trace) {
            trace.push_back(trace_to_json(e));
        }
        j["trace"] = trace;
    }
    if (r.dp_table.has_value()) {
        json rows = json::array();
        for (const DpTableRow &row : *r.dp_table) {
            json costs = json::array();
            for (const auto &c : row.costs) {
                costs.push_back(optional_to_json(c));
            }
            rows.push_back(json{{"index", row.index}, {"qubits", row.qubits}, {"costs", costs}});
        }
        j["dp_table"] = rows;
    }
    if (r.dp_cost.has_value()) {
        j["dp_cost"] = *r.dp_cost;
    }
    if (r.match.has_value()) {
        j["match"] = *r.match;
    }
    return j;
}

RunReport report_from_json(const json &j) {
    RunReport r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.circuit_name = j.at("circuit_name").get<std::string>();
    r.width = j.at("width").get<uint32_t>();
    r.gate_count = j.at("gate_count").get<uint64_t>();
    r.parts = j.at("K").get<uint32_t>();
    r.cost = j.at("cost").get<int64_t>();
    r.ratio_r = j.at("ratio_r").get<std::string>();
    r.assignment = j.at("assignment").get<std::vector<std::vector<uint32_t>>>();
    r.approximate = j.at("approximate").get<bool>();
    r.constrained = j.at("constrained").get<bool>();
    r.wall_time_ms = j.at("wall_time_ms").get<int64_t>();

    const json &f = j.at("flags");
    r.flags.source = f.at("source").get<std::string>();
    r.flags.format = f.at("format").get<std::string>();
    r.flags.table = f.at("table").get<bool>();
    r.flags.trace = f.at("trace").get<bool>();
    r.flags.decompose_mct = f.at("decompose_mct").get<bool>();
    r.flags.force = f.at("force").get<bool>();
    r.flags.no_timing = f.at("no_timing").get<bool>();
    r.flags.threads = f.at("threads").get<uint32_t>();
    r.flags.max_part_size = optional_from_json<uint32_t>(f, "max_part_size");

    if (j.contains("trace")) {
        std::vector<TraceEntry> trace;
        for (const json &e : j.at("trace")) {
            trace.push_back(trace_from_json(e));
        }
        r.trace = std::move(trace);
    }
    if (j.contains("dp_table")) {
        std::vector<DpTableRow> rows;
        for (const json &row : j.at("dp_table")) {
            DpTableRow out{row.at("index").get<uint32_t>(), row.at("qubits").get<std::string>(), {}};
            for (const json &c : row.at("costs")) {
                out.costs.push_back(c.is_null() ? std::nullopt : std::optional<int64_t>(c.get<int64_t>()));
            }
            rows.push_back(std::move(out));
        }
        r.dp_table = std::move(rows);
    }
    r.dp_cost = optional_from_json<int64_t>(j, "dp_cost");
    r.match = optional_from_json<bool>(j, "match");
    return r;
}

std::string render_text(const RunReport &r) {
    std::ostringstream out;
    out << "circuit: " << r.circuit_name << "\n";
    out << "qubits: " << r.width << "\n";
    out << "gates: " << r.gate_count << "\n";
    out << "K: " << r.parts << "\n";
    out << "algorithm: " << r.algorithm << "\n";
    out << "cost: " << r.cost << "\n";
    out << "R: " << r.ratio_r << "\n";
    if (r.constrained && r.flags.max_part_size.has_value()) {
        out << "max_part_size: " << *r.flags.max_part_size << " (constrained)\n";
    }
    for (size_t p = 0; p < r.assignment.size(); p++) {
        out << "p" << p << ":";
        for (uint32_t q : r.assignment[p]) {
            out << " q" << q;
        }
        out << "\n";
    }
    if (r.approximate) {
        out << "note: multi-controlled gates were replaced by pairwise CNOTs; cost is approximate\n";
    }
    if (r.dp_cost.has_value()) {
        out << "dp_cost: " << *r.dp_cost << "\n";
    }
    if (r.match.has_value()) {
        out << "match: " << (*r.match ? "yes" : "no") << "\n";
    }
    if (!r.flags.no_timing) {
        out << "wall_time_ms: " << r.wall_time_ms << "\n";
    }
    if (r.trace.has_value()) {
        out << "\n" << render_trace_table(*r.trace);
    }
    return out.str();
}

std::string csv_escape(const std::string &field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string csv_header() {
    return "name,n,gates,K,cost,R,time_ms,assignment,approximate,error\n";
}

std::string csv_row(const RunReport &r) {
    std::ostringstream out;
    out << csv_escape(r.circuit_name) << ',' << r.width << ',' << r.gate_count << ',' << r.parts << ',' << r.cost
        << ',' << r.ratio_r << ',';
    if (!r.flags.no_timing) {
        out << r.wall_time_ms;
    }
    out << ',' << assignment_cell(r) << ',' << (r.approximate ? "yes" : "no") << ",\n";
    return out.str();
}

std::string csv_error_row(const std::string &name, std::optional<uint32_t> width, std::optional<uint64_t> gates,
                          std::optional<uint32_t> parts, const std::string &error) {
    std::ostringstream out;
    out << csv_escape(name) << ',';
    if (width) {
        out << *width;
    }
    out << ',';
    if (gates) {
        out << *gates;
    }
    out << ',';
    if (parts) {
        out << *parts;
    }
    out << ",,,,,," << csv_escape(error) << "\n";
    return out.str();
}

}  // namespace qcpart
