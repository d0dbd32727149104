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

#include "qcpart/cli.h"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qcpart/bigraph.h"
#include "qcpart/circuit.h"
#include "qcpart/errors.h"
#include "qcpart/executor.h"
#include "qcpart/partitioner.h"
#include "qcpart/report.h"

namespace qcpart {

namespace {

uint32_t parse_u32(std::string_view token, std::string_view what) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw InfeasibleError("invalid " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

struct Options {
    std::string circuit;
    std::string gen;
    std::vector<std::string> circuits;
    std::vector<std::string> gens;
    std::string parts;
    std::optional<uint32_t> max_part_size;
    std::string format = "text";
    bool table = false;
    bool trace = false;
    bool decompose_mct = false;
    bool force = false;
    bool no_timing = false;
    uint32_t threads = 1;
    std::string dot;
    std::string compare;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Circuit load_circuit_file(const std::string &path, bool decompose_mct) {
    std::string text = read_file(path);
    std::filesystem::path p(path);
    std::string name = p.stem().string();
    try {
        if (p.extension() == ".real") {
            return import_real(text, decompose_mct, name);
        }
        return parse_circuit(text, name);
    } catch (const ParseError &e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

Circuit generate(const std::string &name, uint32_t size) {
    if (name == "qft") {
        return gen_qft(size);
    }
    throw InfeasibleError("unknown generator '" + name + "' (available: qft)");
}

Circuit load_single(const Options &o) {
    if (o.circuit.empty() == o.gen.empty()) {
        throw InfeasibleError("exactly one of --circuit or --gen is required");
    }
    if (!o.circuit.empty()) {
        return load_circuit_file(o.circuit, o.decompose_mct);
    }
    GeneratorSpec spec = parse_generator_spec(o.gen);
    if (spec.sizes.size() != 1) {
        throw InfeasibleError("--gen takes a single size here");
    }
    return generate(spec.name, spec.sizes.front());
}

uint32_t single_k(const Options &o) {
    auto ks = parse_int_list(o.parts);
    if (ks.size() != 1) {
        throw InfeasibleError("--parts takes a single K here");
    }
    return ks.front();
}

RunFlags flags_of(const Options &o, const std::string &source) {
    RunFlags f;
    f.source = source;
    f.format = o.format;
    f.table = o.table;
    f.trace = o.trace;
    f.decompose_mct = o.decompose_mct;
    f.force = o.force;
    f.no_timing = o.no_timing;
    f.threads = o.threads;
    f.max_part_size = o.max_part_size;
    return f;
}

DpOptions dp_options(const Options &o, bool keep_table) {
    DpOptions d;
    d.threads = std::max<uint32_t>(o.threads, 1);
    d.qubit_cap = o.force ? kMaxDpQubits : kDefaultDpQubitCap;
    d.keep_table = keep_table;
    return d;
}

PartitionResult run_dp(const WeightMatrix &w, uint32_t k, const Options &o, bool keep_table) {
    DpOptions d = dp_options(o, keep_table);
    try {
        if (o.max_part_size.has_value()) {
            return dp_partition_capped(w, k, *o.max_part_size, d);
        }
        return dp_partition(w, k, d);
    } catch (const CapExceededError &e) {
        throw CapExceededError(
            std::string(e.what()) + (o.force ? "" : "; pass --force to raise the cap") +
            ", or use 'oracle' for circuits of at most " + std::to_string(kDefaultOracleQubitCap) + " qubits");
    }
}

uint32_t oracle_cap_from_env() {
    const char *env = std::getenv("QCPART_ORACLE_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultOracleQubitCap;
    }
    return parse_u32(env, "QCPART_ORACLE_CAP");
}

std::string source_of(const Options &o) {
    return o.circuit.empty() ? "gen:" + o.gen : o.circuit;
}

void write_dot_if_requested(const Options &o, const BipartiteGraph &graph, const Circuit &circuit) {
    if (o.dot.empty()) {
        return;
    }
    std::ofstream out(o.dot);
    if (!out) {
        throw std::runtime_error("cannot write '" + o.dot + "'");
    }
    out << to_dot(graph, circuit.name());
}

void emit(const RunReport &report, const std::optional<DpTable> &table, const Options &o, std::ostream &out) {
    if (o.format == "json") {
        out << to_json(report).dump(2) << "\n";
        return;
    }
    if (o.format == "csv") {
        out << csv_header() << csv_row(report);
    } else {
        out << render_text(report);
    }
    if (table.has_value()) {
        out << "\n" << table->to_csv();
    }
}

int cmd_partition(const Options &o, std::ostream &out) {
    Circuit circuit = load_single(o);
    uint32_t k = single_k(o);
    BipartiteGraph graph = qc_to_bigraph(circuit);
    write_dot_if_requested(o, graph, circuit);
    WeightMatrix w = weight_matrix(graph);

    auto start = std::chrono::steady_clock::now();
    PartitionResult result = run_dp(w, k, o, o.table);
    auto elapsed = std::chrono::steady_clock::now() - start;

    RunReport report = make_report(circuit, result, "dp");
    report.flags = flags_of(o, source_of(o));
    if (!o.no_timing) {
        report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    if (o.trace) {
        report.trace = trace_execution(circuit, result.assignment);
    }
    if (result.table.has_value()) {
        report.dp_table = table_rows(*result.table);
    }
    emit(report, result.table, o, out);
    return kExitOk;
}

int cmd_oracle(const Options &o, std::ostream &out) {
    Circuit circuit = load_single(o);
    uint32_t k = single_k(o);
    BipartiteGraph graph = qc_to_bigraph(circuit);
    write_dot_if_requested(o, graph, circuit);
    WeightMatrix w = weight_matrix(graph);

    OracleOptions oracle_options;
    oracle_options.qubit_cap = oracle_cap_from_env();
    oracle_options.max_part_size = o.max_part_size;
    auto start = std::chrono::steady_clock::now();
    auto solve = [&] {
        try {
            return oracle_partition(w, k, oracle_options);
        } catch (const CapExceededError &e) {
            throw CapExceededError(std::string(e.what()) + "; set QCPART_ORACLE_CAP to raise it or use 'partition'");
        }
    };
    PartitionResult result = solve();
    auto elapsed = std::chrono::steady_clock::now() - start;

    RunReport report = make_report(circuit, result, "oracle");
    report.flags = flags_of(o, source_of(o));
    if (!o.no_timing) {
        report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    if (o.trace) {
        report.trace = trace_execution(circuit, result.assignment);
    }
    if (!o.compare.empty()) {
        RunReport dp;
        try {
            dp = report_from_json(nlohmann::json::parse(read_file(o.compare)));
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(0, o.compare + ": " + e.what());
        }
        if (dp.parts != k || dp.width != circuit.width()) {
            throw InfeasibleError("comparison report was produced for a different K or circuit width");
        }
        report.dp_cost = dp.cost;
        report.match = dp.cost == result.cost;
    }
    emit(report, std::nullopt, o, out);
    return kExitOk;
}

int cmd_bench(const Options &o, std::ostream &out) {
    std::vector<uint32_t> ks = o.parts.empty() ? std::vector<uint32_t>{} : parse_int_list(o.parts);
    Options row_options = o;
    out << csv_header();

    auto run_rows = [&](const Circuit &circuit, const std::string &source) {
        WeightMatrix w = weight_matrix(qc_to_bigraph(circuit));
        for (uint32_t k : ks) {
            try {
                auto start = std::chrono::steady_clock::now();
                PartitionResult result = run_dp(w, k, row_options, false);
                auto elapsed = std::chrono::steady_clock::now() - start;
                RunReport report = make_report(circuit, result, "dp");
                report.flags = flags_of(o, source);
                report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
                out << csv_row(report);
            } catch (const std::exception &e) {
                out << csv_error_row(circuit.name(), circuit.width(), circuit.gates().size(), k, e.what());
            }
        }
    };

    for (const std::string &path : o.circuits) {
        std::optional<Circuit> circuit;
        try {
            circuit = load_circuit_file(path, o.decompose_mct);
        } catch (const std::exception &e) {
            out << csv_error_row(path, std::nullopt, std::nullopt, std::nullopt, e.what());
            continue;
        }
        run_rows(*circuit, path);
    }
    for (const std::string &text : o.gens) {
        GeneratorSpec spec = parse_generator_spec(text);
        for (uint32_t size : spec.sizes) {
            std::optional<Circuit> circuit;
            try {
                circuit = generate(spec.name, size);
            } catch (const std::exception &e) {
                out << csv_error_row(spec.name + "_" + std::to_string(size), std::nullopt, std::nullopt,
                                     std::nullopt, e.what());
                continue;
            }
            run_rows(*circuit, "gen:" + text);
        }
    }
    return kExitOk;
}

int cmd_gen(const std::string &name, uint32_t qubits, const std::string &output, std::ostream &out) {
    Circuit circuit = generate(name, qubits);
    std::string text = "# " + circuit.name() + "\n" + render_circuit(circuit);
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream file(output);
        if (!file) {
            throw std::runtime_error("cannot write '" + output + "'");
        }
        file << text;
    }
    return kExitOk;
}

void add_single_source(CLI::App *cmd, Options &o) {
    cmd->add_option("--circuit", o.circuit, "Circuit file (.qc, or .real for the RevLib subset)");
    cmd->add_option("--gen", o.gen, "Generated circuit, e.g. qft:8");
}

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("--parts", o.parts, "Number of parts K")->required();
    cmd->add_option("--max-part-size", o.max_part_size, "Upper bound on qubits per part");
    cmd->add_flag("--decompose-mct", o.decompose_mct, "Replace multi-controlled gates by pairwise CNOTs");
    cmd->add_option("--threads", o.threads, "Worker threads for the DP sweep")->check(CLI::PositiveNumber);
    cmd->add_flag("--force", o.force, "Raise the DP qubit cap from 24 to 30");
    cmd->add_flag("--no-timing", o.no_timing, "Omit wall-clock timings");
}

}  // namespace

std::vector<uint32_t> parse_int_list(std::string_view text) {
    std::vector<uint32_t> out;
    if (text.empty()) {
        throw InfeasibleError("empty list");
    }
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (auto dots = item.find(".."); dots != std::string_view::npos) {
            uint32_t lo = parse_u32(item.substr(0, dots), "range start");
            uint32_t hi = parse_u32(item.substr(dots + 2), "range end");
            if (lo > hi) {
                throw InfeasibleError("empty range '" + std::string(item) + "'");
            }
            for (uint32_t v = lo; v <= hi; v++) {
                out.push_back(v);
            }
        } else {
            out.push_back(parse_u32(item, "value"));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw InfeasibleError("generator spec must look like name:size, got '" + std::string(text) + "'");
    }
    return GeneratorSpec{std::string(text.substr(0, colon)), parse_int_list(text.substr(colon + 1))};
}

int run_cli(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
    CLI::App app("Exact minimum-teleportation partitioning of quantum circuits", "qcpart");
    app.require_subcommand(1);

    Options o;
    auto *partition = app.add_subcommand("partition", "Optimal K-way partition by subset dynamic programming");
    add_single_source(partition, o);
    add_common(partition, o);
    partition->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    partition->add_flag("--table", o.table, "Also emit the full memo table as CSV");
    partition->add_flag("--trace", o.trace, "Include the local/global execution trace");
    partition->add_option("--dot", o.dot, "Write the qubit/gate bigraph as Graphviz DOT");

    auto *oracle = app.add_subcommand("oracle", "Brute-force optimum over all set partitions");
    add_single_source(oracle, o);
    add_common(oracle, o);
    oracle->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    oracle->add_flag("--trace", o.trace, "Include the local/global execution trace");
    oracle->add_option("--dot", o.dot, "Write the qubit/gate bigraph as Graphviz DOT");
    oracle->add_option("--compare", o.compare, "JSON report from 'partition' to check against");

    auto *bench = app.add_subcommand("bench", "CSV sweep over circuits and part counts");
    bench->add_option("--circuit", o.circuits, "Circuit file (repeatable)");
    bench->add_option("--gen", o.gens, "Generator with size range, e.g. qft:4..8 (repeatable)");
    add_common(bench, o);
    bench->get_option("--parts")->required(false);

    std::string gen_name;
    uint32_t gen_qubits = 0;
    std::string gen_output;
    auto *gen = app.add_subcommand("gen", "Write a generated circuit in .qc format");
    gen->add_option("generator", gen_name, "Generator name (qft)")->required();
    gen->add_option("--qubits", gen_qubits, "Circuit width")->required();
    gen->add_option("--output,-o", gen_output, "Output path (default: stdout)");

    std::vector<const char *> args;
    for (const std::string &a : argv) {
        args.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInfeasible;
    }

    try {
        if (*partition) {
            return cmd_partition(o, out);
        }
        if (*oracle) {
            return cmd_oracle(o, out);
        }
        if (*bench) {
            return cmd_bench(o, out);
        }
        return cmd_gen(gen_name, gen_qubits, gen_output, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const CapExceededError &e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInfeasible;
    }
}

}  // namespace qcpart
