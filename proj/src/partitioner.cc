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

#include "qcpart/partitioner.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcpart/errors.h"

namespace qcpart {

QubitSubset QubitSubset::of(std::initializer_list<uint32_t> qubits) {
    uint32_t mask = 0;
    for (uint32_t q : qubits) {
        if (q >= 32) {
            throw std::out_of_range("qubit index beyond subset capacity");
        }
        mask |= uint32_t{1} << q;
    }
    return QubitSubset(mask);
}

std::vector<QubitId> QubitSubset::qubits() const {
    std::vector<QubitId> out;
    for (uint32_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(QubitId{static_cast<uint32_t>(std::countr_zero(m))});
    }
    return out;
}

std::string QubitSubset::render() const {
    auto qs = qubits();
    std::string out = "{";
    for (auto it = qs.rbegin(); it != qs.rend(); ++it) {
        if (it != qs.rbegin()) {
            out += ',';
        }
        out += std::to_string(it->index + 1);
    }
    return out + "}";
}

DpTable::DpTable(uint32_t qubit_count, uint32_t max_parts) : qubit_count_(qubit_count), levels_(max_parts) {
}

size_t DpTable::slot(const Level &level, QubitSubset s) const {
    if (s.mask() > QubitSubset::all(qubit_count_).mask()) {
        throw std::out_of_range("subset references qubits beyond the table");
    }
    if (level.cost.size() == 1) {
        if (s != QubitSubset::all(qubit_count_)) {
            throw std::out_of_range("entry " + std::to_string(s.mask()) + " was not retained");
        }
        return 0;
    }
    return s.mask();
}

std::optional<Cost> DpTable::cost(QubitSubset s, uint32_t k) const {
    if (k < 1 || k > levels_.size()) {
        throw std::out_of_range("part count outside the table");
    }
    const Level &level = levels_[k - 1];
    int32_t c = level.cost.at(slot(level, s));
    if (c == kUnreached) {
        return std::nullopt;
    }
    return c;
}

QubitSubset DpTable::choice(QubitSubset s, uint32_t k) const {
    if (k < 2 || k > levels_.size()) {
        throw std::out_of_range("choices exist only for 2 <= k <= K");
    }
    const Level &level = levels_[k - 1];
    return QubitSubset(level.choice.at(slot(level, s)));
}

bool DpTable::complete() const {
    size_t dense = size_t{1} << qubit_count_;
    return std::all_of(levels_.begin(), levels_.end(), [&](const Level &l) {
        return l.cost.size() == dense;
    });
}

std::string DpTable::to_csv() const {
    if (!complete()) {
        throw std::logic_error("table was computed for a single request and is not complete");
    }
    std::ostringstream out;
    out << "index,qubits";
    for (uint32_t k = 1; k <= max_parts(); k++) {
        out << ",k=" << k;
    }
    out << "\n";
    for (uint32_t mask = 1; mask <= QubitSubset::all(qubit_count_).mask(); mask++) {
        QubitSubset s(mask);
        out << mask << ",\"" << s.render() << "\"";
        for (uint32_t k = 1; k <= max_parts(); k++) {
            auto c = cost(s, k);
            out << ',';
            if (c.has_value()) {
                out << *c;
            } else {
                out << "N.A";
            }
        }
        out << "\n";
        if (mask == UINT32_MAX) {
            break;
        }
    }
    return out.str();
}

PartitionAssignment PartitionAssignment::from_parts(uint32_t qubit_count, std::vector<QubitSubset> parts) {
    if (parts.empty()) {
        throw std::invalid_argument("an assignment needs at least one part");
    }
    uint32_t seen = 0;
    for (QubitSubset p : parts) {
        if (p.empty()) {
            throw std::invalid_argument("parts must be non-empty");
        }
        if (p.mask() & seen) {
            throw std::invalid_argument("parts must be disjoint");
        }
        seen |= p.mask();
    }
    if (seen != QubitSubset::all(qubit_count).mask()) {
        throw std::invalid_argument("parts must cover every qubit exactly once");
    }
    PartitionAssignment a;
    a.part_of_.resize(qubit_count);
    for (uint32_t i = 0; i < parts.size(); i++) {
        for (QubitId q : parts[i].qubits()) {
            a.part_of_[q.index] = i;
        }
    }
    a.parts_ = std::move(parts);
    return a;
}

PartitionAssignment PartitionAssignment::from_part_of(std::vector<uint32_t> part_of) {
    if (part_of.empty() || part_of.size() > 32) {
        throw std::invalid_argument("assignments cover 1..32 qubits");
    }
    uint32_t k = *std::max_element(part_of.begin(), part_of.end()) + 1;
    std::vector<QubitSubset> parts(k);
    for (uint32_t q = 0; q < part_of.size(); q++) {
        parts[part_of[q]] = QubitSubset(parts[part_of[q]].mask() | uint32_t{1} << q);
    }
    return from_parts(static_cast<uint32_t>(part_of.size()), std::move(parts));
}

PartitionAssignment PartitionAssignment::canonical() const {
    std::vector<QubitSubset> sorted = parts_;
    std::sort(sorted.begin(), sorted.end(), [](QubitSubset a, QubitSubset b) {
        return a.lowest() < b.lowest();
    });
    return from_parts(qubit_count(), std::move(sorted));
}

Cost connect(QubitSubset s1, QubitSubset s2, const WeightMatrix &w) {
    if (s1.intersects(s2)) {
        throw std::invalid_argument("connect requires disjoint qubit sets");
    }
    Cost total = 0;
    for (QubitId i : s1.qubits()) {
        for (QubitId j : s2.qubits()) {
            if (i.index >= w.size() || j.index >= w.size()) {
                throw std::out_of_range("subset references qubits beyond the weight matrix");
            }
            total += static_cast<Cost>(w.at(i.index, j.index));
        }
    }
    return total;
}

Cost assignment_cost(const WeightMatrix &w, const PartitionAssignment &assignment) {
    if (assignment.qubit_count() != w.size()) {
        throw std::invalid_argument("assignment and weight matrix disagree on qubit count");
    }
    Cost total = 0;
    for (uint32_t i = 0; i < w.size(); i++) {
        for (uint32_t j = i + 1; j < w.size(); j++) {
            if (assignment.part_of(QubitId{i}) != assignment.part_of(QubitId{j})) {
                total += static_cast<Cost>(w.at(i, j));
            }
        }
    }
    return total;
}

/// Level-by-level evaluation of the subset recurrence.
class DpSolver {
   public:
    DpSolver(const WeightMatrix &w, uint32_t parts, uint32_t max_part_size, const DpOptions &options)
        : n_(w.size()), parts_(parts), cap_(std::min(max_part_size, w.size())), options_(options) {
        if (n_ > options.qubit_cap || n_ > kMaxDpQubits) {
            throw CapExceededError(
                std::to_string(n_) + " qubits exceeds the DP cap of " +
                std::to_string(std::min(options.qubit_cap, kMaxDpQubits)));
        }
        if (parts < 1 || parts > n_) {
            throw InfeasibleError("K must lie in [1, " + std::to_string(n_) + "], got " + std::to_string(parts));
        }
        if (max_part_size < 1 || static_cast<uint64_t>(parts) * max_part_size < n_) {
            throw InfeasibleError(
                "cannot fit " + std::to_string(n_) + " qubits into " + std::to_string(parts) +
                " parts of at most " + std::to_string(max_part_size));
        }
        if (w.total() >= static_cast<uint64_t>(DpTable::kUnreached)) {
            throw std::overflow_error("total interaction weight does not fit the memo table");
        }
        build_internal_weights(w);
    }

    DpTable solve(bool keep_all_levels) {
        DpTable table(n_, parts_);
        const size_t states = size_t{1} << n_;
        const uint32_t full = QubitSubset::all(n_).mask();

        auto &base = table.levels_[0];
        base.cost.assign(states, DpTable::kUnreached);
        for (uint32_t s = 1; s <= full; s++) {
            if (static_cast<uint32_t>(std::popcount(s)) <= cap_) {
                base.cost[s] = 0;
            }
            if (s == UINT32_MAX) {
                break;
            }
        }

        for (uint32_t k = 2; k <= parts_; k++) {
            const auto &prev = table.levels_[k - 2].cost;
            auto &level = table.levels_[k - 1];
            if (k < parts_ || keep_all_levels) {
                level.cost.assign(states, DpTable::kUnreached);
                level.choice.assign(states, 0);
                sweep(prev, k, level);
            } else {
                level.cost.assign(1, DpTable::kUnreached);
                level.choice.assign(1, 0);
                evaluate(prev, k, full, level.cost[0], level.choice[0]);
            }
        }
        return table;
    }

   private:
    void build_internal_weights(const WeightMatrix &w) {
        // internal_[S] = sum of w over unordered pairs inside S.
        internal_.assign(size_t{1} << n_, 0);
        for (uint32_t s = 1; s < (size_t{1} << n_); s++) {
            uint32_t low = static_cast<uint32_t>(std::countr_zero(s));
            uint32_t rest = s & (s - 1);
            Cost add = 0;
            for (uint32_t m = rest; m != 0; m &= m - 1) {
                add += static_cast<Cost>(w.at(low, static_cast<uint32_t>(std::countr_zero(m))));
            }
            internal_[s] = internal_[rest] + add;
        }
    }

    void evaluate(const std::vector<int32_t> &prev, uint32_t k, uint32_t s, int32_t &cost_out,
                  uint32_t &choice_out) const {
        if (static_cast<uint32_t>(std::popcount(s)) < k) {
            return;
        }
        const uint32_t low = s & (~s + 1);
        const uint32_t splittable = s ^ low;
        const Cost whole = internal_[s];
        Cost best = std::numeric_limits<Cost>::max();
        uint32_t best_sub = 0;
        // Descending enumeration with <= keeps the lowest mask among ties.
        for (uint32_t sub = splittable; sub != 0; sub = (sub - 1) & splittable) {
            if (static_cast<uint32_t>(std::popcount(sub)) > cap_) {
                continue;
            }
            const uint32_t rest = s ^ sub;
            const int32_t tail = prev[rest];
            if (tail == DpTable::kUnreached) {
                continue;
            }
            // connect(sub, rest) = internal(s) - internal(sub) - internal(rest)
            const Cost q = whole - internal_[sub] - internal_[rest] + tail;
            if (q <= best) {
                best = q;
                best_sub = sub;
            }
        }
        if (best_sub != 0) {
            if (best >= DpTable::kUnreached) {
                throw std::overflow_error("memo cost overflow");
            }
            cost_out = static_cast<int32_t>(best);
            choice_out = best_sub;
        }
    }

    void sweep(const std::vector<int32_t> &prev, uint32_t k, DpTable::Level &level) const {
        const uint64_t states = uint64_t{1} << n_;
        auto run_range = [&](uint64_t begin, uint64_t end) {
            for (uint64_t s = begin; s < end; s++) {
                evaluate(prev, k, static_cast<uint32_t>(s), level.cost[s], level.choice[s]);
            }
        };
        if (options_.threads <= 1 || states < 4096) {
            run_range(1, states);
            return;
        }
        // Level barrier: workers read only `prev` and write disjoint entries of `level`.
        constexpr uint64_t kChunk = 1024;
        std::atomic<uint64_t> next{1};
        auto worker = [&] {
            for (uint64_t begin = next.fetch_add(kChunk); begin < states; begin = next.fetch_add(kChunk)) {
                run_range(begin, std::min(states, begin + kChunk));
            }
        };
        std::vector<std::jthread> pool;
        for (uint32_t t = 0; t < options_.threads; t++) {
            pool.emplace_back(worker);
        }
    }

    uint32_t n_;
    uint32_t parts_;
    uint32_t cap_;
    DpOptions options_;
    std::vector<Cost> internal_;
};

namespace {

PartitionResult solve_and_reconstruct(
    const WeightMatrix &w, uint32_t parts, uint32_t max_part_size, const DpOptions &options) {
    DpSolver solver(w, parts, max_part_size, options);
    DpTable table = solver.solve(options.keep_table);

    const uint32_t n = w.size();
    QubitSubset remaining = QubitSubset::all(n);
    auto total = table.cost(remaining, parts);
    if (!total.has_value()) {
        throw InfeasibleError("no feasible partition");
    }
    std::vector<QubitSubset> blocks;
    for (uint32_t k = parts; k >= 2; k--) {
        QubitSubset split = table.choice(remaining, k);
        blocks.push_back(split);
        remaining = QubitSubset(remaining.mask() ^ split.mask());
    }
    blocks.push_back(remaining);

    PartitionResult result{
        PartitionAssignment::from_parts(n, std::move(blocks)).canonical(), *total, std::nullopt, std::nullopt};
    if (options.keep_table) {
        result.table = std::move(table);
    }
    return result;
}

}  // namespace

PartitionResult dp_partition(const WeightMatrix &w, uint32_t parts, const DpOptions &options) {
    return solve_and_reconstruct(w, parts, std::max<uint32_t>(w.size(), 1), options);
}

PartitionResult dp_partition_capped(
    const WeightMatrix &w, uint32_t parts, uint32_t max_part_size, const DpOptions &options) {
    PartitionResult result = solve_and_reconstruct(w, parts, max_part_size, options);
    result.max_part_size = max_part_size;
    return result;
}

DpTable dp_table(const WeightMatrix &w, uint32_t parts, const DpOptions &options) {
    DpSolver solver(w, parts, std::max<uint32_t>(w.size(), 1), options);
    return solver.solve(true);
}

PartitionResult oracle_partition(const WeightMatrix &w, uint32_t parts, const OracleOptions &options) {
    const uint32_t n = w.size();
    if (n > options.qubit_cap) {
        throw CapExceededError(
            std::to_string(n) + " qubits exceeds the oracle cap of " + std::to_string(options.qubit_cap));
    }
    if (parts < 1 || parts > n) {
        throw InfeasibleError("K must lie in [1, " + std::to_string(n) + "], got " + std::to_string(parts));
    }
    const uint32_t cap = options.max_part_size.value_or(n);
    if (cap < 1 || static_cast<uint64_t>(parts) * cap < n) {
        throw InfeasibleError("part-size cap cannot cover every qubit");
    }

    // Restricted growth string: label[i] <= max(label[0..i-1]) + 1, exactly `parts` labels.
    std::vector<uint32_t> label(n, 0);
    std::vector<uint32_t> block_size(parts, 0);
    std::vector<uint32_t> best_label;
    Cost best = std::numeric_limits<Cost>::max();

    auto recurse = [&](auto &&self, uint32_t i, uint32_t used, Cost cost) -> void {
        if (i == n) {
            if (used == parts && cost < best) {
                best = cost;
                best_label = label;
            }
            return;
        }
        if (n - i < parts - used) {
            return;
        }
        uint32_t limit = std::min(used + 1, parts);
        for (uint32_t b = 0; b < limit; b++) {
            if (block_size[b] == cap) {
                continue;
            }
            Cost add = 0;
            for (uint32_t j = 0; j < i; j++) {
                if (label[j] != b) {
                    add += static_cast<Cost>(w.at(i, j));
                }
            }
            label[i] = b;
            block_size[b]++;
            self(self, i + 1, std::max(used, b + 1), cost + add);
            block_size[b]--;
        }
    };
    recurse(recurse, 0, 0, 0);

    PartitionResult result{
        PartitionAssignment::from_part_of(best_label).canonical(), best, options.max_part_size, std::nullopt};
    return result;
}

}  // namespace qcpart
