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

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcpart/bigraph.h"
#include "qcpart/circuit.h"

namespace qcpart {

using Cost = int64_t;

inline constexpr uint32_t kDefaultDpQubitCap = 24;
/// Hard ceiling even with a raised cap: masks are 32-bit and the memo is dense.
inline constexpr uint32_t kMaxDpQubits = 30;
inline constexpr uint32_t kDefaultOracleQubitCap = 12;

/// Set of qubits as a bitmask; bit i set means qubit i (q_{i+1} in reports) is a member.
/// The mask's integer value doubles as the memo-table index.
class QubitSubset {
   public:
    constexpr QubitSubset() = default;
    constexpr explicit QubitSubset(uint32_t mask) : mask_(mask) {
    }

    static QubitSubset of(std::initializer_list<uint32_t> qubits);
    static constexpr QubitSubset all(uint32_t n) {
        return QubitSubset(n >= 32 ? UINT32_MAX : (uint32_t{1} << n) - 1);
    }

    constexpr uint32_t mask() const {
        return mask_;
    }
    constexpr uint32_t size() const {
        return static_cast<uint32_t>(std::popcount(mask_));
    }
    constexpr bool empty() const {
        return mask_ == 0;
    }
    constexpr bool contains(QubitId q) const {
        return q.index < 32 && (mask_ >> q.index & 1);
    }
    constexpr bool intersects(QubitSubset other) const {
        return (mask_ & other.mask_) != 0;
    }
    /// Lowest-indexed member. Requires a non-empty set.
    constexpr QubitId lowest() const {
        return QubitId{static_cast<uint32_t>(std::countr_zero(mask_))};
    }

    std::vector<QubitId> qubits() const;

    /// 1-based, highest qubit first, e.g. "{4,3,1}".
    std::string render() const;

    auto operator<=>(const QubitSubset &) const = default;

   private:
    uint32_t mask_ = 0;
};

/// Memo table of optimal sub-partition costs, indexed by (subset mask, part count).
///
/// Level k holds T(S, k): the minimum number of cut gates when S is split into k non-empty
/// parts. Entries with fewer than k qubits are unreachable. Levels computed for a single
/// partition request only store the full-set entry of the top level.
class DpTable {
   public:
    DpTable(uint32_t qubit_count, uint32_t max_parts);

    uint32_t qubit_count() const {
        return qubit_count_;
    }
    uint32_t max_parts() const {
        return static_cast<uint32_t>(levels_.size());
    }

    /// Optimal cost, or nullopt when the state is unreachable. Throws std::out_of_range
    /// if the entry was not retained.
    std::optional<Cost> cost(QubitSubset s, uint32_t k) const;

    /// The part split off from `s` at level k (k >= 2) by the optimal choice.
    QubitSubset choice(QubitSubset s, uint32_t k) const;

    /// True when every (mask, k) entry is stored.
    bool complete() const;

    /// One row per non-empty mask: `index,qubits,k=1,...,k=K` with "N.A" for unreachable
    /// entries. Requires a complete table.
    std::string to_csv() const;

   private:
    friend class DpSolver;

    static constexpr int32_t kUnreached = INT32_MAX;

    struct Level {
        // Either 2^n entries or a single entry for the full set.
        std::vector<int32_t> cost;
        std::vector<uint32_t> choice;
    };

    size_t slot(const Level &level, QubitSubset s) const;

    uint32_t qubit_count_;
    std::vector<Level> levels_;
};

/// Assignment of every qubit to exactly one of K non-empty parts.
class PartitionAssignment {
   public:
    /// Validates disjointness, coverage of all `qubit_count` qubits, and non-emptiness.
    /// Part order is preserved: part i renders as p_i.
    static PartitionAssignment from_parts(uint32_t qubit_count, std::vector<QubitSubset> parts);
    /// `part_of[q]` is the part index of qubit q; indices must be 0..K-1, each used.
    static PartitionAssignment from_part_of(std::vector<uint32_t> part_of);

    uint32_t qubit_count() const {
        return static_cast<uint32_t>(part_of_.size());
    }
    uint32_t part_count() const {
        return static_cast<uint32_t>(parts_.size());
    }
    const std::vector<QubitSubset> &parts() const {
        return parts_;
    }
    uint32_t part_of(QubitId q) const {
        return part_of_.at(q.index);
    }

    /// Same partition with parts ordered by their lowest qubit.
    PartitionAssignment canonical() const;

    bool operator==(const PartitionAssignment &) const = default;

   private:
    PartitionAssignment() = default;

    std::vector<QubitSubset> parts_;
    std::vector<uint32_t> part_of_;
};

struct PartitionResult {
    PartitionAssignment assignment;
    Cost cost = 0;
    /// Set when a part-size cap constrained the search.
    std::optional<uint32_t> max_part_size;
    std::optional<DpTable> table;
};

struct DpOptions {
    /// Worker threads for the per-level sweep; 1 runs the reference single-threaded path.
    uint32_t threads = 1;
    uint32_t qubit_cap = kDefaultDpQubitCap;
    /// Keep every level of the memo in the result.
    bool keep_table = false;
};

/// Number of two-qubit gates with one endpoint in each set. Throws std::invalid_argument
/// if the sets overlap.
Cost connect(QubitSubset s1, QubitSubset s2, const WeightMatrix &w);

/// Cut weight of a complete assignment: sum of w[i][j] over pairs in different parts.
Cost assignment_cost(const WeightMatrix &w, const PartitionAssignment &assignment);

/// Exact minimum-cut split of all qubits into exactly K non-empty parts.
///
/// Bottom-up over k = 1..K with T(S, 1) = 0 and
///     T(S, k) = min over S' of connect(S', S \ S') + T(S \ S', k - 1),
/// where S' ranges over non-empty subsets of S that exclude the lowest qubit of S (each
/// unordered split is visited once). Ties resolve to the lowest S' mask.
///
/// Throws InfeasibleError for K outside [1, n] and CapExceededError when n exceeds
/// `options.qubit_cap` or kMaxDpQubits.
PartitionResult dp_partition(const WeightMatrix &w, uint32_t parts, const DpOptions &options = {});

/// dp_partition restricted to parts of at most `max_part_size` qubits.
/// Throws InfeasibleError when parts * max_part_size < n.
PartitionResult dp_partition_capped(
    const WeightMatrix &w, uint32_t parts, uint32_t max_part_size, const DpOptions &options = {});

/// Full memo table over every non-empty mask and every 1 <= k <= K.
DpTable dp_table(const WeightMatrix &w, uint32_t parts, const DpOptions &options = {});

struct OracleOptions {
    uint32_t qubit_cap = kDefaultOracleQubitCap;
    std::optional<uint32_t> max_part_size;
};

/// Brute force over every set partition into exactly K blocks (restricted growth strings),
/// scoring each directly from w. Returns the first minimum found.
PartitionResult oracle_partition(const WeightMatrix &w, uint32_t parts, const OracleOptions &options = {});

}  // namespace qcpart
