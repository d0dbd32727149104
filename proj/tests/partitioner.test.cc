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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qcpart/errors.h"
#include "test_support.h"

using namespace qcpart;

namespace {

WeightMatrix weights_of(const Circuit &c) {
    return weight_matrix(qc_to_bigraph(c));
}

WeightMatrix four_qubit() {
    return weights_of(testdata::load_data("four_qubit.qc"));
}

Cost choose2(int64_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

std::vector<QubitSubset> parts_of(const PartitionResult &r) {
    return r.assignment.parts();
}

}  // namespace

TEST(subset, basics) {
    QubitSubset s = QubitSubset::of({0, 2, 3});
    ASSERT_EQ(s.mask(), 13u);
    ASSERT_EQ(s.size(), 3u);
    ASSERT_EQ(s.render(), "{4,3,1}");
    ASSERT_EQ(s.lowest(), QubitId{0});
    ASSERT_TRUE(s.contains(QubitId{2}));
    ASSERT_FALSE(s.contains(QubitId{1}));
    ASSERT_EQ(QubitSubset::all(4).mask(), 15u);
    ASSERT_EQ(QubitSubset().render(), "{}");
}

TEST(assignment, validation) {
    ASSERT_THROW(PartitionAssignment::from_parts(3, {QubitSubset::of({0}), QubitSubset::of({0, 1, 2})}),
                 std::invalid_argument);
    ASSERT_THROW(PartitionAssignment::from_parts(3, {QubitSubset::of({0}), QubitSubset::of({1})}),
                 std::invalid_argument);
    ASSERT_THROW(PartitionAssignment::from_parts(2, {QubitSubset::of({0, 1}), QubitSubset()}), std::invalid_argument);
    ASSERT_THROW(PartitionAssignment::from_part_of({0, 2}), std::invalid_argument);
    auto a = PartitionAssignment::from_part_of({1, 0, 1});
    ASSERT_EQ(a.part_count(), 2u);
    ASSERT_EQ(a.part_of(QubitId{1}), 0u);
    ASSERT_EQ(a.canonical().parts(), (std::vector<QubitSubset>{QubitSubset::of({0, 2}), QubitSubset::of({1})}));
}

TEST(connect, worked_example_values) {
    WeightMatrix w = four_qubit();
    ASSERT_EQ(connect(QubitSubset::of({0}), QubitSubset::of({1, 2, 3}), w), 2);
    ASSERT_EQ(connect(QubitSubset::of({1}), QubitSubset::of({0, 2, 3}), w), 3);
    ASSERT_EQ(connect(QubitSubset::of({2}), QubitSubset::of({0, 1, 3}), w), 6);
    ASSERT_EQ(connect(QubitSubset::of({3}), QubitSubset::of({0, 1, 2}), w), 3);
    ASSERT_EQ(connect(QubitSubset::of({0, 1}), QubitSubset::of({2, 3}), w), 3);
    ASSERT_EQ(connect(QubitSubset::of({0, 2}), QubitSubset::of({1, 3}), w), 6);
    ASSERT_EQ(connect(QubitSubset::of({0, 3}), QubitSubset::of({1, 2}), w), 5);
    ASSERT_EQ(connect(QubitSubset(), QubitSubset::of({0, 1, 2, 3}), w), 0);
    ASSERT_THROW(connect(QubitSubset::of({0, 1}), QubitSubset::of({1}), w), std::invalid_argument);
}

TEST(connect, agrees_with_bigraph_route) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; trial++) {
        uint32_t width = 2 + static_cast<uint32_t>(rng() % 9);
        Circuit c = testdata::random_circuit(rng, width, static_cast<uint32_t>(rng() % 40));
        BipartiteGraph g = qc_to_bigraph(c);
        WeightMatrix w = weight_matrix(g);
        uint32_t all = QubitSubset::all(width).mask();
        uint32_t s1 = static_cast<uint32_t>(rng()) & all;
        uint32_t s2 = static_cast<uint32_t>(rng()) & all & ~s1;
        ASSERT_EQ(connect(QubitSubset(s1), QubitSubset(s2), w), static_cast<Cost>(bigraph_connect(g, s1, s2)));
    }
}

TEST(dp_partition, worked_example_k3) {
    PartitionResult r = dp_partition(four_qubit(), 3);
    ASSERT_EQ(r.cost, 4);
    ASSERT_EQ(parts_of(r), (std::vector<QubitSubset>{QubitSubset::of({0}), QubitSubset::of({1}),
                                                      QubitSubset::of({2, 3})}));
    ASSERT_FALSE(r.max_part_size.has_value());
}

TEST(dp_partition, worked_example_other_k) {
    WeightMatrix w = four_qubit();
    PartitionResult k1 = dp_partition(w, 1);
    ASSERT_EQ(k1.cost, 0);
    ASSERT_EQ(parts_of(k1), (std::vector<QubitSubset>{QubitSubset::all(4)}));

    PartitionResult k2 = dp_partition(w, 2);
    ASSERT_EQ(k2.cost, 2);
    ASSERT_EQ(parts_of(k2), (std::vector<QubitSubset>{QubitSubset::of({0}), QubitSubset::of({1, 2, 3})}));

    PartitionResult k4 = dp_partition(w, 4);
    ASSERT_EQ(k4.cost, 7);
    ASSERT_EQ(k4.assignment.part_count(), 4u);
}

TEST(dp_partition, three_qubit_circuit) {
    Circuit c = testdata::load_data("three_qubit.qc");
    WeightMatrix w = weights_of(c);
    // The illustrated split {q1}|{q2,q3} cuts both q1-q3 gates.
    auto illustrated = PartitionAssignment::from_parts(3, {QubitSubset::of({0}), QubitSubset::of({1, 2})});
    ASSERT_EQ(assignment_cost(w, illustrated), 2);
    // Isolating q2 cuts only the q2-q3 gate, so the optimum is 1.
    PartitionResult r = dp_partition(w, 2);
    ASSERT_EQ(r.cost, 1);
    ASSERT_EQ(parts_of(r), (std::vector<QubitSubset>{QubitSubset::of({0, 2}), QubitSubset::of({1})}));
    ASSERT_EQ(oracle_partition(w, 2).cost, 1);
}

TEST(dp_partition, argument_errors) {
    WeightMatrix w = four_qubit();
    ASSERT_THROW(dp_partition(w, 0), InfeasibleError);
    ASSERT_THROW(dp_partition(w, 5), InfeasibleError);
    DpOptions small;
    small.qubit_cap = 3;
    ASSERT_THROW(dp_partition(w, 2, small), CapExceededError);
    ASSERT_THROW(dp_partition(WeightMatrix(25), 2), CapExceededError);
    DpOptions forced;
    forced.qubit_cap = 40;
    ASSERT_THROW(dp_partition(WeightMatrix(31), 2, forced), CapExceededError);
}

TEST(dp_table, worked_example_rows) {
    DpTable t = dp_table(four_qubit(), 4);
    ASSERT_TRUE(t.complete());
    std::vector<std::optional<Cost>> row1, row2, row3, row4;
    for (uint32_t m = 1; m < 16; m++) {
        row1.push_back(t.cost(QubitSubset(m), 1));
        row2.push_back(t.cost(QubitSubset(m), 2));
        row3.push_back(t.cost(QubitSubset(m), 3));
        row4.push_back(t.cost(QubitSubset(m), 4));
    }
    const auto NA = std::nullopt;
    using Row = std::vector<std::optional<Cost>>;
    ASSERT_EQ(row1, Row(15, Cost{0}));
    ASSERT_EQ(row2, (Row{NA, NA, 1, NA, 1, 2, 2, NA, 0, 0, 0, 3, 1, 2, 2}));
    // Brute-force enumeration over all 3-block partitions of each mask.
    ASSERT_EQ(row3, (Row{NA, NA, NA, NA, NA, NA, 4, NA, NA, NA, 1, NA, 4, 5, 4}));
    ASSERT_EQ(row4, (Row{NA, NA, NA, NA, NA, NA, NA, NA, NA, NA, NA, NA, NA, NA, 7}));
}

TEST(dp_table, csv_layout) {
    std::string csv = dp_table(four_qubit(), 3).to_csv();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    ASSERT_EQ(line, "index,qubits,k=1,k=2,k=3");
    std::getline(in, line);
    ASSERT_EQ(line, "1,\"{1}\",0,N.A,N.A");
    std::getline(in, line);
    std::getline(in, line);
    ASSERT_EQ(line, "3,\"{2,1}\",0,1,N.A");
    std::string last;
    while (std::getline(in, line)) {
        last = line;
    }
    ASSERT_EQ(last, "15,\"{4,3,2,1}\",0,2,4");
}

TEST(dp_table, partial_table_refuses_csv) {
    PartitionResult r = dp_partition(four_qubit(), 3);
    ASSERT_FALSE(r.table.has_value());
    DpOptions keep;
    keep.keep_table = true;
    PartitionResult kept = dp_partition(four_qubit(), 3, keep);
    ASSERT_TRUE(kept.table.has_value());
    ASSERT_TRUE(kept.table->complete());
}

TEST(dp_table, invariants_on_random_circuits) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; trial++) {
        uint32_t n = 2 + static_cast<uint32_t>(rng() % 7);
        WeightMatrix w = weights_of(testdata::random_circuit(rng, n, static_cast<uint32_t>(rng() % 40)));
        DpTable t = dp_table(w, n);
        for (uint32_t m = 1; m <= QubitSubset::all(n).mask(); m++) {
            QubitSubset s(m);
            ASSERT_EQ(t.cost(s, 1), Cost{0});
            for (uint32_t k = 2; k <= n; k++) {
                auto c = t.cost(s, k);
                if (s.size() < k) {
                    ASSERT_FALSE(c.has_value());
                    continue;
                }
                ASSERT_TRUE(c.has_value());
                QubitSubset choice = t.choice(s, k);
                ASSERT_FALSE(choice.empty());
                ASSERT_EQ(choice.mask() & ~s.mask(), 0u);
                ASSERT_NE(choice, s);
                if (s.size() == k) {
                    // Forced singletons: every internal pair is cut.
                    Cost internal = 0;
                    for (QubitId i : s.qubits()) {
                        for (QubitId j : s.qubits()) {
                            if (i < j) {
                                internal += static_cast<Cost>(w.at(i.index, j.index));
                            }
                        }
                    }
                    ASSERT_EQ(*c, internal);
                }
            }
        }
    }
}

TEST(dp_partition, matches_oracle_on_random_corpus) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; trial++) {
        uint32_t n = 2 + static_cast<uint32_t>(rng() % 9);
        WeightMatrix w = weights_of(testdata::random_circuit(rng, n, static_cast<uint32_t>(rng() % 41)));
        Cost previous = 0;
        for (uint32_t k = 1; k <= n; k++) {
            PartitionResult dp = dp_partition(w, k);
            PartitionResult oracle = oracle_partition(w, k);
            ASSERT_EQ(dp.cost, oracle.cost) << "n=" << n << " k=" << k;
            ASSERT_EQ(assignment_cost(w, dp.assignment), dp.cost);
            ASSERT_EQ(assignment_cost(w, oracle.assignment), oracle.cost);
            ASSERT_EQ(dp.assignment.part_count(), k);
            ASSERT_GE(dp.cost, previous);
            previous = dp.cost;
        }
    }
}

TEST(dp_partition, complete_graph_closed_form) {
    for (uint32_t n = 2; n <= 8; n++) {
        WeightMatrix w = weights_of(gen_qft(n));
        for (uint32_t k = 1; k <= n; k++) {
            Cost expected = choose2(n) - choose2(n - k + 1);
            ASSERT_EQ(dp_partition(w, k).cost, expected);
            ASSERT_EQ(oracle_partition(w, k).cost, expected);
        }
    }
}

TEST(dp_partition, relabeling_qubits_keeps_cost) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; trial++) {
        uint32_t n = 2 + static_cast<uint32_t>(rng() % 8);
        Circuit c = testdata::random_circuit(rng, n, static_cast<uint32_t>(rng() % 40));
        std::vector<uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        Circuit relabeled(n);
        for (const Gate &g : c.gates()) {
            if (g.is_two_qubit()) {
                relabeled.append(g.label, QubitId{perm[g.control->index]}, QubitId{perm[g.target.index]});
            } else {
                relabeled.append(g.label, QubitId{perm[g.target.index]});
            }
        }
        WeightMatrix w = weights_of(c);
        WeightMatrix wp = weights_of(relabeled);
        for (uint32_t k = 1; k <= n; k++) {
            PartitionResult r = dp_partition(w, k);
            ASSERT_EQ(dp_partition(wp, k).cost, r.cost);
            std::vector<uint32_t> moved(n);
            for (uint32_t q = 0; q < n; q++) {
                moved[perm[q]] = r.assignment.part_of(QubitId{q});
            }
            ASSERT_EQ(assignment_cost(wp, PartitionAssignment::from_part_of(moved)), r.cost);
        }
    }
}

TEST(dp_partition, gate_order_does_not_matter) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; trial++) {
        uint32_t n = 2 + static_cast<uint32_t>(rng() % 8);
        Circuit c = testdata::random_circuit(rng, n, static_cast<uint32_t>(rng() % 40));
        std::vector<Gate> gates = c.gates();
        std::shuffle(gates.begin(), gates.end(), rng);
        Circuit shuffled(n);
        for (const Gate &g : gates) {
            if (g.is_two_qubit()) {
                shuffled.append(g.label, *g.control, g.target);
            } else {
                shuffled.append(g.label, g.target);
            }
        }
        for (uint32_t k = 1; k <= n; k++) {
            ASSERT_EQ(dp_partition(weights_of(c), k).cost, dp_partition(weights_of(shuffled), k).cost);
        }
    }
}

TEST(dp_partition, threaded_sweep_matches_reference) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 4; trial++) {
        uint32_t n = 12 + static_cast<uint32_t>(rng() % 3);
        WeightMatrix w = weights_of(testdata::random_circuit(rng, n, 60));
        DpOptions threaded;
        threaded.threads = 4;
        DpTable ref = dp_table(w, 4);
        DpTable par = dp_table(w, 4, threaded);
        for (uint32_t m = 1; m <= QubitSubset::all(n).mask(); m++) {
            for (uint32_t k = 1; k <= 4; k++) {
                ASSERT_EQ(ref.cost(QubitSubset(m), k), par.cost(QubitSubset(m), k));
                if (k >= 2) {
                    ASSERT_EQ(ref.choice(QubitSubset(m), k), par.choice(QubitSubset(m), k));
                }
            }
        }
        PartitionResult a = dp_partition(w, 4);
        PartitionResult b = dp_partition(w, 4, threaded);
        ASSERT_EQ(a.cost, b.cost);
        ASSERT_EQ(a.assignment, b.assignment);
    }
}

TEST(dp_partition_capped, worked_example) {
    PartitionResult r = dp_partition_capped(four_qubit(), 2, 2);
    ASSERT_EQ(r.cost, 3);
    ASSERT_EQ(parts_of(r), (std::vector<QubitSubset>{QubitSubset::of({0, 1}), QubitSubset::of({2, 3})}));
    ASSERT_EQ(r.max_part_size, 2u);
}

TEST(dp_partition_capped, edge_cases) {
    WeightMatrix w = four_qubit();
    ASSERT_THROW(dp_partition_capped(w, 2, 1), InfeasibleError);
    ASSERT_THROW(dp_partition_capped(w, 2, 0), InfeasibleError);
    PartitionResult singles = dp_partition_capped(w, 4, 1);
    ASSERT_EQ(singles.cost, static_cast<Cost>(w.total()));
    for (uint32_t k = 1; k <= 4; k++) {
        PartitionResult a = dp_partition_capped(w, k, 4);
        PartitionResult b = dp_partition(w, k);
        ASSERT_EQ(a.cost, b.cost);
        ASSERT_EQ(a.assignment, b.assignment);
    }
}

TEST(dp_partition_capped, matches_capped_oracle) {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 40; trial++) {
        uint32_t n = 2 + static_cast<uint32_t>(rng() % 8);
        WeightMatrix w = weights_of(testdata::random_circuit(rng, n, static_cast<uint32_t>(rng() % 40)));
        for (uint32_t k = 1; k <= n; k++) {
            for (uint32_t cap = (n + k - 1) / k; cap <= n; cap++) {
                PartitionResult dp = dp_partition_capped(w, k, cap);
                OracleOptions o;
                o.max_part_size = cap;
                ASSERT_EQ(dp.cost, oracle_partition(w, k, o).cost) << "n=" << n << " k=" << k << " cap=" << cap;
                for (QubitSubset p : dp.assignment.parts()) {
                    ASSERT_LE(p.size(), cap);
                }
                ASSERT_EQ(assignment_cost(w, dp.assignment), dp.cost);
            }
        }
    }
}

TEST(oracle_partition, values_and_errors) {
    WeightMatrix w = four_qubit();
    ASSERT_EQ(oracle_partition(w, 3).cost, 4);
    ASSERT_EQ(oracle_partition(w, 4).cost, 7);
    ASSERT_EQ(oracle_partition(w, 1).cost, 0);
    ASSERT_THROW(oracle_partition(w, 0), InfeasibleError);
    ASSERT_THROW(oracle_partition(w, 5), InfeasibleError);
    ASSERT_THROW(oracle_partition(WeightMatrix(13), 2), CapExceededError);
    OracleOptions raised;
    raised.qubit_cap = 13;
    ASSERT_EQ(oracle_partition(WeightMatrix(13), 13, raised).cost, 0);
}
