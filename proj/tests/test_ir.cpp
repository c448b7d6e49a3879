// Copyright 2026 The revfp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "blocks/blocks.hpp"
#include "ir/circuit.hpp"
#include "ir/cost.hpp"
#include "ir/netlist.hpp"
#include "test_util.hpp"

namespace revfp {
namespace {

using ir::Circuit;
using ir::GateKind;
using ir::Role;

// Applies one gate to a single basis state given as operand bits.
std::vector<int> apply(GateKind k, std::vector<int> bits, bool inverse = false) {
  std::vector<uint64_t> w(bits.begin(), bits.end());
  int ops[4] = {0, 1, 2, 3};
  ir::apply_gate(k, inverse, w.data(), ops);
  return {w.begin(), w.end()};
}

const GateKind kAll[] = {GateKind::NOT,  GateKind::CNOT, GateKind::TOFFOLI, GateKind::FREDKIN,
                         GateKind::PERES, GateKind::TR,   GateKind::RHS1,    GateKind::RHS2,
                         GateKind::RFS1, GateKind::RFS2, GateKind::RFA};

TEST(Gates, SpecExamples) {
  EXPECT_EQ(apply(GateKind::TR, {1, 1, 0}), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(apply(GateKind::PERES, {1, 1, 0}), (std::vector<int>{1, 0, 1}));
}

TEST(Gates, PrimitiveTruthTables) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        EXPECT_EQ(apply(GateKind::TOFFOLI, {a, b, c}), (std::vector<int>{a, b, c ^ (a & b)}));
        EXPECT_EQ(apply(GateKind::PERES, {a, b, c}), (std::vector<int>{a, a ^ b, c ^ (a & b)}));
        EXPECT_EQ(apply(GateKind::TR, {a, b, c}), (std::vector<int>{a, a ^ b, c ^ (a & !b)}));
        std::vector<int> f = a ? std::vector<int>{a, c, b} : std::vector<int>{a, b, c};
        EXPECT_EQ(apply(GateKind::FREDKIN, {a, b, c}), f);
      }
}

TEST(Gates, MacroTruthTables) {
  for (int v = 0; v < 16; ++v) {
    int x0 = v & 1, x1 = (v >> 1) & 1, x2 = (v >> 2) & 1, x3 = (v >> 3) & 1;
    if (v < 8) EXPECT_EQ(apply(GateKind::RHS1, {x0, x1, x2}), (std::vector<int>{x0, x1, x2 ^ (x0 & !x1)}));
    EXPECT_EQ(apply(GateKind::RHS2, {x0, x1, x2, x3}),
              (std::vector<int>{x0 ^ x1 ^ x2, x1, x2, x3 ^ (x1 & !x2)}));
    // (c, b, a, s): a - b - c
    int borrow = (x2 - x1 - x0) < 0;
    EXPECT_EQ(apply(GateKind::RFS1, {x0, x1, x2, x3}),
              (std::vector<int>{x0, x1, x0 ^ x1 ^ x2, x3 ^ borrow}));
    EXPECT_EQ(apply(GateKind::RFS2, {x0, x1, x2, x3}),
              (std::vector<int>{x2, x1, x0 ^ x1 ^ x2, x3 ^ borrow}));
    int carry = x0 + x1 + x2 >= 2;
    EXPECT_EQ(apply(GateKind::RFA, {x0, x1, x2, x3}),
              (std::vector<int>{x0, x0 ^ x1, x0 ^ x1 ^ x2, x3 ^ carry}));
  }
}

TEST(Gates, EveryKindIsABijectionAndInverts) {
  for (GateKind k : kAll) {
    const int n = 1 << ir::arity(k);
    auto f = ir::truth_table(k, false);
    auto g = ir::truth_table(k, true);
    std::set<int> seen;
    for (int i = 0; i < n; ++i) {
      seen.insert(f[i]);
      EXPECT_EQ(g[f[i]], i) << ir::kind_name(k);
    }
    EXPECT_EQ(static_cast<int>(seen.size()), n) << ir::kind_name(k);
    if (ir::self_inverse(k)) EXPECT_EQ(f, g) << ir::kind_name(k);
  }
}

TEST(Gates, NamesRoundTrip) {
  for (GateKind k : kAll) EXPECT_EQ(ir::kind_from_name(ir::kind_name(k)), k);
  EXPECT_FALSE(ir::kind_from_name("SWAP").has_value());
}

TEST(Circuit, RejectsBadConstruction) {
  EXPECT_THROW(Circuit::with_wires({}), ir::CircuitError);
  EXPECT_THROW(Circuit::with_wires({{"a", Role::Variable}, {"a", Role::Const0}}), ir::CircuitError);
  Circuit c = Circuit::with_wires({{"a", Role::Variable}, {"b", Role::Variable}, {"c", Role::Const0}});
  EXPECT_THROW(c.append(GateKind::TOFFOLI, {0, 0, 2}), ir::CircuitError);
  EXPECT_THROW(c.append(GateKind::CNOT, {0, 7}), ir::CircuitError);
  EXPECT_THROW(c.append(GateKind::CNOT, {0, 1, 2}), ir::CircuitError);
  EXPECT_THROW(c.simulate({0, 1}), ir::CircuitError);
}

TEST(Circuit, ConstantCheck) {
  Circuit c = Circuit::with_wires({{"a", Role::Variable}, {"k", Role::Const1}});
  c.append(GateKind::CNOT, {0, 1});
  EXPECT_EQ(c.simulate({1, 1}), (std::vector<uint8_t>{1, 0}));
  EXPECT_THROW(c.simulate({1, 0}), ir::CircuitError);
  EXPECT_NO_THROW(c.simulate({1, 0}, false));
}

TEST(Circuit, InverseComposesToIdentity) {
  std::mt19937_64 rng(3);
  Circuit c;
  for (int i = 0; i < 6; ++i) c.add_wire("w" + std::to_string(i), Role::Variable);
  for (int g = 0; g < 200; ++g) {
    GateKind k = kAll[rng() % 11];
    std::vector<int> w = {0, 1, 2, 3, 4, 5};
    std::shuffle(w.begin(), w.end(), rng);
    ir::Gate gate;
    gate.kind = k;
    gate.inverse = (rng() & 1) && !ir::self_inverse(k);
    for (int i = 0; i < ir::arity(k); ++i) gate.ops[i] = w[i];
    c.append(gate);
  }
  Circuit both = c;
  both.concat(c.inverted());
  std::vector<uint64_t> w(6);
  for (auto& x : w) x = rng();
  auto init = w;
  c.simulate_lanes(w.data());
  EXPECT_NE(w, init);
  c.inverted().simulate_lanes(w.data());
  EXPECT_EQ(w, init);
  both.simulate_lanes(w.data());
  EXPECT_EQ(w, init);
}

TEST(Circuit, FinalizeAssignsGarbage) {
  Circuit c;
  c.set_stage(ir::Stage::Swap);
  int a = c.add_wire("a", Role::Variable);
  int z = c.zero("z");
  c.set_stage(ir::Stage::Addition);
  c.append(GateKind::CNOT, {a, z});
  c.set_output_role(a, ir::OutputRole::Result);
  c.finalize();
  EXPECT_EQ(c.wire(z).output_role, ir::OutputRole::Garbage);
  EXPECT_EQ(c.wire(z).out_stage, ir::Stage::Addition);
  EXPECT_EQ(c.wire(z).stage, ir::Stage::Swap);
}

TEST(Cost, Defaults) {
  auto t = ir::CostTable::defaults();
  EXPECT_EQ(t.cost(GateKind::NOT), 1);
  EXPECT_EQ(t.cost(GateKind::CNOT), 1);
  EXPECT_EQ(t.cost(GateKind::TOFFOLI), 5);
  EXPECT_EQ(t.cost(GateKind::FREDKIN), 5);
  EXPECT_EQ(t.cost(GateKind::PERES), 4);
  EXPECT_EQ(t.cost(GateKind::TR), 4);
  EXPECT_EQ(t.cost(GateKind::RHS1), 4);
  EXPECT_EQ(t.cost(GateKind::RFS1), 6);
}

TEST(Cost, JsonOverridesAndErrors) {
  auto t = ir::CostTable::from_json(R"({"TOFFOLI": 7})");
  EXPECT_EQ(t.cost(GateKind::TOFFOLI), 7);
  EXPECT_EQ(t.cost(GateKind::TR), 4);
  EXPECT_THROW(ir::CostTable::from_json(R"({"SWAP": 3})"), ir::CircuitError);
  EXPECT_THROW(ir::CostTable::from_json(R"({"TR": 0})"), ir::CircuitError);
  EXPECT_THROW(ir::CostTable::from_json("[1]"), ir::CircuitError);
  EXPECT_THROW(ir::CostTable::from_json("{"), ir::CircuitError);
  ir::CostTable m = ir::CostTable::defaults();
  m.erase(GateKind::TR);
  EXPECT_THROW(m.cost(GateKind::TR), ir::CircuitError);
}

TEST(Cost, EnvironmentOverride) {
  auto path = std::filesystem::temp_directory_path() / "revfp_cost_env.json";
  std::ofstream(path) << R"({"FREDKIN": 9})";
  setenv("REVFP_COST_TABLE", path.c_str(), 1);
  EXPECT_EQ(ir::CostTable::from_env().cost(GateKind::FREDKIN), 9);
  unsetenv("REVFP_COST_TABLE");
  EXPECT_EQ(ir::CostTable::from_env().cost(GateKind::FREDKIN), 5);
  std::filesystem::remove(path);
}

TEST(Cost, SummaryTotalsAreStageSums) {
  auto h = blocks::build_normalization();
  auto r = ir::cost_summary(h.circuit, ir::CostTable::defaults());
  ir::StageCost sum;
  for (const auto& [s, sc] : r.per_stage) {
    sum.qc += sc.qc;
    sum.go += sc.go;
    sum.ci += sc.ci;
    sum.gates += sc.gates;
  }
  EXPECT_EQ(sum.qc, r.quantum_cost);
  EXPECT_EQ(sum.go, r.garbage_outputs);
  EXPECT_EQ(sum.ci, r.constant_inputs);
  EXPECT_EQ(sum.gates, r.gate_count);
  EXPECT_EQ(r.gate_count, static_cast<int64_t>(h.circuit.gates().size()));
  r.qubit_count = 10;
  r.t_depth = 7;
  r.update_kq();
  EXPECT_EQ(r.kq, 70);
}

TEST(Cost, QuantumCostIsWeightedGateCount) {
  Circuit c = Circuit::with_wires({{"a", Role::Variable}, {"b", Role::Variable}, {"c", Role::Const0}});
  c.append(GateKind::TR, {0, 1, 2});
  c.append(GateKind::NOT, {0});
  c.append(GateKind::FREDKIN, {0, 1, 2});
  c.finalize();
  auto r = ir::cost_summary(c, ir::CostTable::defaults());
  EXPECT_EQ(r.quantum_cost, 10);
  EXPECT_EQ(r.constant_inputs, 1);
}

TEST(Netlist, RoundTrip) {
  auto h = blocks::build_rlzcu(8);
  std::string text = ir::to_netlist(h.circuit);
  Circuit back = ir::from_netlist(text);
  EXPECT_TRUE(back == h.circuit);
  EXPECT_EQ(ir::to_netlist(back), text);

  auto path = std::filesystem::temp_directory_path() / "revfp_rt.json";
  ir::write_netlist(h.circuit, path.string());
  EXPECT_TRUE(ir::read_netlist(path.string()) == h.circuit);
  std::filesystem::remove(path);
}

TEST(Netlist, RejectsMalformed) {
  EXPECT_THROW(ir::from_netlist("{"), ir::CircuitError);
  EXPECT_THROW(ir::from_netlist(R"({"wires": [], "gates": []})"), ir::CircuitError);
  EXPECT_THROW(ir::from_netlist(
                   R"({"wires": [{"id": 0, "name": "a", "role": "variable-input"}],
                       "gates": [{"kind": "CNOT", "operands": [0, 1], "inverse_flag": false, "stage": "swap"}]})"),
               ir::CircuitError);
  EXPECT_THROW(ir::from_netlist(
                   R"({"wires": [{"id": 0, "name": "a", "role": "variable-input"}],
                       "gates": [{"kind": "SWAP", "operands": [0], "inverse_flag": false, "stage": "swap"}]})"),
               ir::CircuitError);
  EXPECT_THROW(ir::read_netlist("/nonexistent/netlist.json"), ir::CircuitError);
}

}  // namespace
}  // namespace revfp
