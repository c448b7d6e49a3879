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

#include <bit>
#include <filesystem>
#include <set>

#include "cliffordt/cliffordt.hpp"
#include "ir/netlist.hpp"
#include "pipeline/pipeline.hpp"

namespace revfp::pipeline {
namespace {

uint32_t bits(float f) { return std::bit_cast<uint32_t>(f); }

const AdderArtifact& adder() {
  static const AdderArtifact art = assemble_fp_adder();
  return art;
}

// Copy of c with gate i replaced.
ir::Circuit with_gate(const ir::Circuit& c, size_t i, const ir::Gate& g) {
  ir::Circuit out;
  for (const auto& w : c.wires()) out.add_wire(w.name, w.role);
  for (size_t k = 0; k < c.gates().size(); ++k) out.append(k == i ? g : c.gates()[k]);
  return out;
}

TEST(Assemble, StagesAndTotals) {
  const auto& art = adder();
  std::set<ir::Stage> seen;
  for (const auto& g : art.forward.gates()) seen.insert(g.stage);
  for (ir::Stage s : ir::kPipelineStages)
    if (s != ir::Stage::Rounding) EXPECT_TRUE(seen.count(s)) << ir::stage_name(s);
  EXPECT_EQ(art.cost.per_stage.count(ir::Stage::Rounding), 1u);

  int64_t qc = 0, go = 0, ci = 0;
  for (const auto& [s, c] : art.cost.per_stage) {
    qc += c.qc;
    go += c.go;
    ci += c.ci;
  }
  EXPECT_EQ(qc, art.cost.quantum_cost);
  EXPECT_EQ(go, art.cost.garbage_outputs);
  EXPECT_EQ(ci, art.cost.constant_inputs);
  EXPECT_EQ(art.forward.width(), 64 + art.cost.constant_inputs);
  EXPECT_EQ(art.cost.garbage_outputs, art.forward.width() - 32);
  EXPECT_EQ(art.cost.per_stage.at(ir::Stage::Addition).qc, 166);
  EXPECT_EQ(art.cost.per_stage.at(ir::Stage::Rounding).go, 9);
  EXPECT_EQ(art.cost.per_stage.at(ir::Stage::Swap).ci, 9);
  EXPECT_EQ(art.result.size(), 32u);
}

TEST(Assemble, WrappedLayout) {
  const auto& art = adder();
  EXPECT_EQ(art.wrapped.width(), art.forward.width() + 32);
  EXPECT_EQ(art.wrapped.gates().size(), 2 * art.forward.gates().size() + 32);
  EXPECT_THROW(bennett_wrap(art.forward, {1, 2, 3}), ir::CircuitError);
}

TEST(Run, SpecExamples) {
  const auto& art = adder();
  struct Case {
    float a, b, sum;
  } cases[] = {{1.0f, 2.0f, 3.0f},  {1.5f, -0.75f, 0.75f}, {0x1p30f, 1.0f, 0x1p30f},
               {1.0f, 0x1p-24f, 1.0f}, {-2.5f, 2.25f, -0.25f}, {3.0f, 3.0f, 6.0f}};
  for (const auto& c : cases) {
    auto r = run_fp_add(art, bits(c.a), bits(c.b));
    EXPECT_EQ(r.sum, bits(c.sum)) << c.a << " + " << c.b;
    EXPECT_TRUE(r.clean);
    EXPECT_EQ(run_fp_add(art, bits(c.b), bits(c.a)).sum, r.sum);
  }
}

TEST(Run, RejectsUnsupportedOperands) {
  EXPECT_THROW(run_fp_add(adder(), 0, bits(1.0f)), UnsupportedOperand);
  EXPECT_THROW(run_fp_add(adder(), bits(1.0f), 0x7FC00000), UnsupportedOperand);
  EXPECT_THROW(run_fp_add(adder(), 0x00000010, bits(1.0f)), UnsupportedOperand);
}

TEST(Run, TraceMatchesStageMirrors) {
  const auto& art = adder();
  uint32_t a = bits(1.5f), b = bits(-0.75f);
  auto r = run_fp_add(art, a, b, true);
  std::vector<std::string> names;
  for (const auto& s : r.snapshots) names.push_back(s.stage);
  EXPECT_EQ(names, (std::vector<std::string>{"swap", "alignment", "conversion", "addition",
                                             "conversion2", "normalization", "rounding"}));
  auto value = [&](const std::string& stage, const std::string& reg) -> uint64_t {
    for (const auto& s : r.snapshots)
      if (s.stage == stage)
        for (const auto& [n, v] : s.values)
          if (n == reg) return v;
    ADD_FAILURE() << stage << "." << reg;
    return 0;
  };
  auto al = ref::align(ref::decode(a), ref::decode(b));
  EXPECT_EQ(value("alignment", "y_mag"), al.y_mag);
  auto raw = ref::add_aligned(al);
  EXPECT_EQ(value("conversion2", "magnitude"), raw.magnitude);
  EXPECT_EQ(value("rounding", "result"), bits(0.75f));
  std::string j = trace_json(r, a, b);
  EXPECT_NE(j.find("\"stage\": \"normalization\""), std::string::npos);
}

TEST(Run, LanesAgreeWithSingleRuns) {
  const auto& art = adder();
  auto pairs = random_pairs(99, 64);
  uint32_t a[64], b[64];
  for (int i = 0; i < 64; ++i) a[i] = pairs[i].first, b[i] = pairs[i].second;
  LaneResult out[64];
  run_lanes(art, a, b, 64, out);
  for (int i = 0; i < 64; i += 7) EXPECT_EQ(out[i].sum, run_fp_add(art, a[i], b[i]).sum);
  EXPECT_THROW(run_lanes(art, a, b, 65, out), std::invalid_argument);
}

TEST(Verify, RandomSweepPassesDeterministically) {
  const auto& art = adder();
  auto pairs = random_pairs(7, 20000);
  EXPECT_EQ(pairs, random_pairs(7, 20000));
  auto r1 = verify_pairs(art, pairs, 1);
  auto r4 = verify_pairs(art, pairs, 4);
  EXPECT_TRUE(r1.pass()) << format_verify(r1);
  EXPECT_EQ(verify_json(r1), verify_json(r4));
  EXPECT_EQ(format_verify(r1), format_verify(r4));
  EXPECT_GT(r1.tested, 19000u);
}

TEST(Verify, Vectors) {
  auto v = ref::parse_vectors("3F800000 40000000 40400000\n");
  EXPECT_TRUE(verify_vectors(adder(), v).pass());
  v[0].expected = 0x40400001;
  auto r = verify_vectors(adder(), v);
  EXPECT_FALSE(r.pass());
  ASSERT_TRUE(r.first.has_value());
  EXPECT_EQ(r.first->index, 0u);
}

TEST(Verify, SingleGateMutationIsCaught) {
  AdderArtifact art = adder();
  // retarget the addition stage's first RFA carry onto the wrong wire
  size_t idx = 0;
  for (; idx < art.forward.gates().size(); ++idx)
    if (art.forward.gates()[idx].kind == ir::GateKind::RFA) break;
  ASSERT_LT(idx, art.forward.gates().size());
  ir::Gate g = art.forward.gates()[idx];
  g.kind = ir::GateKind::RFS1;
  art.forward = with_gate(art.forward, idx, g);
  art.wrapped = bennett_wrap(art.forward, art.result, &art.copy);
  auto r = verify_pairs(art, random_pairs(1, 4000));
  EXPECT_FALSE(r.pass());
  ASSERT_TRUE(r.first.has_value());
  EXPECT_NE(r.first->expected, r.first->got);
  EXPECT_NE(format_verify(r).find("first counterexample"), std::string::npos);
}

TEST(Verify, DirtyAncillaIsCaught) {
  AdderArtifact art = adder();
  // break only the uncompute half
  size_t idx = art.wrapped.gates().size() - 5;
  ir::Gate g{};
  g.kind = ir::GateKind::NOT;
  g.ops[0] = art.wrapped.gates()[idx].ops[0];
  g.stage = ir::Stage::Copy;
  ir::Circuit w;
  for (const auto& wire : art.wrapped.wires()) w.add_wire(wire.name, wire.role);
  for (size_t k = 0; k < art.wrapped.gates().size(); ++k) {
    w.append(art.wrapped.gates()[k]);
    if (k == idx) w.append(g);
  }
  art.wrapped = w;
  auto r = verify_pairs(art, random_pairs(2, 500));
  EXPECT_GT(r.dirty, 0u);
  EXPECT_FALSE(r.pass());
}

TEST(Netlist, ForwardRoundTrip) {
  const auto& art = adder();
  auto path = std::filesystem::temp_directory_path() / "revfp_adder.json";
  ir::write_netlist(art.forward, path.string());
  ir::Circuit back = ir::read_netlist(path.string());
  EXPECT_TRUE(back == art.forward);
  EXPECT_EQ(static_cast<int64_t>(back.gates().size()), art.cost.gate_count);
  std::filesystem::remove(path);
}

TEST(Tables, KqAndLedger) {
  const auto& art = adder();
  auto kq = kq_report(art);
  int64_t sum = 0;
  for (const auto& [s, d] : kq.stage_depth) sum += d;
  EXPECT_EQ(sum, kq.stage_sum);
  EXPECT_EQ(kq.qubits, art.forward.width());
  EXPECT_EQ(kq.kq, kq.qubits * kq.stage_sum);
  EXPECT_EQ(kq.kq_whole, kq.qubits * kq.whole_gate);
  EXPECT_LE(kq.whole_layer, kq.whole_gate);
  EXPECT_LE(kq.whole_gate, kq.stage_sum);
  EXPECT_EQ(kq.t_count, ct::t_count(ct::lower(art.forward)));
  // stage depths that follow from the block decompositions alone
  EXPECT_EQ(kq.stage_depth.at(ir::Stage::Addition), 2 * 27 + 3);
  EXPECT_EQ(kq.stage_depth.at(ir::Stage::Rounding), 0);

  auto rows = build_ledger(art, kq);
  for (const auto& r : rows) {
    if (r.paper) EXPECT_EQ(r.delta, r.computed - *r.paper);
    if (!r.paper || r.delta != 0) EXPECT_FALSE(r.note.empty()) << r.table << " " << r.row;
  }
  std::string text = format_tables(art, kq, rows);
  EXPECT_NE(text.find("Table I"), std::string::npos);
  EXPECT_NE(text.find("4n-7 / 1 / n-1"), std::string::npos);
  EXPECT_NE(text.find("723,301"), std::string::npos);
  EXPECT_NE(text.find("12,474"), std::string::npos);
  EXPECT_NE(ledger_json(rows).find("\"paper_value\""), std::string::npos);
  EXPECT_NE(metrics_json(art, kq).find("\"kq\""), std::string::npos);
}

TEST(Tables, PaperConstants) {
  int64_t qc = 0, ci = 0, td = 0;
  for (const auto& p : paper_table3()) {
    qc += p.qc;
    ci += p.ci;
    td += p.t_depth;
  }
  EXPECT_EQ(qc, kPaperTotalQc);
  EXPECT_EQ(ci, kPaperTotalCi);
  EXPECT_EQ(td, kPaperTotalTDepth);
  EXPECT_EQ(kPaperQubits * kPaperTotalTDepth, kPaperKq);
}

}  // namespace
}  // namespace revfp::pipeline
