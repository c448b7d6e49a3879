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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blocks/blocks.hpp"
#include "ir/cost.hpp"
#include "refmodel/refmodel.hpp"

namespace revfp::pipeline {

using blocks::Reg;
using blocks::RegisterMap;

struct Checkpoint {
  std::string name;
  size_t gate_end = 0;  // forward gates [0, gate_end) have run
  std::vector<std::pair<std::string, Reg>> regs;
};

struct AdderArtifact {
  ir::Circuit forward;
  ir::Circuit wrapped;  // forward, 32 copies, inverse of forward
  Reg a_word, b_word;   // bit i of the operand word
  Reg result;           // forward result word
  Reg copy;             // fresh register of the wrapped circuit
  RegisterMap regs;
  std::vector<Checkpoint> checkpoints;
  ir::CostReport cost;
};

AdderArtifact assemble_fp_adder(const ir::CostTable& table = ir::CostTable::defaults());

// forward, CNOT result[i] -> copy[i], inverse(forward). The copy wires are
// appended as constant-0 inputs.
ir::Circuit bennett_wrap(const ir::Circuit& forward, const Reg& result, Reg* copy = nullptr);

class UnsupportedOperand : public std::runtime_error {
 public:
  UnsupportedOperand(uint32_t word, ref::FloatClass cls);
  ref::FloatClass cls;
};

struct Snapshot {
  std::string stage;
  std::vector<std::pair<std::string, uint64_t>> values;
};

struct RunResult {
  uint32_t sum = 0;
  bool clean = false;  // every non-result wire back at its initial value
  std::vector<Snapshot> snapshots;
};

// Both operands must be normal. trace fills per-stage register snapshots.
RunResult run_fp_add(const AdderArtifact& art, uint32_t a, uint32_t b, bool trace = false);
std::string trace_json(const RunResult& r, uint32_t a, uint32_t b);

struct LaneResult {
  uint32_t sum = 0;
  bool clean = false;
};

// Simulates up to 64 pairs through the wrapped circuit in one pass.
void run_lanes(const AdderArtifact& art, const uint32_t* a, const uint32_t* b, size_t n,
               LaneResult* out);

// --- verification --------------------------------------------------------------

using Pair = std::pair<uint32_t, uint32_t>;

// Seeded pairs of normal operands; most have nearby exponents.
std::vector<Pair> random_pairs(uint64_t seed, size_t n);

struct Mismatch {
  size_t index = 0;
  uint32_t a = 0, b = 0, expected = 0, got = 0;
  bool clean = true;
};

struct VerifyReport {
  size_t total = 0;
  size_t tested = 0;
  std::map<std::string, size_t> excluded;  // oracle status -> count
  size_t mismatches = 0;
  size_t dirty = 0;
  std::optional<Mismatch> first;
  bool pass() const { return mismatches == 0 && dirty == 0 && tested > 0; }
};

// Pairs the oracle rejects are excluded. Workers split the pairs; the report
// does not depend on the thread count.
VerifyReport verify_pairs(const AdderArtifact& art, const std::vector<Pair>& pairs,
                          unsigned threads = 0);
// Vectors carry their own expected word, which is checked against the circuit
// and the oracle.
VerifyReport verify_vectors(const AdderArtifact& art, const std::vector<ref::Vector>& v,
                            unsigned threads = 0);
std::string format_verify(const VerifyReport& r);
std::string verify_json(const VerifyReport& r);

// --- metrics ----------------------------------------------------------------

struct KqReport {
  std::map<ir::Stage, int64_t> stage_depth;  // each stage scheduled on its own
  int64_t stage_sum = 0;
  int64_t whole_gate = 0;   // whole forward circuit, opaque-gate scheduling
  int64_t whole_layer = 0;  // whole forward circuit, per-gate ASAP
  int64_t t_count = 0;
  int64_t qubits = 0;
  int64_t kq = 0;        // qubits * stage_sum
  int64_t kq_whole = 0;  // qubits * whole_gate
};

KqReport kq_report(const AdderArtifact& art);

struct LedgerRow {
  std::string table;
  std::string row;
  std::string metric;
  std::optional<int64_t> paper;
  int64_t computed = 0;
  int64_t delta = 0;
  std::string note;
};

std::vector<LedgerRow> build_ledger(const AdderArtifact& art, const KqReport& kq);
std::string ledger_json(const std::vector<LedgerRow>& rows);
std::string format_tables(const AdderArtifact& art, const KqReport& kq,
                          const std::vector<LedgerRow>& rows);
std::string metrics_json(const AdderArtifact& art, const KqReport& kq);

// Paper values used for comparison.
struct PaperStage {
  ir::Stage stage;
  int64_t qc, go, ci, t_depth;
};
const std::vector<PaperStage>& paper_table3();
inline constexpr int64_t kPaperTotalQc = 4873;
inline constexpr int64_t kPaperTotalGo = 824;
inline constexpr int64_t kPaperTotalCi = 757;
inline constexpr int64_t kPaperTotalTDepth = 881;
inline constexpr int64_t kPaperQubits = 821;
inline constexpr int64_t kPaperKq = 723301;
inline constexpr int64_t kCdkmKq = 12474;

}  // namespace revfp::pipeline
