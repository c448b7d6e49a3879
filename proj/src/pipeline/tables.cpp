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

#include <cstdarg>
#include <cstdio>

#include "cliffordt/cliffordt.hpp"
#include "json.hpp"
#include "pipeline/pipeline.hpp"

namespace revfp::pipeline {

using ir::Stage;

const std::vector<PaperStage>& paper_table3() {
  static const std::vector<PaperStage> t = {
      {Stage::Swap, 220, 0, 9, 174},           {Stage::Alignment, 2295, 388, 359, 194},
      {Stage::Addition, 166, 55, 28, 57},      {Stage::Conversion, 450, 56, 55, 212},
      {Stage::Normalization, 1742, 313, 306, 244}, {Stage::Rounding, 0, 9, 0, 0},
  };
  return t;
}

KqReport kq_report(const AdderArtifact& art) {
  KqReport k;
  for (Stage s : ir::kPipelineStages) {
    int64_t d = ct::t_depth(ct::lower(art.forward, s), ct::DepthMode::Gate);
    k.stage_depth[s] = d;
    k.stage_sum += d;
  }
  ct::PhysicalCircuit all = ct::lower(art.forward);
  k.whole_gate = ct::t_depth(all, ct::DepthMode::Gate);
  k.whole_layer = ct::t_depth(all, ct::DepthMode::Layer);
  k.t_count = ct::t_count(all);
  k.qubits = art.forward.width();
  k.kq = k.qubits * k.stage_sum;
  k.kq_whole = k.qubits * k.whole_gate;
  return k;
}

namespace {

std::string note_for(Stage s, const std::string& metric) {
  if (metric == "QC") {
    switch (s) {
      case Stage::Swap:
        return "RHS2 is charged 5 (RHS1 plus one CNOT); 220 corresponds to charging it 4";
      case Stage::Alignment:
        return "shifter spends gates only on bit positions that can be nonzero (201 Fredkins); "
               "the printed shifter is 352 Fredkins + 320 CNOTs";
      case Stage::Conversion:
        return "converters cost 5n-8 each, see the Table I rows; includes the sign-extension CNOT";
      case Stage::Normalization:
        return "RLZCU from 31 cells, (28,1) and (32,5) shifters, increment and RFS1 subtractor";
      default:
        return "gate-level recount";
    }
  }
  if (metric == "GO") return "garbage charged to the stage that last writes the wire";
  if (metric == "CI") return "constants charged to the stage that allocates them";
  if (s == Stage::Normalization)
    return "the exponent increment runs in parallel with the leading-zero count";
  return "each stage scheduled alone, each logical gate an opaque block of its own T-depth";
}

void add(std::vector<LedgerRow>& rows, std::string table, std::string row, std::string metric,
         std::optional<int64_t> paper, int64_t computed, std::string note) {
  LedgerRow r{std::move(table), std::move(row), std::move(metric), paper, computed, 0, ""};
  r.delta = paper ? computed - *paper : 0;
  if (r.delta != 0 || !paper) r.note = std::move(note);
  rows.push_back(std::move(r));
}

}  // namespace

std::vector<LedgerRow> build_ledger(const AdderArtifact& art, const KqReport& kq) {
  std::vector<LedgerRow> rows;

  // Table I at the width used for the mantissa converters
  {
    const int n = 28;
    auto h = blocks::build_converter(n, blocks::ConvDir::SmTo2c);
    auto c = ir::cost_summary(h.circuit, ir::CostTable::defaults());
    const std::string why =
        "conditional negation built as 5n-8 / n-2 / n-2 for every n; no placement of 1 CNOT and "
        "n-2 TR or Peres gates computes it at n=4 (exhaustive search)";
    add(rows, "I", "converter n=28", "QC", 4 * n - 7, c.quantum_cost, why);
    add(rows, "I", "converter n=28", "GO", 1, c.garbage_outputs, why);
    add(rows, "I", "converter n=28", "CI", n - 1, c.constant_inputs, why);
  }
  {
    auto h = blocks::build_rlzc();
    auto c = ir::cost_summary(h.circuit, ir::CostTable::defaults());
    add(rows, "II", "RLZC", "QC", 20, c.quantum_cost, "");
    add(rows, "II", "RLZC", "GO", 4, c.garbage_outputs, "");
    add(rows, "II", "RLZC", "CI", 4, c.constant_inputs, "");
  }

  for (const auto& p : paper_table3()) {
    std::string name(ir::stage_name(p.stage));
    auto it = art.cost.per_stage.find(p.stage);
    ir::StageCost sc = it == art.cost.per_stage.end() ? ir::StageCost{} : it->second;
    add(rows, "III", name, "QC", p.qc, sc.qc, note_for(p.stage, "QC"));
    add(rows, "III", name, "GO", p.go, sc.go, note_for(p.stage, "GO"));
    add(rows, "III", name, "CI", p.ci, sc.ci, note_for(p.stage, "CI"));
  }
  add(rows, "III", "total", "QC", kPaperTotalQc, art.cost.quantum_cost, "sum of the stage rows");
  add(rows, "III", "total", "GO", kPaperTotalGo, art.cost.garbage_outputs,
      "the printed stage GO values sum to 821, and 824 exceeds the 789 non-result wires of an "
      "821-qubit circuit");
  add(rows, "III", "total", "CI", kPaperTotalCi, art.cost.constant_inputs, "sum of the stage rows");
  add(rows, "III", "qubits", "width", kPaperQubits, art.forward.width(), "64 inputs plus constants; every shifter stage fans its control out to one copy per Fredkin");

  for (const auto& p : paper_table3()) {
    auto it = kq.stage_depth.find(p.stage);
    add(rows, "IV", std::string(ir::stage_name(p.stage)), "T-depth", p.t_depth,
        it == kq.stage_depth.end() ? 0 : it->second, note_for(p.stage, "T-depth"));
  }
  add(rows, "IV", "total", "T-depth", kPaperTotalTDepth, kq.stage_sum, "sum of stage depths");
  add(rows, "IV", "whole circuit", "T-depth", std::nullopt, kq.whole_gate,
      "forward circuit scheduled as one; per-gate ASAP gives " + std::to_string(kq.whole_layer));
  add(rows, "IV", "KQ", "KQ", kPaperKq, kq.kq, "qubits x sum of stage depths");
  add(rows, "IV", "KQ whole circuit", "KQ", std::nullopt, kq.kq_whole, "qubits x whole-circuit depth");
  return rows;
}

std::string ledger_json(const std::vector<LedgerRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["table"] = r.table;
    j["row"] = r.row;
    j["metric"] = r.metric;
    j["paper_value"] = r.paper ? nlohmann::ordered_json(*r.paper) : nullptr;
    j["computed_value"] = r.computed;
    j["delta"] = r.paper ? nlohmann::ordered_json(r.delta) : nullptr;
    j["note"] = r.note;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

namespace {

std::string line(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string line(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return std::string(buf) + "\n";
}

std::string grouped(int64_t v) {
  std::string s = std::to_string(v < 0 ? -v : v);
  for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3) s.insert(static_cast<size_t>(i), ",");
  return v < 0 ? "-" + s : s;
}

}  // namespace

std::string format_tables(const AdderArtifact& art, const KqReport& kq,
                          const std::vector<LedgerRow>& rows) {
  std::string out;
  const auto table = ir::CostTable::defaults();

  out += "Table I: n-bit converter (paper: 4n-7 / 1 / n-1)\n";
  out += line("  %4s %6s %6s %6s %10s", "n", "QC", "GO", "CI", "4n-7");
  bool formula_ok = true;
  for (int n = 3; n <= 29; ++n) {
    auto h = blocks::build_converter(n, blocks::ConvDir::SmTo2c);
    auto c = ir::cost_summary(h.circuit, table);
    formula_ok &= c.quantum_cost == 5 * n - 8 && c.garbage_outputs == n - 2 && c.constant_inputs == n - 2;
    if (n <= 5 || n == 9 || n >= 28)
      out += line("  %4d %6lld %6lld %6lld %10d", n, static_cast<long long>(c.quantum_cost),
                  static_cast<long long>(c.garbage_outputs), static_cast<long long>(c.constant_inputs),
                  4 * n - 7);
  }
  out += std::string("  built: 5n-8 / n-2 / n-2 for n=3..29: ") + (formula_ok ? "yes" : "NO") + "\n\n";

  {
    auto h = blocks::build_rlzc();
    auto c = ir::cost_summary(h.circuit, table);
    out += "Table II: RLZC cell (paper: 20 / 4 / 4)\n";
    out += line("  QC %lld  GO %lld  CI %lld\n", static_cast<long long>(c.quantum_cost),
                static_cast<long long>(c.garbage_outputs), static_cast<long long>(c.constant_inputs));
  }

  out += "Table III: stage costs, paper vs built\n";
  out += line("  %-14s %6s %6s %6s | %6s %6s %6s", "stage", "QC", "GO", "CI", "QC", "GO", "CI");
  for (const auto& p : paper_table3()) {
    auto it = art.cost.per_stage.find(p.stage);
    ir::StageCost sc = it == art.cost.per_stage.end() ? ir::StageCost{} : it->second;
    out += line("  %-14s %6lld %6lld %6lld | %6lld %6lld %6lld", std::string(ir::stage_name(p.stage)).c_str(),
                static_cast<long long>(p.qc), static_cast<long long>(p.go), static_cast<long long>(p.ci),
                static_cast<long long>(sc.qc), static_cast<long long>(sc.go), static_cast<long long>(sc.ci));
  }
  out += line("  %-14s %6lld %6lld %6lld | %6lld %6lld %6lld", "Total", static_cast<long long>(kPaperTotalQc),
              static_cast<long long>(kPaperTotalGo), static_cast<long long>(kPaperTotalCi),
              static_cast<long long>(art.cost.quantum_cost), static_cast<long long>(art.cost.garbage_outputs),
              static_cast<long long>(art.cost.constant_inputs));
  out += line("  qubits: paper %lld, built %d (64 inputs + %lld constants)\n",
              static_cast<long long>(kPaperQubits), art.forward.width(),
              static_cast<long long>(art.cost.constant_inputs));

  out += "Table IV: T-depth per stage, paper vs built\n";
  for (const auto& p : paper_table3())
    out += line("  %-14s %6lld | %6lld", std::string(ir::stage_name(p.stage)).c_str(),
                static_cast<long long>(p.t_depth), static_cast<long long>(kq.stage_depth.at(p.stage)));
  out += line("  %-14s %6lld | %6lld", "Total", static_cast<long long>(kPaperTotalTDepth),
              static_cast<long long>(kq.stage_sum));
  out += line("  whole circuit: %lld (opaque gates), %lld (per-gate ASAP); T-count %lld",
              static_cast<long long>(kq.whole_gate), static_cast<long long>(kq.whole_layer),
              static_cast<long long>(kq.t_count));
  out += line("  KQ: paper %s, built %lld x %lld = %s (whole-circuit %s)", grouped(kPaperKq).c_str(),
              static_cast<long long>(kq.qubits), static_cast<long long>(kq.stage_sum), grouped(kq.kq).c_str(),
              grouped(kq.kq_whole).c_str());
  out += line("  CDKM 32-bit ripple-carry adder KQ (reference): %s\n", grouped(kCdkmKq).c_str());

  out += "Discrepancy ledger\n";
  for (const auto& r : rows) {
    if (r.note.empty()) continue;
    std::string paper = r.paper ? std::to_string(*r.paper) : "-";
    std::string delta = r.paper ? (r.delta > 0 ? "+" : "") + std::to_string(r.delta) : "-";
    out += line("  [%s] %-16s %-7s paper %-7s built %-7lld delta %-6s %s", r.table.c_str(), r.row.c_str(),
                r.metric.c_str(), paper.c_str(), static_cast<long long>(r.computed), delta.c_str(),
                r.note.c_str());
  }
  return out;
}

std::string metrics_json(const AdderArtifact& art, const KqReport& kq) {
  nlohmann::ordered_json j;
  j["qubits"] = art.forward.width();
  j["wrapped_qubits"] = art.wrapped.width();
  j["gates"] = art.cost.gate_count;
  j["quantum_cost"] = art.cost.quantum_cost;
  j["garbage_outputs"] = art.cost.garbage_outputs;
  j["constant_inputs"] = art.cost.constant_inputs;
  nlohmann::ordered_json stages = nlohmann::ordered_json::array();
  for (Stage s : ir::kPipelineStages) {
    auto it = art.cost.per_stage.find(s);
    ir::StageCost sc = it == art.cost.per_stage.end() ? ir::StageCost{} : it->second;
    stages.push_back({{"stage", ir::stage_name(s)}, {"qc", sc.qc}, {"go", sc.go}, {"ci", sc.ci},
                      {"t_depth", kq.stage_depth.at(s)}});
  }
  j["stages"] = stages;
  j["t_count"] = kq.t_count;
  j["t_depth_stage_sum"] = kq.stage_sum;
  j["t_depth_whole"] = kq.whole_gate;
  j["t_depth_whole_layer"] = kq.whole_layer;
  j["kq"] = kq.kq;
  j["kq_whole"] = kq.kq_whole;
  j["kq_cdkm_reference"] = kCdkmKq;
  return j.dump(2) + "\n";
}

}  // namespace revfp::pipeline
