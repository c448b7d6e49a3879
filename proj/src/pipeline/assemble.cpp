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

#include <algorithm>

#include "json.hpp"
#include "pipeline/pipeline.hpp"

namespace revfp::pipeline {

using namespace revfp::blocks;
using ir::OutputRole;
using ir::Stage;

namespace {

Reg word_of(const Operand& o) {
  Reg w = o.man;
  w.insert(w.end(), o.exp.begin(), o.exp.end());
  w.push_back(o.sign);
  return w;
}

Reg cat(std::initializer_list<Reg> parts) {
  Reg r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

Reg slice(const Reg& r, size_t b, size_t e) { return Reg(r.begin() + b, r.begin() + e); }

}  // namespace

AdderArtifact assemble_fp_adder(const ir::CostTable& table) {
  AdderArtifact art;
  Circuit& c = art.forward;
  auto mark = [&](std::string name, std::vector<std::pair<std::string, Reg>> regs) {
    art.checkpoints.push_back({std::move(name), c.gates().size(), std::move(regs)});
  };

  Operand a = declare_operand(c, "a");
  Operand b = declare_operand(c, "b");
  art.a_word = word_of(a);
  art.b_word = word_of(b);

  c.set_stage(Stage::Swap);
  SwapOut sw = emit_conditional_swap(c, a, b);
  const Operand& x = sw.x;
  const Operand& y = sw.y;
  mark("swap", {{"x", word_of(x)}, {"y", word_of(y)}, {"d", sw.d}, {"b7", {sw.b7}}});

  // |d| on the d wires, then min(|d|, 26)
  c.set_stage(Stage::Conversion);
  emit_converter(c, sw.b7, sw.d, "cd.");
  c.set_stage(Stage::Alignment);
  emit_shift_limiter(c, sw.d, "lim.");
  Reg shift = slice(sw.d, 0, 6);

  // Y significand at the top of a 64-bit register; 40 zero bits below take
  // everything a shift of at most 26 can move.
  Reg r = alloc(c, "al.r", 40);
  r.insert(r.end(), y.man.begin(), y.man.end());
  r.push_back(c.one("al.r63"));
  std::vector<bool> live(64, false);
  for (int i = 40; i < 64; ++i) live[i] = true;
  emit_shifter(c, r, shift, Direction::Right, "al.sh.", live);
  int sticky = emit_sticky(c, slice(r, 14, 38), "al.or");
  Reg y_mag = cat({{sticky}, slice(r, 38, 64)});
  mark("alignment", {{"shift", sw.d}, {"y_mag", y_mag}, {"sticky", {sticky}}});

  c.set_stage(Stage::Conversion);
  Reg x_mag = cat({alloc(c, "cv.xg", 3), x.man, {c.one("cv.x1")}});
  emit_converter(c, x.sign, x_mag, "cx.");
  emit_converter(c, y.sign, y_mag, "cy.");
  Reg xa = cat({x_mag, {x.sign}});
  Reg yb = cat({y_mag, {y.sign}});
  mark("conversion", {{"x_2c", xa}, {"y_2c", yb}});

  c.set_stage(Stage::Addition);
  AdderOut sum = emit_ripple_adder(c, xa, yb, "add.");
  mark("addition", {{"sum", sum.sum}});

  c.set_stage(Stage::Conversion);
  emit_converter(c, x.sign, x_mag, "cx2.");
  Reg mag = slice(sum.sum, 0, 28);
  int sign = sum.sum[28];
  emit_converter(c, sign, mag, "cs.");
  mark("conversion2", {{"sign", {sign}}, {"magnitude", mag}, {"x_mag", x_mag}});

  c.set_stage(Stage::Normalization);
  NormalizeOut n = emit_normalization(c, mag, x.exp, "norm.");
  mark("normalization",
       {{"ov", {n.ov}}, {"count", n.count}, {"field", n.f}, {"exponent", n.exponent}});

  c.set_stage(Stage::Rounding);
  Reg man = emit_rounding(c, n.f);
  art.result = cat({man, n.exponent, {sign}});
  mark("rounding", {{"result", art.result}});

  for (int w : art.result) c.set_output_role(w, OutputRole::Result);
  c.finalize();

  art.regs = {{"A", art.a_word}, {"B", art.b_word}, {"X", word_of(x)}, {"Y", word_of(y)},
              {"d", sw.d},        {"b7", {sw.b7}},   {"y_mag", y_mag},   {"x_mag", x_mag},
              {"sum", sum.sum},   {"M", mag},        {"count", n.count}, {"F", n.f},
              {"result", art.result}};
  art.cost = ir::cost_summary(c, table);
  art.wrapped = bennett_wrap(c, art.result, &art.copy);
  art.regs["copy"] = art.copy;
  return art;
}

ir::Circuit bennett_wrap(const ir::Circuit& forward, const Reg& result, Reg* copy) {
  if (result.size() != 32) throw ir::CircuitError("bennett_wrap: result register must be 32 bits");
  ir::Circuit w = forward;
  w.set_stage(Stage::Copy);
  Reg out = alloc(w, "out", 32);
  for (size_t i = 0; i < 32; ++i) w.append(ir::GateKind::CNOT, {result[i], out[i]});
  ir::Circuit inv = forward.inverted();
  for (const auto& g : inv.gates()) w.append(g);
  for (int i = 0; i < forward.width(); ++i)
    w.set_output_role(i, OutputRole::RestoredInput, Stage::Copy);
  for (int o : out) w.set_output_role(o, OutputRole::Result, Stage::Copy);
  if (copy) *copy = out;
  return w;
}

UnsupportedOperand::UnsupportedOperand(uint32_t word, ref::FloatClass c)
    : std::runtime_error("unsupported operand " + ref::to_hex(word) + " (" +
                         std::string(ref::class_name(c)) + ")"),
      cls(c) {}

namespace {

std::vector<uint64_t> initial_state(const ir::Circuit& c) {
  std::vector<uint64_t> w(c.width(), 0);
  for (const auto& wire : c.wires())
    if (wire.role == ir::Role::Const1) w[wire.id] = ~0ULL;
  return w;
}

}  // namespace

void run_lanes(const AdderArtifact& art, const uint32_t* a, const uint32_t* b, size_t n,
               LaneResult* out) {
  if (n == 0) return;
  if (n > 64) throw std::invalid_argument("run_lanes: at most 64 pairs");
  const ir::Circuit& c = art.wrapped;
  std::vector<uint64_t> w = initial_state(c);
  for (size_t l = 0; l < n; ++l) {
    write_reg(w.data(), art.a_word, a[l], static_cast<int>(l));
    write_reg(w.data(), art.b_word, b[l], static_cast<int>(l));
  }
  const std::vector<uint64_t> init = w;
  const uint64_t mask = n == 64 ? ~0ULL : (1ULL << n) - 1;
  c.simulate_lanes(w.data(), true, mask);

  std::vector<bool> is_copy(c.width(), false);
  for (int o : art.copy) is_copy[o] = true;
  uint64_t dirty = 0;
  for (int i = 0; i < c.width(); ++i)
    if (!is_copy[i]) dirty |= w[i] ^ init[i];
  for (size_t l = 0; l < n; ++l) {
    out[l].sum = static_cast<uint32_t>(read_reg(w.data(), art.copy, static_cast<int>(l)));
    out[l].clean = !((dirty >> l) & 1);
  }
}

RunResult run_fp_add(const AdderArtifact& art, uint32_t a, uint32_t b, bool trace) {
  for (uint32_t v : {a, b})
    if (auto cls = ref::classify(v); cls != ref::FloatClass::Normal) throw UnsupportedOperand(v, cls);
  RunResult r;
  LaneResult lr;
  run_lanes(art, &a, &b, 1, &lr);
  r.sum = lr.sum;
  r.clean = lr.clean;
  if (trace) {
    const ir::Circuit& c = art.forward;
    std::vector<uint64_t> w = initial_state(c);
    write_reg(w.data(), art.a_word, a);
    write_reg(w.data(), art.b_word, b);
    size_t done = 0;
    for (const auto& cp : art.checkpoints) {
      c.run_gates(w.data(), done, cp.gate_end);
      done = cp.gate_end;
      Snapshot s;
      s.stage = cp.name;
      for (const auto& [name, reg] : cp.regs) s.values.emplace_back(name, read_reg(w.data(), reg) );
      r.snapshots.push_back(std::move(s));
    }
  }
  return r;
}

std::string trace_json(const RunResult& r, uint32_t a, uint32_t b) {
  nlohmann::ordered_json j;
  j["a"] = ref::to_hex(a);
  j["b"] = ref::to_hex(b);
  j["sum"] = ref::to_hex(r.sum);
  j["clean"] = r.clean;
  nlohmann::ordered_json stages = nlohmann::ordered_json::array();
  for (const auto& s : r.snapshots) {
    nlohmann::ordered_json st;
    st["stage"] = s.stage;
    nlohmann::ordered_json regs;
    for (const auto& [name, v] : s.values) regs[name] = v;
    st["registers"] = regs;
    stages.push_back(st);
  }
  j["stages"] = stages;
  return j.dump(2) + "\n";
}

}  // namespace revfp::pipeline
