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

#include <stdexcept>

#include "blocks/blocks.hpp"

namespace revfp::blocks {

using ir::GateKind;

NormalizeOut emit_normalization(Circuit& c, const Reg& mag, const Reg& exp,
                                const std::string& prefix) {
  if (mag.size() != 28 || exp.size() != 8) throw std::invalid_argument("normalization widths");
  NormalizeOut out;

  // overflow: one place right, exponent + 1
  out.ov = c.zero(prefix + "ov");
  c.append(GateKind::CNOT, {mag[27], out.ov});
  emit_shifter(c, mag, {out.ov}, Direction::Right, prefix + "rs.");
  int carry = out.ov;
  for (int i = 0; i < 7; ++i) {
    int next = c.zero(prefix + "inc" + std::to_string(i + 1));
    c.append(GateKind::PERES, {carry, exp[i], next});
    carry = next;
  }
  c.append(GateKind::CNOT, {carry, exp[7]});

  // otherwise left by the leading zero count of the 32-bit field
  out.f = alloc(c, prefix + "f", 5);
  out.f.insert(out.f.end(), mag.begin(), mag.begin() + 27);
  out.count = emit_rlzcu(c, out.f, prefix + "lz.");
  std::vector<bool> live(32, true);
  for (int i = 0; i < 5; ++i) live[i] = false;
  emit_shifter(c, out.f, out.count, Direction::Left, prefix + "ls.", live);

  Reg cnt = out.count;
  Reg pad = alloc(c, prefix + "pad", 3);
  cnt.insert(cnt.end(), pad.begin(), pad.end());
  out.exponent = emit_subtractor(c, exp, cnt, false, prefix + "sub.").diff;
  return out;
}

BlockHandle build_normalization() {
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Normalization);
  Reg mag = alloc(c, "m", 28, ir::Role::Variable);
  Reg exp = alloc(c, "e", 8, ir::Role::Variable);
  NormalizeOut n = emit_normalization(c, mag, exp, "norm.");
  h.regs = {{"magnitude", mag}, {"exponent_in", exp}, {"field", n.f},
            {"exponent", n.exponent}, {"count", n.count}, {"ov", {n.ov}}};
  std::vector<bool> keep(c.width(), false);
  for (int x : n.f) keep[x] = true;
  for (int x : n.exponent) keep[x] = true;
  for (int i = 0; i < c.width(); ++i)
    if (!keep[i]) h.garbage.push_back(i);
  seal(h);
  return h;
}

Reg emit_rounding(Circuit& c, const Reg& f) {
  if (f.size() != 32) throw std::invalid_argument("rounding expects a 32-bit field");
  // truncation toward zero: keep f[8..30], drop the rest
  for (int i = 0; i < 8; ++i) c.set_output_role(f[i], ir::OutputRole::Garbage, ir::Stage::Rounding);
  c.set_output_role(f[31], ir::OutputRole::Garbage, ir::Stage::Rounding);
  return Reg(f.begin() + 8, f.begin() + 31);
}

BlockHandle build_rounding() {
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Rounding);
  Reg f = alloc(c, "f", 32, ir::Role::Variable);
  Reg m = emit_rounding(c, f);
  h.regs = {{"field", f}, {"mantissa", m}};
  for (int i = 0; i < 8; ++i) h.garbage.push_back(f[i]);
  h.garbage.push_back(f[31]);
  seal(h);
  return h;
}

}  // namespace revfp::blocks
