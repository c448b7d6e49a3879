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

void emit_fredkin_bank(Circuit& c, int ctrl, const Reg& a, const Reg& b) {
  if (a.size() != b.size()) throw std::invalid_argument("fredkin bank width");
  for (size_t i = 0; i < a.size(); ++i) c.append(ir::GateKind::FREDKIN, {ctrl, a[i], b[i]});
}

SwapOut emit_conditional_swap(Circuit& c, const Operand& a, const Operand& b) {
  SubtractOut sub = emit_subtractor(c, a.exp, b.exp, true, "swap.");
  SwapOut out;
  out.b7 = sub.borrow;
  out.d = sub.diff;
  out.x = {a.sign, sub.x_after, a.man};
  out.y = b;
  // b7 = 1 when expA < expB; the larger exponent always ends on the X side
  emit_fredkin_bank(c, out.b7, {out.x.sign}, {out.y.sign});
  emit_fredkin_bank(c, out.b7, out.x.exp, out.y.exp);
  emit_fredkin_bank(c, out.b7, out.x.man, out.y.man);
  return out;
}

Operand declare_operand(Circuit& c, const std::string& p) {
  Operand o;
  o.man = alloc(c, p + ".m", 23, ir::Role::Variable);
  o.exp = alloc(c, p + ".e", 8, ir::Role::Variable);
  o.sign = c.add_wire(p + ".s", ir::Role::Variable);
  return o;
}

BlockHandle build_conditional_swap() {
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Swap);
  Operand a = declare_operand(c, "a");
  Operand b = declare_operand(c, "b");
  SwapOut s = emit_conditional_swap(c, a, b);
  h.regs = {{"A_sign", {a.sign}}, {"A_exp", a.exp}, {"A_man", a.man},
            {"B_sign", {b.sign}}, {"B_exp", b.exp}, {"B_man", b.man},
            {"X_sign", {s.x.sign}}, {"X_exp", s.x.exp}, {"X_man", s.x.man},
            {"Y_sign", {s.y.sign}}, {"Y_exp", s.y.exp}, {"Y_man", s.y.man},
            {"d", s.d}, {"b7", {s.b7}}};
  seal(h);
  return h;
}

}  // namespace revfp::blocks
