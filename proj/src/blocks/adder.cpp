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

AdderOut emit_ripple_adder(Circuit& c, const Reg& a, const Reg& b, const std::string& prefix) {
  const size_t n = a.size();
  if (n < 2 || b.size() != n) throw std::invalid_argument("adder width");
  AdderOut out;
  int carry = c.zero(prefix + "c1");
  c.append(GateKind::PERES, {a[0], b[0], carry});  // half adder
  out.sum.push_back(b[0]);
  for (size_t i = 1; i < n; ++i) {
    int next = c.zero(prefix + "c" + std::to_string(i + 1));
    c.append(GateKind::RFA, {a[i], b[i], carry, next});
    out.sum.push_back(carry);
    carry = next;
  }
  // top sum bit: sign extension of both operands, charged to conversion
  ir::Stage st = c.stage();
  c.set_stage(ir::Stage::Conversion);
  c.append(GateKind::CNOT, {b[n - 1], carry});
  c.set_stage(st);
  out.sum.push_back(carry);
  out.b_after.assign(b.begin() + 1, b.end());  // b0 holds sum bit 0
  return out;
}

BlockHandle build_ripple_adder(int bits) {
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Addition);
  Reg a = alloc(c, "a", bits, ir::Role::Variable);
  Reg b = alloc(c, "b", bits, ir::Role::Variable);
  AdderOut s = emit_ripple_adder(c, a, b, "add.");
  h.regs = {{"a", a}, {"b", b}, {"sum", s.sum}};
  h.garbage = s.b_after;
  seal(h);
  return h;
}

}  // namespace revfp::blocks
