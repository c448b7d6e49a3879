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

// Negation keeps every bit up to and including the lowest 1 and flips the rest.
// a_i = sign & (x_0..x_{i-1} all zero) marks the bits that stay.
Reg emit_converter(Circuit& c, int sign, const Reg& mag, const std::string& prefix) {
  const int m = static_cast<int>(mag.size());
  if (m < 2) throw std::invalid_argument("converter needs n >= 3");
  Reg carries;
  int a = c.zero(prefix + "a1");
  carries.push_back(a);
  c.append(GateKind::TR, {sign, mag[0], a});
  for (int i = 1; i <= m - 2; ++i) {
    int next = c.zero(prefix + "a" + std::to_string(i + 1));
    c.append(GateKind::TR, {a, mag[i], next});
    carries.push_back(next);
    a = next;
  }
  c.append(GateKind::CNOT, {a, mag[m - 1]});
  for (int i = 0; i < m; ++i) c.append(GateKind::CNOT, {sign, mag[i]});
  return carries;
}

BlockHandle build_converter(int n, ConvDir dir) {
  if (n < 3) throw std::invalid_argument("converter needs n >= 3");
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Conversion);
  Reg mag = alloc(c, "x", n - 1, ir::Role::Variable);
  int sign = c.add_wire("s", ir::Role::Variable);
  h.garbage = emit_converter(c, sign, mag, dir == ConvDir::SmTo2c ? "sm2c." : "2csm.");
  Reg word = mag;
  word.push_back(sign);
  h.regs = {{"sign", {sign}}, {"magnitude", mag}, {"word", word}};
  seal(h);
  return h;
}

}  // namespace revfp::blocks
