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

#include <map>
#include <stdexcept>

#include "blocks/blocks.hpp"

namespace revfp::blocks {

using ir::GateKind;

namespace {

void rlzc_gates(Circuit& c, int a, int b, int cw, int d, const RlzcCell& k) {
  c.append(GateKind::NOT, {b});
  c.append(GateKind::TR, {b, cw, k.a0});   // a0 = ~B~C
  c.append(GateKind::TOFFOLI, {a, k.a0, k.r7});
  c.append(GateKind::TR, {k.a0, a, k.r5});
  c.append(GateKind::CNOT, {k.a0, a});
  c.append(GateKind::TR, {k.r7, d, k.r8});
  c.append(GateKind::NOT, {b});
}

}  // namespace

RlzcCell emit_rlzc(Circuit& c, int a, int b, int cw, int d, const std::string& prefix) {
  RlzcCell k;
  k.a0 = c.zero(prefix + "a0");
  k.r5 = c.one(prefix + "v");
  k.r7 = c.one(prefix + "r7");
  k.r8 = c.one(prefix + "z");
  rlzc_gates(c, a, b, cw, d, k);
  return k;
}

BlockHandle build_rlzc() {
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Normalization);
  int a = c.add_wire("A", ir::Role::Variable);
  int b = c.add_wire("B", ir::Role::Variable);
  int cw = c.add_wire("C", ir::Role::Variable);
  RlzcCell k;
  k.a0 = c.zero("a0");
  k.r5 = c.one("V");
  int d = c.add_wire("D", ir::Role::Variable);
  k.r7 = c.one("r7");
  k.r8 = c.one("Z");
  rlzc_gates(c, a, b, cw, d, k);
  h.regs = {{"A", {a}}, {"B", {b}}, {"C", {cw}}, {"D", {d}}, {"V", {k.r5}}, {"Z", {k.r8}}};
  h.garbage = {cw, k.a0, d, k.r7};
  seal(h);
  return h;
}

// W[t] is the OR of the top t bits. Level 0 walks the bit pairs from the top
// and builds W[2], W[4], ... while flagging a leading one on an even bit.
// Level k pairs W[(b+1)2^k] with W[b 2^k] for odd b: a leading one between
// them sets bit k of the count.
Reg emit_rlzcu(Circuit& c, const Reg& f, const std::string& prefix) {
  const int n = static_cast<int>(f.size());
  if (n < 2 || (n & (n - 1))) throw std::invalid_argument("rlzcu width must be a power of two");
  int levels = 0;
  while ((1 << levels) < n) ++levels;

  std::map<int, int> w;
  w[0] = c.zero(prefix + "w0");
  Reg count;
  int cell_id = 0;
  auto cell = [&](int a, int b, int cw, int d) {
    return emit_rlzc(c, a, b, cw, d, prefix + "cell" + std::to_string(cell_id++) + ".");
  };

  int acc = c.zero(prefix + "acc0");
  for (int p = n / 2 - 1; p >= 0; --p) {
    RlzcCell k = cell(f[2 * p], w[n - 2 * p - 2], f[2 * p + 1], acc);
    w[n - 2 * p] = k.r5;
    acc = k.r8;
  }
  count.push_back(acc);

  for (int lv = 1; lv < levels; ++lv) {
    const int unit = 1 << lv;
    // the C input only has to be an OR over no more bits than B; these wires
    // are not read again afterwards
    int cw = lv == 1 ? w[0] : w[4 * lv - 6];
    acc = c.zero(prefix + "acc" + std::to_string(lv));
    for (int b = 1; (b + 1) * unit <= n; b += 2) {
      RlzcCell k = cell(w[(b + 1) * unit], w[b * unit], cw, acc);
      cw = k.r5;
      acc = k.r8;
    }
    count.push_back(acc);
  }
  return count;
}

BlockHandle build_rlzcu(int width) {
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Normalization);
  Reg f = alloc(c, "x", width, ir::Role::Variable);
  Reg o = emit_rlzcu(c, f, "lz.");
  h.regs = {{"input", f}, {"count", o}};
  std::vector<bool> keep(c.width(), false);
  for (int x : f) keep[x] = true;
  for (int x : o) keep[x] = true;
  for (int i = 0; i < c.width(); ++i)
    if (!keep[i]) h.garbage.push_back(i);
  seal(h);
  return h;
}

}  // namespace revfp::blocks
