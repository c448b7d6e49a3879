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
using ir::Role;

Reg alloc(Circuit& c, const std::string& prefix, int n, Role role) {
  Reg r(n);
  for (int i = 0; i < n; ++i) r[i] = c.add_wire(prefix + std::to_string(i), role);
  return r;
}

Reg alloc_const(Circuit& c, const std::string& prefix, int n, uint64_t value) {
  Reg r(n);
  for (int i = 0; i < n; ++i)
    r[i] = c.add_wire(prefix + std::to_string(i), (value >> i) & 1 ? Role::Const1 : Role::Const0);
  return r;
}

uint64_t read_reg(const uint64_t* w, const Reg& r, int lane) {
  uint64_t v = 0;
  for (size_t i = 0; i < r.size(); ++i) v |= ((w[r[i]] >> lane) & 1) << i;
  return v;
}

void write_reg(uint64_t* w, const Reg& r, uint64_t value, int lane) {
  const uint64_t bit = 1ULL << lane;
  for (size_t i = 0; i < r.size(); ++i) {
    if ((value >> i) & 1)
      w[r[i]] |= bit;
    else
      w[r[i]] &= ~bit;
  }
}

void seal(BlockHandle& h) {
  std::vector<bool> g(h.circuit.width(), false);
  for (int w : h.garbage) g[w] = true;
  for (int i = 0; i < h.circuit.width(); ++i)
    h.circuit.set_output_role(i, g[i] ? ir::OutputRole::Garbage : ir::OutputRole::Result);
  h.circuit.finalize();
}

SubtractOut emit_subtractor(Circuit& c, const Reg& x, const Reg& y, bool keep_x,
                            const std::string& prefix) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("subtractor width");
  SubtractOut out;
  int r = c.zero(prefix + "d0");
  int s = c.zero(prefix + "b0");
  c.append(GateKind::RHS2, {r, y[0], x[0], s});
  out.diff.push_back(r);
  out.x_after.push_back(x[0]);
  for (size_t i = 1; i < x.size(); ++i) {
    int next = c.zero(prefix + "b" + std::to_string(i));
    c.append(keep_x ? GateKind::RFS2 : GateKind::RFS1, {s, y[i], x[i], next});
    out.diff.push_back(x[i]);
    out.x_after.push_back(keep_x ? s : -1);
    s = next;
  }
  out.borrow = s;
  if (!keep_x) out.x_after.clear();
  return out;
}

BlockHandle build_rhs(int variant) {
  BlockHandle h;
  Circuit& c = h.circuit;
  if (variant == 1) {
    int a = c.add_wire("A", Role::Variable);
    int b = c.add_wire("B", Role::Variable);
    int r = c.zero("R");
    c.append(GateKind::RHS1, {b, a, r});
    h.regs = {{"minuend", {a}}, {"subtrahend", {b}}, {"borrow", {r}}};
    h.garbage = {};
  } else if (variant == 2) {
    int r = c.zero("R");
    int a = c.add_wire("A", Role::Variable);
    int b = c.add_wire("B", Role::Variable);
    int s = c.zero("S");
    c.append(GateKind::RHS2, {r, b, a, s});
    h.regs = {{"minuend", {a}}, {"subtrahend", {b}}, {"difference", {r}}, {"borrow", {s}}};
  } else {
    throw std::invalid_argument("RHS variant must be 1 or 2");
  }
  seal(h);
  return h;
}

BlockHandle build_rfs(int variant) {
  if (variant != 1 && variant != 2) throw std::invalid_argument("RFS variant must be 1 or 2");
  BlockHandle h;
  Circuit& c = h.circuit;
  int cw = c.add_wire("C", Role::Variable);
  int b = c.add_wire("B", Role::Variable);
  int a = c.add_wire("A", Role::Variable);
  int s = c.zero("S");
  c.append(variant == 1 ? GateKind::RFS1 : GateKind::RFS2, {cw, b, a, s});
  h.regs = {{"borrow_in", {cw}}, {"subtrahend", {b}}, {"minuend", {a}},
            {"difference", {a}}, {"borrow", {s}}};
  if (variant == 2) h.regs["minuend_out"] = {cw};
  seal(h);
  return h;
}

}  // namespace revfp::blocks
