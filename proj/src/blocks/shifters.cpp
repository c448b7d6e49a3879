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

ShiftOut emit_shifter(Circuit& c, const Reg& data, const Reg& ctrl, Direction dir,
                      const std::string& prefix, std::vector<bool> live) {
  if (ctrl.empty()) throw std::invalid_argument("shifter: shift distance wires missing");
  const int n = static_cast<int>(data.size());
  if (live.empty()) live.assign(static_cast<size_t>(n), true);
  if (static_cast<int>(live.size()) != n) throw std::invalid_argument("shifter: live mask size");
  ShiftOut out;
  for (size_t j = 0; j < ctrl.size(); ++j) {
    const int s = 1 << j;
    const std::string sp = prefix + std::to_string(j) + ".";
    std::vector<bool> next(static_cast<size_t>(n), false);
    // fan the control out first, then move, then merge
    Reg src;
    for (int k = 0; k < n; ++k)
      if (live[k]) src.push_back(k);
    Reg ctl{ctrl[j]};
    for (size_t i = 1; i < src.size(); ++i) {
      int w = c.zero(sp + "c" + std::to_string(src[i]));
      c.append(GateKind::CNOT, {ctrl[j], w});
      ctl.push_back(w);
      out.scratch.push_back(w);
    }
    std::vector<std::pair<int, int>> merges;
    for (size_t i = 0; i < src.size(); ++i) {
      const int k = src[i];
      const int dst = dir == Direction::Right ? k - s : k + s;
      int z = c.zero(sp + "z" + std::to_string(k));
      c.append(GateKind::FREDKIN, {ctl[i], data[k], z});
      next[k] = true;
      if (dst < 0 || dst >= n) {
        out.captures.push_back(z);
        continue;
      }
      merges.emplace_back(z, data[dst]);
      out.scratch.push_back(z);
      next[dst] = true;
    }
    for (auto [z, d] : merges) c.append(GateKind::CNOT, {z, d});
    live = std::move(next);
  }
  return out;
}

BlockHandle build_barrel_shifter(int n_bits, int k_controls, Direction dir) {
  if (n_bits < 1 || k_controls < 1) throw std::invalid_argument("shifter size");
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(dir == Direction::Right ? ir::Stage::Alignment : ir::Stage::Normalization);
  Reg data = alloc(c, "x", n_bits, ir::Role::Variable);
  Reg ctrl = alloc(c, "s", k_controls, ir::Role::Variable);
  ShiftOut s = emit_shifter(c, data, ctrl, dir, "");
  h.regs = {{"data", data}, {"ctrl", ctrl}, {"captures", s.captures}};
  h.garbage = s.captures;
  h.garbage.insert(h.garbage.end(), s.scratch.begin(), s.scratch.end());
  seal(h);
  return h;
}

Reg emit_shift_limiter(Circuit& c, const Reg& mag, const std::string& prefix) {
  const int n = static_cast<int>(mag.size());
  Reg k = alloc_const(c, prefix + "k", n, 26);
  // borrow chain of 26 - mag; the last borrow says mag > 26
  int g = c.zero(prefix + "g0");
  c.append(GateKind::RHS1, {mag[0], k[0], g});
  Reg kpos{k[0]};
  for (int i = 1; i < n; ++i) {
    int next = c.zero(prefix + "g" + std::to_string(i));
    c.append(GateKind::RFS2, {g, mag[i], k[i], next});
    kpos.push_back(g);
    g = next;
  }
  for (int i = n - 1; i >= 0; --i) c.append(GateKind::FREDKIN, {g, mag[i], kpos[i]});
  Reg garbage = kpos;
  garbage.insert(garbage.end(), k.begin() + 1, k.end());
  garbage.push_back(g);
  return garbage;
}

BlockHandle build_shift_limiter() {
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Alignment);
  Reg mag = alloc(c, "d", 8, ir::Role::Variable);
  h.garbage = emit_shift_limiter(c, mag, "lim.");
  h.regs = {{"mag", mag}, {"limited", mag}};
  seal(h);
  return h;
}

int emit_or(Circuit& c, int a, int b, const std::string& name) {
  int k = c.one(name);
  c.append(GateKind::NOT, {a});
  c.append(GateKind::TR, {a, b, k});
  return k;
}

int emit_sticky(Circuit& c, const Reg& bits, const std::string& prefix) {
  if (bits.empty()) throw std::invalid_argument("sticky: no bits");
  int acc = bits[0];
  for (size_t i = 1; i < bits.size(); ++i) acc = emit_or(c, acc, bits[i], prefix + std::to_string(i));
  return acc;
}

BlockHandle build_sticky_cascade(int n_bits) {
  BlockHandle h;
  Circuit& c = h.circuit;
  c.set_stage(ir::Stage::Alignment);
  Reg bits = alloc(c, "x", n_bits, ir::Role::Variable);
  int s = emit_sticky(c, bits, "or");
  h.regs = {{"bits", bits}, {"sticky", {s}}};
  for (int i = 0; i < c.width(); ++i)
    if (i != s) h.garbage.push_back(i);
  seal(h);
  return h;
}

}  // namespace revfp::blocks
