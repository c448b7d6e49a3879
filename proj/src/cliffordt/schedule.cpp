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

#include "cliffordt/cliffordt.hpp"

namespace revfp::ct {

namespace {

bool is_t(PKind k) { return k == PKind::T || k == PKind::T_DAG; }

// ASAP over gates [b, e): a T gate takes one level, Clifford gates take none
// but still order their operands. Returns the deepest level reached.
int64_t layer_depth(const std::vector<PGate>& g, size_t b, size_t e, std::vector<int64_t>& lvl) {
  int64_t depth = 0;
  for (size_t i = b; i < e; ++i) {
    int64_t s = lvl[g[i].target];
    if (g[i].control >= 0) s = std::max(s, lvl[g[i].control]);
    if (is_t(g[i].kind)) ++s;
    lvl[g[i].target] = s;
    if (g[i].control >= 0) lvl[g[i].control] = s;
    depth = std::max(depth, s);
  }
  return depth;
}

}  // namespace

int64_t t_count(const PhysicalCircuit& pc) {
  return std::count_if(pc.gates.begin(), pc.gates.end(), [](const PGate& g) { return is_t(g.kind); });
}

int64_t t_depth(const PhysicalCircuit& pc, DepthMode mode) {
  std::vector<int64_t> lvl(pc.width, 0);
  if (mode == DepthMode::Layer) return layer_depth(pc.gates, 0, pc.gates.size(), lvl);

  // Gate mode: a run of gates with one origin is a block that starts when all
  // of its wires are free and holds them for its own T-depth.
  const auto& g = pc.gates;
  std::vector<int64_t> local(pc.width, 0);
  std::vector<int> wires;
  int64_t depth = 0;
  size_t i = 0;
  while (i < g.size()) {
    size_t j = i + 1;
    if (g[i].origin >= 0)
      while (j < g.size() && g[j].origin == g[i].origin) ++j;
    wires.clear();
    for (size_t k = i; k < j; ++k) {
      wires.push_back(g[k].target);
      if (g[k].control >= 0) wires.push_back(g[k].control);
    }
    std::sort(wires.begin(), wires.end());
    wires.erase(std::unique(wires.begin(), wires.end()), wires.end());
    int64_t start = 0;
    for (int w : wires) {
      start = std::max(start, lvl[w]);
      local[w] = 0;
    }
    int64_t d = layer_depth(g, i, j, local);
    for (int w : wires) lvl[w] = start + d;
    depth = std::max(depth, start + d);
    i = j;
  }
  return depth;
}

}  // namespace revfp::ct
