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

#include "cliffordt/cliffordt.hpp"

namespace revfp::ct {

PhysicalCircuit lower(const ir::Circuit& c, std::optional<ir::Stage> only) {
  PhysicalCircuit pc;
  pc.width = c.width();
  const auto& gates = c.gates();
  for (size_t i = 0; i < gates.size(); ++i) {
    const ir::Gate& g = gates[i];
    if (only && g.stage != *only) continue;
    for (PGate p : decomposition(g.kind, g.inverse)) {
      p.target = g.ops[p.target];
      if (p.control >= 0) p.control = g.ops[p.control];
      p.origin = static_cast<int>(i);
      pc.gates.push_back(p);
    }
  }
  return pc;
}

PhysicalCircuit lower_gate(ir::GateKind k, bool inverse) {
  PhysicalCircuit pc;
  pc.width = ir::arity(k);
  pc.gates = decomposition(k, inverse);
  for (auto& g : pc.gates) g.origin = 0;
  return pc;
}

}  // namespace revfp::ct
