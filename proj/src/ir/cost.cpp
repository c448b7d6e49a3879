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

#include "ir/cost.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace revfp::ir {

CostTable CostTable::defaults() {
  CostTable t;
  t.set(GateKind::NOT, 1);
  t.set(GateKind::CNOT, 1);
  t.set(GateKind::TOFFOLI, 5);
  t.set(GateKind::FREDKIN, 5);
  t.set(GateKind::PERES, 4);
  t.set(GateKind::TR, 4);
  t.set(GateKind::RHS1, 4);
  t.set(GateKind::RHS2, 5);
  t.set(GateKind::RFS1, 6);
  t.set(GateKind::RFS2, 8);
  t.set(GateKind::RFA, 6);
  return t;
}

int CostTable::cost(GateKind k) const {
  if (!has(k)) throw CircuitError("gate kind missing from cost table: " + std::string(kind_name(k)));
  return cost_[static_cast<int>(k)];
}

void CostTable::set(GateKind k, int c) {
  if (c < 1) throw CircuitError("cost must be >= 1 for " + std::string(kind_name(k)));
  cost_[static_cast<int>(k)] = c;
  set_[static_cast<int>(k)] = true;
}

CostTable CostTable::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CircuitError(std::string("cost table: ") + e.what());
  }
  if (!j.is_object()) throw CircuitError("cost table: expected a JSON object");
  CostTable t = defaults();
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto k = kind_from_name(it.key());
    if (!k) throw CircuitError("cost table: unknown gate kind " + it.key());
    if (!it.value().is_number_integer()) throw CircuitError("cost table: non-integer cost for " + it.key());
    t.set(*k, it.value().get<int>());
  }
  return t;
}

CostTable CostTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CircuitError("cannot read cost table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

CostTable CostTable::from_env() {
  const char* p = std::getenv("REVFP_COST_TABLE");
  if (p == nullptr || *p == '\0') return defaults();
  return from_file(p);
}

void CostReport::update_kq() {
  if (qubit_count && t_depth) kq = *qubit_count * *t_depth;
}

CostReport cost_summary(const Circuit& c, const CostTable& table) {
  CostReport r;
  for (const auto& g : c.gates()) {
    int q = table.cost(g.kind);
    r.quantum_cost += q;
    r.gate_count += 1;
    auto& s = r.per_stage[g.stage];
    s.qc += q;
    s.gates += 1;
  }
  for (const auto& w : c.wires()) {
    if (w.is_constant()) {
      r.constant_inputs += 1;
      r.per_stage[w.stage].ci += 1;
    }
    if (w.output_role == OutputRole::Garbage) {
      r.garbage_outputs += 1;
      r.per_stage[w.out_stage != Stage::None ? w.out_stage : w.stage].go += 1;
    }
  }
  r.qubit_count = c.width();
  return r;
}

}  // namespace revfp::ir
