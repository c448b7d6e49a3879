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

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ir/circuit.hpp"

namespace revfp::ir {

class CostTable {
 public:
  // NOT=1 CNOT=1 TOFFOLI=5 FREDKIN=5 PERES=4 TR=4, plus the macro gates.
  static CostTable defaults();
  // JSON object {"KIND": cost, ...}; listed kinds override the defaults.
  static CostTable from_json(const std::string& text);
  static CostTable from_file(const std::string& path);
  // Defaults, overridden by $REVFP_COST_TABLE when set.
  static CostTable from_env();

  bool has(GateKind k) const { return set_[static_cast<int>(k)]; }
  int cost(GateKind k) const;
  void set(GateKind k, int cost);
  void erase(GateKind k) { set_[static_cast<int>(k)] = false; }

 private:
  std::array<int, kNumGateKinds> cost_{};
  std::array<bool, kNumGateKinds> set_{};
};

struct StageCost {
  int64_t qc = 0;
  int64_t go = 0;
  int64_t ci = 0;
  int64_t gates = 0;
};

struct CostReport {
  int64_t quantum_cost = 0;
  int64_t garbage_outputs = 0;
  int64_t constant_inputs = 0;
  int64_t gate_count = 0;
  std::map<Stage, StageCost> per_stage;

  std::optional<int64_t> t_count;
  std::optional<int64_t> t_depth;
  std::optional<int64_t> qubit_count;
  std::optional<int64_t> kq;

  // kq = qubit_count * t_depth when both are known.
  void update_kq();
};

// Garbage is counted from output roles, so finalize() the circuit first.
CostReport cost_summary(const Circuit& c, const CostTable& table);

}  // namespace revfp::ir
