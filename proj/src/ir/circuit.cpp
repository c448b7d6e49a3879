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

#include "ir/circuit.hpp"

#include <algorithm>

namespace revfp::ir {

namespace {
constexpr std::string_view kStageNames[] = {
    "none", "swap", "alignment", "conversion", "addition", "normalization", "rounding", "copy",
};
constexpr std::string_view kRoleNames[] = {"variable-input", "constant-0", "constant-1"};
}  // namespace

std::string_view stage_name(Stage s) { return kStageNames[static_cast<int>(s)]; }

std::optional<Stage> stage_from_name(std::string_view s) {
  for (int i = 0; i < 8; ++i)
    if (kStageNames[i] == s) return static_cast<Stage>(i);
  return std::nullopt;
}

std::string_view role_name(Role r) { return kRoleNames[static_cast<int>(r)]; }

std::optional<Role> role_from_name(std::string_view s) {
  for (int i = 0; i < 3; ++i)
    if (kRoleNames[i] == s) return static_cast<Role>(i);
  return std::nullopt;
}

Circuit Circuit::with_wires(const std::vector<std::pair<std::string, Role>>& decls) {
  if (decls.empty()) throw CircuitError("empty circuit");
  Circuit c;
  for (const auto& [name, role] : decls) c.add_wire(name, role);
  return c;
}

int Circuit::add_wire(std::string name, Role role) {
  if (name.empty()) throw CircuitError("wire name must be nonempty");
  if (by_name_.count(name)) throw CircuitError("duplicate wire name: " + name);
  int id = width();
  by_name_.emplace(name, id);
  Wire w;
  w.id = id;
  w.name = std::move(name);
  w.role = role;
  w.stage = stage_;
  wires_.push_back(std::move(w));
  return id;
}

void Circuit::append(GateKind k, std::initializer_list<int> ops, bool inverse) {
  Gate g;
  g.kind = k;
  g.inverse = inverse && !self_inverse(k);
  g.stage = stage_;
  if (static_cast<int>(ops.size()) != arity(k))
    throw CircuitError(std::string("wrong operand count for ") + std::string(kind_name(k)));
  std::copy(ops.begin(), ops.end(), g.ops.begin());
  append(g);
}

void Circuit::append(const Gate& g) {
  int n = g.arity();
  for (int i = 0; i < n; ++i) {
    if (g.ops[i] < 0 || g.ops[i] >= width())
      throw CircuitError("undeclared wire id " + std::to_string(g.ops[i]));
    for (int j = 0; j < i; ++j)
      if (g.ops[i] == g.ops[j])
        throw CircuitError("repeated operand " + std::to_string(g.ops[i]));
  }
  for (int i = n; i < 4; ++i)
    if (g.ops[i] != -1) throw CircuitError("too many operands");
  gates_.push_back(g);
}

std::optional<int> Circuit::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void Circuit::set_output_role(int id, OutputRole r, Stage charged) {
  Wire& w = wires_.at(id);
  w.output_role = r;
  if (charged != Stage::None) w.out_stage = charged;
}

void Circuit::finalize() {
  std::vector<Stage> last(wires_.size(), Stage::None);
  for (const auto& g : gates_)
    for (int i = 0; i < g.arity(); ++i) last[g.ops[i]] = g.stage;
  for (auto& w : wires_) {
    if (w.output_role == OutputRole::Unassigned) w.output_role = OutputRole::Garbage;
    if (w.out_stage == Stage::None) w.out_stage = last[w.id] != Stage::None ? last[w.id] : w.stage;
  }
}

void Circuit::check_constants(const uint64_t* w, uint64_t mask) const {
  for (const auto& wr : wires_) {
    if (!wr.is_constant()) continue;
    uint64_t want = wr.constant_value() ? ~0ULL : 0;
    if ((w[wr.id] ^ want) & mask)
      throw CircuitError("constant wire " + wr.name + " not at declared value");
  }
}

void Circuit::run_gates(uint64_t* w, size_t begin, size_t end) const {
  for (size_t i = begin; i < end; ++i) {
    const Gate& g = gates_[i];
    apply_gate(g.kind, g.inverse, w, g.ops.data());
  }
}

void Circuit::simulate_lanes(uint64_t* w, bool check, uint64_t mask) const {
  if (check) check_constants(w, mask);
  run_gates(w, 0, gates_.size());
}

std::vector<uint8_t> Circuit::simulate(const std::vector<uint8_t>& in, bool check) const {
  if (static_cast<int>(in.size()) != width())
    throw CircuitError("width mismatch: got " + std::to_string(in.size()) + " bits for width " +
                       std::to_string(width()));
  std::vector<uint64_t> w(in.size());
  for (size_t i = 0; i < in.size(); ++i) w[i] = in[i] ? 1 : 0;
  simulate_lanes(w.data(), check, 1);
  std::vector<uint8_t> out(in.size());
  for (size_t i = 0; i < in.size(); ++i) out[i] = w[i] & 1;
  return out;
}

Circuit Circuit::inverted() const {
  Circuit c = *this;
  c.gates_.assign(gates_.rbegin(), gates_.rend());
  for (auto& g : c.gates_)
    if (!self_inverse(g.kind)) g.inverse = !g.inverse;
  return c;
}

void Circuit::concat(const Circuit& other) {
  if (other.width() != width()) throw CircuitError("concat: width mismatch");
  for (const auto& g : other.gates_) append(g);
}

bool Circuit::operator==(const Circuit& o) const {
  if (gates_ != o.gates_ || wires_.size() != o.wires_.size()) return false;
  for (size_t i = 0; i < wires_.size(); ++i)
    if (wires_[i].name != o.wires_[i].name || wires_[i].role != o.wires_[i].role) return false;
  return true;
}

}  // namespace revfp::ir
