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
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ir/gates.hpp"

namespace revfp::ir {

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Stage : uint8_t {
  None,
  Swap,
  Alignment,
  Conversion,
  Addition,
  Normalization,
  Rounding,
  Copy,
};

inline constexpr Stage kPipelineStages[] = {
    Stage::Swap,         Stage::Alignment,     Stage::Addition,
    Stage::Conversion,   Stage::Normalization, Stage::Rounding,
};

std::string_view stage_name(Stage s);
std::optional<Stage> stage_from_name(std::string_view s);

enum class Role : uint8_t { Variable, Const0, Const1 };
enum class OutputRole : uint8_t { Unassigned, Result, RestoredInput, Garbage };

std::string_view role_name(Role r);
std::optional<Role> role_from_name(std::string_view s);

struct Wire {
  int id = 0;
  std::string name;
  Role role = Role::Variable;
  OutputRole output_role = OutputRole::Unassigned;
  Stage stage = Stage::None;      // stage that allocated the wire
  Stage out_stage = Stage::None;  // stage charged when the wire ends as garbage

  bool is_constant() const { return role != Role::Variable; }
  bool constant_value() const { return role == Role::Const1; }
};

struct Gate {
  GateKind kind = GateKind::NOT;
  std::array<int, 4> ops{-1, -1, -1, -1};
  bool inverse = false;
  Stage stage = Stage::None;

  int arity() const { return ir::arity(kind); }
  bool operator==(const Gate&) const = default;
};

class Circuit {
 public:
  Circuit() = default;

  // Declares wires 0..n-1 in order. Throws on an empty list or a repeated name.
  static Circuit with_wires(const std::vector<std::pair<std::string, Role>>& decls);

  int add_wire(std::string name, Role role);
  int zero(std::string name) { return add_wire(std::move(name), Role::Const0); }
  int one(std::string name) { return add_wire(std::move(name), Role::Const1); }

  void set_stage(Stage s) { stage_ = s; }
  Stage stage() const { return stage_; }

  void append(GateKind k, std::initializer_list<int> ops, bool inverse = false);
  void append(const Gate& g);

  int width() const { return static_cast<int>(wires_.size()); }
  const std::vector<Wire>& wires() const { return wires_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Wire& wire(int id) const { return wires_.at(id); }
  std::optional<int> find(std::string_view name) const;

  void set_output_role(int id, OutputRole r, Stage charged = Stage::None);
  // Marks every wire without an output role as garbage.
  void finalize();

  // Classical simulation on one basis state (one entry per wire, 0 or 1).
  std::vector<uint8_t> simulate(const std::vector<uint8_t>& in,
                                bool check_constants = true) const;
  // Bit-sliced simulation: w holds width() words, lane j of every word is
  // one basis state. lanes_mask selects lanes subject to constant checking.
  void simulate_lanes(uint64_t* w, bool check_constants = true,
                      uint64_t lanes_mask = ~0ULL) const;
  void run_gates(uint64_t* w, size_t begin, size_t end) const;

  Circuit inverted() const;
  // Appends the gates of another circuit defined over the same wires.
  void concat(const Circuit& other);

  bool operator==(const Circuit& o) const;

 private:
  void check_constants(const uint64_t* w, uint64_t mask) const;

  std::vector<Wire> wires_;
  std::vector<Gate> gates_;
  std::unordered_map<std::string, int> by_name_;
  Stage stage_ = Stage::None;
};

}  // namespace revfp::ir
