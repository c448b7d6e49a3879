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

#include <cstdint>
#include <random>
#include <vector>

#include "blocks/blocks.hpp"

namespace revfp::testing {

using blocks::Reg;

// Bit-sliced state of a circuit: constants at their declared values, every
// variable wire 0.
class State {
 public:
  explicit State(const ir::Circuit& c) : c_(c), w_(c.width(), 0) {
    for (const auto& wire : c.wires())
      if (wire.role == ir::Role::Const1) w_[wire.id] = ~0ULL;
  }

  void set(const Reg& r, uint64_t v, int lane = 0) { blocks::write_reg(w_.data(), r, v, lane); }
  uint64_t get(const Reg& r, int lane = 0) const { return blocks::read_reg(w_.data(), r, lane); }
  void set(int wire, bool v, int lane = 0) { set(Reg{wire}, v ? 1 : 0, lane); }
  bool bit(int wire, int lane = 0) const { return get(Reg{wire}, lane) != 0; }

  void run() { c_.simulate_lanes(w_.data()); }
  void run_unchecked() { c_.simulate_lanes(w_.data(), false); }
  std::vector<uint64_t>& words() { return w_; }

 private:
  const ir::Circuit& c_;
  std::vector<uint64_t> w_;
};

// Lane-by-lane shorthand for single-state runs.
inline uint64_t mask(int bits) { return bits >= 64 ? ~0ULL : (1ULL << bits) - 1; }

inline uint64_t sext(uint64_t v, int bits) {
  return (v >> (bits - 1)) & 1 ? v | ~mask(bits) : v & mask(bits);
}

}  // namespace revfp::testing
