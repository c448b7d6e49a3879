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
#include <optional>
#include <string>
#include <string_view>

namespace revfp::ir {

// Logical gate kinds. The first six are primitive; the rest are the
// subtractor / full-adder macros whose elementary-gate cost is lower than
// the sum of their primitive expansions.
enum class GateKind : uint8_t {
  NOT,
  CNOT,
  TOFFOLI,
  FREDKIN,
  PERES,
  TR,
  RHS1,  // (a, b, r)        r ^= a & ~b
  RHS2,  // (r, a, b, s)     r ^= a ^ b, s ^= a & ~b
  RFS1,  // (c, b, a, s)     a <- a^b^c, s ^= borrow(a - b - c)
  RFS2,  // (c, b, a, s)     as RFS1, and c <- a
  RFA,   // (a, b, c, d)     b <- a^b, c <- a^b^c, d ^= carry
};

inline constexpr int kNumGateKinds = 11;

int arity(GateKind k);
bool self_inverse(GateKind k);
std::string_view kind_name(GateKind k);
std::optional<GateKind> kind_from_name(std::string_view s);

// Apply one gate to bit-sliced wire values. Each word carries 64 independent
// basis states, one per lane.
void apply_gate(GateKind k, bool inverse, uint64_t* w, const int* ops);

// Truth table of a single gate as a permutation of 2^arity local states.
// Bit i of the index is operand i.
std::array<uint8_t, 16> truth_table(GateKind k, bool inverse);

}  // namespace revfp::ir
