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

#include "ir/gates.hpp"

namespace revfp::ir {

namespace {

struct KindInfo {
  std::string_view name;
  int arity;
  bool self_inverse;
};

constexpr KindInfo kInfo[kNumGateKinds] = {
    {"NOT", 1, true},   {"CNOT", 2, true},    {"TOFFOLI", 3, true},
    {"FREDKIN", 3, true}, {"PERES", 3, false}, {"TR", 3, false},
    {"RHS1", 3, true},  {"RHS2", 4, true},    {"RFS1", 4, false},
    {"RFS2", 4, false}, {"RFA", 4, false},
};

inline uint64_t borrow(uint64_t c, uint64_t b, uint64_t a) {
  return (c & ~(a ^ b)) ^ (~a & b);
}

inline uint64_t carry(uint64_t a, uint64_t b, uint64_t c) {
  return (a & b) ^ (c & (a ^ b));
}

}  // namespace

int arity(GateKind k) { return kInfo[static_cast<int>(k)].arity; }
bool self_inverse(GateKind k) { return kInfo[static_cast<int>(k)].self_inverse; }
std::string_view kind_name(GateKind k) { return kInfo[static_cast<int>(k)].name; }

std::optional<GateKind> kind_from_name(std::string_view s) {
  for (int i = 0; i < kNumGateKinds; ++i)
    if (kInfo[i].name == s) return static_cast<GateKind>(i);
  return std::nullopt;
}

void apply_gate(GateKind k, bool inv, uint64_t* w, const int* o) {
  switch (k) {
    case GateKind::NOT:
      w[o[0]] = ~w[o[0]];
      return;
    case GateKind::CNOT:
      w[o[1]] ^= w[o[0]];
      return;
    case GateKind::TOFFOLI:
      w[o[2]] ^= w[o[0]] & w[o[1]];
      return;
    case GateKind::FREDKIN: {
      uint64_t t = w[o[0]] & (w[o[1]] ^ w[o[2]]);
      w[o[1]] ^= t;
      w[o[2]] ^= t;
      return;
    }
    case GateKind::PERES:
      if (!inv) {
        w[o[2]] ^= w[o[0]] & w[o[1]];
        w[o[1]] ^= w[o[0]];
      } else {
        w[o[1]] ^= w[o[0]];
        w[o[2]] ^= w[o[0]] & w[o[1]];
      }
      return;
    case GateKind::TR:
      if (!inv) {
        w[o[2]] ^= w[o[0]] & ~w[o[1]];
        w[o[1]] ^= w[o[0]];
      } else {
        w[o[1]] ^= w[o[0]];
        w[o[2]] ^= w[o[0]] & ~w[o[1]];
      }
      return;
    case GateKind::RHS1:
      w[o[2]] ^= w[o[0]] & ~w[o[1]];
      return;
    case GateKind::RHS2:
      w[o[0]] ^= w[o[1]] ^ w[o[2]];
      w[o[3]] ^= w[o[1]] & ~w[o[2]];
      return;
    case GateKind::RFS1: {
      uint64_t &c = w[o[0]], &b = w[o[1]], &a = w[o[2]], &s = w[o[3]];
      if (!inv) {
        s ^= borrow(c, b, a);
        a ^= b ^ c;
      } else {
        a ^= b ^ c;
        s ^= borrow(c, b, a);
      }
      return;
    }
    case GateKind::RFS2: {
      uint64_t &c = w[o[0]], &b = w[o[1]], &a = w[o[2]], &s = w[o[3]];
      if (!inv) {
        s ^= borrow(c, b, a);
        uint64_t ai = a;
        a ^= b ^ c;
        c = ai;
      } else {
        uint64_t ai = c;
        uint64_t ci = a ^ b ^ ai;
        a = ai;
        c = ci;
        s ^= borrow(c, b, a);
      }
      return;
    }
    case GateKind::RFA: {
      uint64_t &a = w[o[0]], &b = w[o[1]], &c = w[o[2]], &d = w[o[3]];
      if (!inv) {
        d ^= carry(a, b, c);
        b ^= a;
        c ^= b;
      } else {
        c ^= b;
        b ^= a;
        d ^= carry(a, b, c);
      }
      return;
    }
  }
}

std::array<uint8_t, 16> truth_table(GateKind k, bool inverse) {
  std::array<uint8_t, 16> t{};
  int n = arity(k);
  int ops[4] = {0, 1, 2, 3};
  for (int x = 0; x < (1 << n); ++x) {
    uint64_t w[4];
    for (int i = 0; i < 4; ++i) w[i] = (x >> i) & 1 ? ~0ULL : 0;
    apply_gate(k, inverse, w, ops);
    int y = 0;
    for (int i = 0; i < n; ++i) y |= static_cast<int>(w[i] & 1) << i;
    t[x] = static_cast<uint8_t>(y);
  }
  return t;
}

}  // namespace revfp::ir
