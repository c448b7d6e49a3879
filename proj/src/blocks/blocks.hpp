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
#include <map>
#include <string>
#include <vector>

#include "ir/circuit.hpp"

namespace revfp::blocks {

using ir::Circuit;
using Reg = std::vector<int>;  // little-endian wire ids

using RegisterMap = std::map<std::string, Reg>;

struct BlockHandle {
  Circuit circuit;
  RegisterMap regs;
  Reg garbage;
};

// Output roles for a standalone block: declared garbage, everything else result.
void seal(BlockHandle& h);

Reg alloc(Circuit& c, const std::string& prefix, int n, ir::Role role = ir::Role::Const0);
// Constant register holding `value` (bit i of value on wire i).
Reg alloc_const(Circuit& c, const std::string& prefix, int n, uint64_t value);

// Reads a register out of a bit-sliced state, lane `lane`.
uint64_t read_reg(const uint64_t* w, const Reg& r, int lane = 0);
// Writes `value` into lane `lane` of every wire in r.
void write_reg(uint64_t* w, const Reg& r, uint64_t value, int lane = 0);

// --- subtractors ----------------------------------------------------------

struct SubtractOut {
  Reg diff;     // x - y, low bits first
  int borrow;   // final borrow, 1 when x < y
  Reg x_after;  // where x now lives (RFS2 moves x_i onto the borrow wire)
};

// x - y with one RHS2 and |x|-1 full subtractors. keep_x selects RFS2, which
// keeps the minuend; RFS1 overwrites it with the difference.
SubtractOut emit_subtractor(Circuit& c, const Reg& x, const Reg& y, bool keep_x,
                            const std::string& prefix);

BlockHandle build_rhs(int variant);
BlockHandle build_rfs(int variant);

// --- swap -----------------------------------------------------------------

struct Operand {
  int sign;
  Reg exp;  // 8
  Reg man;  // 23
};

struct SwapOut {
  Operand x;  // larger exponent
  Operand y;
  Reg d;      // exponent difference, 8 bits two's complement (b7 is the sign)
  int b7;
};

// Variable wires p.m0..22, p.e0..7, p.s in word bit order.
Operand declare_operand(Circuit& c, const std::string& p);
void emit_fredkin_bank(Circuit& c, int ctrl, const Reg& a, const Reg& b);
SwapOut emit_conditional_swap(Circuit& c, const Operand& a, const Operand& b);
BlockHandle build_conditional_swap();

// --- alignment ------------------------------------------------------------

enum class Direction { Right, Left };

struct ShiftOut {
  Reg captures;  // wires that received the bits shifted out
  Reg scratch;   // control copies and moved-bit copies, all garbage
};

// Logarithmic shifter: stage j moves data by 2^j under ctrl[j]. Data wire
// positions stay fixed. Each stage is one layer of Fredkins, each on its own
// copy of the control, that moves the bits onto fresh wires; CNOTs then
// merge them back at the shifted position.
// live[i] false promises data[i] is 0 on entry; no gates are spent on it.
ShiftOut emit_shifter(Circuit& c, const Reg& data, const Reg& ctrl, Direction dir,
                      const std::string& prefix, std::vector<bool> live = {});
BlockHandle build_barrel_shifter(int n_bits, int k_controls, Direction dir);

// min(mag, 26) written back onto mag. Returns the garbage it leaves.
Reg emit_shift_limiter(Circuit& c, const Reg& mag, const std::string& prefix);
BlockHandle build_shift_limiter();

// a | b on a fresh constant-1 wire, via NOT + TR.
int emit_or(Circuit& c, int a, int b, const std::string& name);
int emit_sticky(Circuit& c, const Reg& bits, const std::string& prefix);
BlockHandle build_sticky_cascade(int n_bits = 24);

// --- conversion -------------------------------------------------------------

enum class ConvDir { SmTo2c, TcToSm };

// Conditionally negates mag under sign. Same gates in both directions.
// Returns the carry ancillas.
Reg emit_converter(Circuit& c, int sign, const Reg& mag, const std::string& prefix);
BlockHandle build_converter(int n, ConvDir dir);

// --- addition ---------------------------------------------------------------

struct AdderOut {
  Reg sum;  // |a|+1 bits, the top one is the sign extension
  Reg b_after;  // b1.. now hold a^b
};

AdderOut emit_ripple_adder(Circuit& c, const Reg& a, const Reg& b, const std::string& prefix);
BlockHandle build_ripple_adder(int bits = 28);

// --- leading zeros ----------------------------------------------------------

struct RlzcCell {
  int a0, r5, r7, r8;
};

// r5 <- A|B|C, r8 <- D | A~B~C. A and B are preserved.
RlzcCell emit_rlzc(Circuit& c, int a, int b, int cw, int d, const std::string& prefix);
BlockHandle build_rlzc();

// Leading-zero count of f (width a power of two, f.back() is the MSB).
// Bits below the leading one are preserved; the leading one and the zeros
// above it are overwritten, since each pair's upper bit is a cell's C input.
Reg emit_rlzcu(Circuit& c, const Reg& f, const std::string& prefix);
BlockHandle build_rlzcu(int width = 32);

// --- normalization / rounding ---------------------------------------------

struct NormalizeOut {
  Reg f;         // 32-bit normalized field; f[31] (the hidden one) is not kept
  Reg exponent;  // 8
  Reg count;     // 5-bit leading zero count
  int ov;
};

// mag: 28-bit sum magnitude; exp: 8-bit exponent of the larger operand.
NormalizeOut emit_normalization(Circuit& c, const Reg& mag, const Reg& exp,
                                const std::string& prefix);
BlockHandle build_normalization();

// Relabels f: f[8..30] continue as the mantissa, the other 9 bits become garbage.
Reg emit_rounding(Circuit& c, const Reg& f);
BlockHandle build_rounding();

}  // namespace revfp::blocks
