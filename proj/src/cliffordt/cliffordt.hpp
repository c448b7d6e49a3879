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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ir/circuit.hpp"

namespace revfp::ct {

enum class PKind : uint8_t { H, T, T_DAG, CNOT, NOT, P };

std::string_view pkind_name(PKind k);

struct PGate {
  PKind kind = PKind::H;
  int target = 0;
  int control = -1;  // CNOT only
  int origin = -1;   // index of the logical gate this came from
};

struct PhysicalCircuit {
  int width = 0;
  std::vector<PGate> gates;
};

// Decomposition of one logical gate on local wires 0..arity-1.
const std::vector<PGate>& decomposition(ir::GateKind k, bool inverse);
// The Peres decomposition exactly as printed, before the T-dagger fix.
const std::vector<PGate>& peres_as_drawn();
// RFA decomposition with the gate labelled "P" read as T instead of S.
std::vector<PGate> rfa_with_p_as_t();

// Replace every logical gate by its decomposition. When `only` is set, gates
// from other stages are skipped (provenance still indexes the full circuit).
PhysicalCircuit lower(const ir::Circuit& c, std::optional<ir::Stage> only = std::nullopt);
PhysicalCircuit lower_gate(ir::GateKind k, bool inverse = false);

// Two-wire circuits, wire 0 control.
PhysicalCircuit controlled_v();
PhysicalCircuit controlled_v_dag();

// --- dense simulation ----------------------------------------------------

using cplx = std::complex<double>;

class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(int qubits);  // identity
  int qubits() const { return k_; }
  size_t dim() const { return size_t{1} << k_; }
  cplx& at(size_t row, size_t col) { return a_[col * dim() + row]; }
  cplx at(size_t row, size_t col) const { return a_[col * dim() + row]; }
  UnitaryMatrix operator*(const UnitaryMatrix& o) const;
  UnitaryMatrix adjoint() const;
  double unitarity_error() const;  // max |U U^dag - I|

  cplx* column(size_t c) { return a_.data() + c * dim(); }

 private:
  int k_;
  std::vector<cplx> a_;  // column-major
};

// Basis index bit i = wire i. Refuses circuits wider than max_qubits.
UnitaryMatrix unitary(const PhysicalCircuit& pc, int max_qubits = 5);
UnitaryMatrix permutation_matrix(const std::vector<uint32_t>& perm, int qubits);
UnitaryMatrix permutation_matrix(ir::GateKind k, bool inverse = false);
// Permutation implemented by a classical circuit (all wires treated as variable).
std::vector<uint32_t> circuit_permutation(const ir::Circuit& c);

// min over the phase picked from the first nonzero entry of V: max |U - zV|.
double phase_deviation(const UnitaryMatrix& u, const UnitaryMatrix& v);
bool equivalent_up_to_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol = 1e-10);

// --- scheduling ------------------------------------------------------------

enum class DepthMode {
  Gate,   // each logical gate is an opaque block of its own T-depth
  Layer,  // per-gate ASAP, Clifford gates take no time
};

int64_t t_count(const PhysicalCircuit& pc);
int64_t t_depth(const PhysicalCircuit& pc, DepthMode mode = DepthMode::Gate);

// --- decomposition report -----------------------------------------------

struct DecompositionRow {
  std::string name;
  int64_t t_count = 0;
  int64_t t_depth = 0;        // gate mode
  int64_t t_depth_layer = 0;  // layer mode
  std::optional<int> paper_t_depth;
  double max_deviation = 0;
  bool pass = false;
  std::string note;
};

// Toffoli, Peres, TR, Fredkin, CV, CV-dagger, RFA, RLZC, then the subtractors.
std::vector<DecompositionRow> check_decompositions(double tol = 1e-10);
std::string format_decomposition_table(const std::vector<DecompositionRow>& rows);
std::string decomposition_json(const std::vector<DecompositionRow>& rows);

}  // namespace revfp::ct
