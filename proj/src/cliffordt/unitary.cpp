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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cliffordt/cliffordt.hpp"

namespace revfp::ct {

UnitaryMatrix::UnitaryMatrix(int qubits) : k_(qubits), a_(dim() * dim()) {
  for (size_t i = 0; i < dim(); ++i) at(i, i) = 1.0;
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& o) const {
  if (o.k_ != k_) throw std::invalid_argument("dimension mismatch");
  UnitaryMatrix r(k_);
  size_t n = dim();
  std::fill(r.a_.begin(), r.a_.end(), cplx{});
  for (size_t j = 0; j < n; ++j)
    for (size_t m = 0; m < n; ++m) {
      cplx b = o.at(m, j);
      if (b == cplx{}) continue;
      for (size_t i = 0; i < n; ++i) r.at(i, j) += at(i, m) * b;
    }
  return r;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  UnitaryMatrix r(k_);
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

double UnitaryMatrix::unitarity_error() const {
  UnitaryMatrix p = (*this) * adjoint();
  double e = 0;
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) e = std::max(e, std::abs(p.at(i, j) - (i == j ? 1.0 : 0.0)));
  return e;
}

namespace {

void apply(const PGate& g, cplx* v, size_t n) {
  const size_t t = size_t{1} << g.target;
  static const double r2 = 1.0 / std::sqrt(2.0);
  static const cplx w = std::polar(1.0, std::numbers::pi / 4);
  switch (g.kind) {
    case PKind::H:
      for (size_t i = 0; i < n; ++i)
        if (!(i & t)) {
          cplx a = v[i], b = v[i | t];
          v[i] = r2 * (a + b);
          v[i | t] = r2 * (a - b);
        }
      return;
    case PKind::T:
    case PKind::T_DAG:
    case PKind::P: {
      cplx ph = g.kind == PKind::T ? w : g.kind == PKind::T_DAG ? std::conj(w) : cplx{0, 1};
      for (size_t i = 0; i < n; ++i)
        if (i & t) v[i] *= ph;
      return;
    }
    case PKind::NOT:
      for (size_t i = 0; i < n; ++i)
        if (!(i & t)) std::swap(v[i], v[i | t]);
      return;
    case PKind::CNOT: {
      const size_t c = size_t{1} << g.control;
      for (size_t i = 0; i < n; ++i)
        if ((i & c) && !(i & t)) std::swap(v[i], v[i | t]);
      return;
    }
  }
}

}  // namespace

UnitaryMatrix unitary(const PhysicalCircuit& pc, int max_qubits) {
  if (pc.width > max_qubits)
    throw std::invalid_argument("unitary: width " + std::to_string(pc.width) + " exceeds limit " +
                                std::to_string(max_qubits));
  UnitaryMatrix u(pc.width);
  const size_t n = u.dim();
  for (size_t col = 0; col < n; ++col) {
    cplx* v = u.column(col);
    for (const auto& g : pc.gates) apply(g, v, n);
  }
  return u;
}

UnitaryMatrix permutation_matrix(const std::vector<uint32_t>& perm, int qubits) {
  UnitaryMatrix u(qubits);
  if (perm.size() != u.dim()) throw std::invalid_argument("permutation size mismatch");
  for (size_t i = 0; i < u.dim(); ++i) u.at(i, i) = 0;
  for (size_t x = 0; x < perm.size(); ++x) u.at(perm[x], x) = 1;
  return u;
}

UnitaryMatrix permutation_matrix(ir::GateKind k, bool inverse) {
  auto tt = ir::truth_table(k, inverse);
  int n = ir::arity(k);
  std::vector<uint32_t> perm(size_t{1} << n);
  for (size_t x = 0; x < perm.size(); ++x) perm[x] = tt[x];
  return permutation_matrix(perm, n);
}

std::vector<uint32_t> circuit_permutation(const ir::Circuit& c) {
  int n = c.width();
  if (n > 20) throw std::invalid_argument("circuit_permutation: too wide");
  std::vector<uint32_t> perm(size_t{1} << n);
  std::vector<uint64_t> w(n);
  // 64 basis states per pass
  for (size_t base = 0; base < perm.size(); base += 64) {
    size_t lanes = std::min<size_t>(64, perm.size() - base);
    for (int b = 0; b < n; ++b) {
      w[b] = 0;
      for (size_t l = 0; l < lanes; ++l) w[b] |= static_cast<uint64_t>(((base + l) >> b) & 1) << l;
    }
    c.simulate_lanes(w.data(), false);
    for (size_t l = 0; l < lanes; ++l) {
      uint32_t y = 0;
      for (int b = 0; b < n; ++b) y |= static_cast<uint32_t>((w[b] >> l) & 1) << b;
      perm[base + l] = y;
    }
  }
  return perm;
}

double phase_deviation(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.qubits() != v.qubits()) throw std::invalid_argument("dimension mismatch");
  cplx z = 1;
  bool found = false;
  for (size_t j = 0; j < v.dim() && !found; ++j)
    for (size_t i = 0; i < v.dim() && !found; ++i)
      if (std::abs(v.at(i, j)) > 1e-12 && std::abs(u.at(i, j)) > 1e-12) {
        z = u.at(i, j) / v.at(i, j);
        z /= std::abs(z);
        found = true;
      }
  double e = 0;
  for (size_t j = 0; j < v.dim(); ++j)
    for (size_t i = 0; i < v.dim(); ++i) e = std::max(e, std::abs(u.at(i, j) - z * v.at(i, j)));
  return e;
}

bool equivalent_up_to_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol) {
  return phase_deviation(u, v) <= tol;
}

}  // namespace revfp::ct
