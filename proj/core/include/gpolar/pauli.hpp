// Copyright 2026 The gpolar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "gpolar/group.hpp"

namespace gpolar {

enum class PauliFlavor { complex_qubit, real_qubit, qudit_odd };

const char* to_string(PauliFlavor flavor);
PauliFlavor pauli_flavor_from_string(const std::string& name);

/// Describes one of the generalised Pauli groups: n tensor factors of
/// prime rank p, with a scalar phase subgroup in front.
struct PauliSpec {
  int p = 2;
  int n = 1;
  PauliFlavor flavor = PauliFlavor::complex_qubit;

  /// 4 for complex qubits (powers of i), 2 for real qubits (signs),
  /// p for odd-prime qudits (powers of a primitive p-th root of unity).
  int phase_order() const;
  long long group_order() const;  // phase_order * p^(2n)

  /// Throws SpecError on an unsupported flavor/prime combination.
  void validate() const;
};

/// phase scalar times the tensor product of per-factor X^xvec[j] Z^zvec[j].
struct PauliElement {
  int phase = 0;             // modulo phase_order
  std::vector<int> xvec;     // length n, entries mod p
  std::vector<int> zvec;     // length n, entries mod p

  bool operator==(const PauliElement&) const = default;
};

/// Square matrix whose entries are either zero or an exact root of unity
/// zeta_m^k. Products are exact; a product that would need a sum of two
/// nonzero roots in one entry is rejected (cannot occur for monomial
/// matrices, which is all this oracle ever multiplies).
class CycloMatrix {
 public:
  CycloMatrix(int dim, int root_order);
  static CycloMatrix matrix_identity(int dim, int root_order);

  int dim() const noexcept { return dim_; }
  int root_order() const noexcept { return root_order_; }

  bool is_zero(int r, int c) const { return at(r, c) < 0; }
  /// Exponent k of the entry zeta^k; entry must be nonzero.
  int exponent(int r, int c) const;
  void set(int r, int c, int exponent);

  CycloMatrix operator*(const CycloMatrix& rhs) const;
  CycloMatrix kron(const CycloMatrix& rhs) const;
  /// Multiply the whole matrix by zeta^delta.
  CycloMatrix scaled(int delta) const;
  bool operator==(const CycloMatrix&) const = default;

  /// Canonical textual key, usable for exact decoding tables.
  std::string key() const;

 private:
  int at(int r, int c) const { return entries_[static_cast<size_t>(r) * dim_ + c]; }
  int dim_;
  int root_order_;
  std::vector<int> entries_;  // -1 for zero, else exponent in 0..root_order-1
};

/// Canonical id of an element: phase-major, then xvec, then zvec,
/// each lexicographic with the first tensor factor most significant.
ElementId pauli_index(const PauliSpec& spec, const PauliElement& u);
PauliElement pauli_element_of(const PauliSpec& spec, ElementId id);

/// Symbolic product. The phase picks up kappa * (zvec_u . xvec_v) from
/// commuting Z factors of u past X factors of v, with kappa = 2 for complex
/// qubits (ZX = -XZ and -1 = i^2) and kappa = 1 otherwise.
PauliElement pauli_multiply(const PauliSpec& spec, const PauliElement& u, const PauliElement& v);

/// Exact matrix of an element (Kronecker product of the factors, scaled by
/// the phase). Root order: 4 for complex qubits, 2 for real, p for qudits.
CycloMatrix to_matrix(const PauliSpec& spec, const PauliElement& u);

/// Phase-stripped tensor label: "XY" style letters for qubits,
/// comma-joined "X2Z,I" style tokens for odd-prime qudits.
std::string class_label(const PauliSpec& spec, const PauliElement& u);

/// Phase of the element when written with sigma letters instead of X^x Z^z
/// words: every qubit factor with x = z = 1 is XZ = -i sigma_y (complex) or
/// XZ = -Y (real), so the stored phase shifts by one unit per Y letter.
int sigma_phase(const PauliSpec& spec, const PauliElement& u);

/// Full label, sigma-convention phase prefix included when nontrivial
/// ("Y" is sigma_y itself, "iY" is i sigma_y, and XZ prints as "-iY").
std::string label_of(const PauliSpec& spec, const PauliElement& u);

/// The whole group as a Cayley table, labels attached.
GroupPtr build_pauli_group(const PauliSpec& spec);

/// Checks pauli_multiply against the exact matrix oracle over all pairs:
/// multiply matrices, decode the product by exact-matrix lookup, compare.
/// Returns the number of pairs checked; throws InconsistencyError on mismatch.
long long verify_matrix_oracle(const PauliSpec& spec);

}  // namespace gpolar
