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

#include "doctest.h"
#include "gpolar/pauli.hpp"
#include "test_util.hpp"

using namespace gpolar;
using namespace gpolar::testing;

TEST_CASE("pauli spec validation and group orders") {
  CHECK(build_pauli_group({2, 1, PauliFlavor::complex_qubit})->order() == 16);
  CHECK(build_pauli_group({2, 2, PauliFlavor::complex_qubit})->order() == 64);
  CHECK(build_pauli_group({2, 1, PauliFlavor::real_qubit})->order() == 8);
  CHECK(build_pauli_group({2, 2, PauliFlavor::real_qubit})->order() == 32);
  CHECK(build_pauli_group({3, 2, PauliFlavor::qudit_odd})->order() == 243);
  CHECK(build_pauli_group({3, 1, PauliFlavor::qudit_odd})->order() == 27);

  CHECK_THROWS_AS(build_pauli_group({3, 1, PauliFlavor::complex_qubit}), SpecError);
  CHECK_THROWS_AS(build_pauli_group({2, 1, PauliFlavor::qudit_odd}), SpecError);
  CHECK_THROWS_AS(build_pauli_group({4, 1, PauliFlavor::qudit_odd}), SpecError);
  CHECK_THROWS_AS(build_pauli_group({2, 0, PauliFlavor::complex_qubit}), SpecError);
  // beyond the dense-table bound
  CHECK_THROWS_AS(build_pauli_group({2, 6, PauliFlavor::complex_qubit}), SizeError);
  CHECK_THROWS_AS(verify_matrix_oracle({2, 6, PauliFlavor::complex_qubit}), SizeError);

  PauliSpec spec{2, 2, PauliFlavor::complex_qubit};
  CHECK(spec.group_order() == 64);
  CHECK(spec.phase_order() == 4);
  CHECK(PauliSpec{3, 2, PauliFlavor::qudit_odd}.phase_order() == 3);
}

TEST_CASE("element ids are phase-major lexicographic") {
  PauliSpec spec{3, 2, PauliFlavor::qudit_odd};
  CHECK(pid(spec, 0, {0, 0}, {0, 0}) == 0);
  CHECK(pid(spec, 1, {0, 0}, {0, 0}) == 81);
  CHECK(pid(spec, 0, {0, 1}, {0, 0}) == 9);
  CHECK(pid(spec, 0, {0, 0}, {0, 1}) == 1);
  for (ElementId id = 0; id < spec.group_order(); ++id) {
    CHECK(pauli_index(spec, pauli_element_of(spec, id)) == id);
  }
}

TEST_CASE("symbolic multiplication against fixed identities") {
  PauliSpec spec{2, 1, PauliFlavor::complex_qubit};
  PauliElement z{0, {0}, {1}};
  PauliElement x{0, {1}, {0}};
  // Z X = i^2 X Z
  CHECK(pauli_multiply(spec, z, x) == PauliElement{2, {1}, {1}});
  // X Z keeps phase 0 in this encoding
  CHECK(pauli_multiply(spec, x, z) == PauliElement{0, {1}, {1}});

  PauliSpec qspec{3, 1, PauliFlavor::qudit_odd};
  PauliElement qz{0, {0}, {1}};
  PauliElement qx{0, {1}, {0}};
  CHECK(pauli_multiply(qspec, qz, qx) == PauliElement{1, {1}, {1}});

  PauliElement identity{0, {0}, {0}};
  CHECK(pauli_multiply(spec, identity, identity) == identity);

  CHECK_THROWS_AS(pauli_multiply(spec, identity, PauliElement{0, {0, 0}, {0, 0}}), SpecError);
}

TEST_CASE("exact matrices of the classic generators") {
  PauliSpec spec{2, 1, PauliFlavor::complex_qubit};
  CycloMatrix id2 = to_matrix(spec, {0, {0}, {0}});
  CHECK(id2 == CycloMatrix::matrix_identity(2, 4));

  // sigma_y = i X Z = [[0, -i], [i, 0]]
  CycloMatrix y = to_matrix(spec, {1, {1}, {1}});
  CHECK(y.is_zero(0, 0));
  CHECK(y.is_zero(1, 1));
  CHECK(y.exponent(0, 1) == 3);  // -i
  CHECK(y.exponent(1, 0) == 1);  // i

  PauliSpec qspec{3, 1, PauliFlavor::qudit_odd};
  CycloMatrix clock = to_matrix(qspec, {0, {0}, {1}});
  for (int j = 0; j < 3; ++j) CHECK(clock.exponent(j, j) == j);  // diag(1, w, w^2)
  CycloMatrix shift = to_matrix(qspec, {0, {1}, {0}});
  for (int j = 0; j < 3; ++j) CHECK(shift.exponent((j + 1) % 3, j) == 0);

  // real Y = Z X squares to -I
  PauliSpec rspec{2, 1, PauliFlavor::real_qubit};
  PauliElement ry{1, {1}, {1}};  // -XZ = ZX
  CycloMatrix m = to_matrix(rspec, ry);
  CycloMatrix sq = m * m;
  CHECK(sq == to_matrix(rspec, {1, {0}, {0}}));
}

TEST_CASE("cyclotomic matrices reject non-monomial sums") {
  CycloMatrix a(2, 4);
  a.set(0, 0, 0);
  a.set(0, 1, 0);
  a.set(1, 0, 0);
  a.set(1, 1, 0);
  CHECK_THROWS_AS(a * a, InconsistencyError);
}

TEST_CASE("labels use the sigma-letter phase convention") {
  PauliSpec spec{2, 1, PauliFlavor::complex_qubit};
  // X Z is -i sigma_y; i X Z is sigma_y itself
  CHECK(label_of(spec, {0, {1}, {1}}) == "-iY");
  CHECK(label_of(spec, {1, {1}, {1}}) == "Y");
  CHECK(sigma_phase(spec, {1, {1}, {1}}) == 0);

  PauliSpec spec2{2, 2, PauliFlavor::complex_qubit};
  CHECK(label_of(spec2, {0, {0, 0}, {0, 0}}) == "II");
  CHECK(class_label(spec2, {1, {1, 1}, {0, 1}}) == "XY");
  CHECK(label_of(spec2, {1, {1, 1}, {0, 1}}) == "XY");  // i X(x)XZ = X(x)sigma_y
  CHECK(label_of(spec2, {2, {0, 0}, {0, 0}}) == "-II");
  CHECK(label_of(spec2, {3, {1, 0}, {0, 0}}) == "-iXI");

  PauliSpec rspec{2, 2, PauliFlavor::real_qubit};
  // X(x)XZ = -X(x)Y in the real convention Y = ZX
  CHECK(label_of(rspec, {0, {1, 1}, {0, 1}}) == "-XY");
  CHECK(label_of(rspec, {1, {1, 1}, {0, 1}}) == "XY");
  CHECK(class_label(rspec, {1, {1, 1}, {0, 1}}) == "XY");

  PauliSpec qspec{3, 2, PauliFlavor::qudit_odd};
  CHECK(label_of(qspec, {0, {0, 0}, {0, 0}}) == "I,I");
  CHECK(label_of(qspec, {1, {1, 0}, {2, 0}}) == "w*XZ2,I");
  CHECK(label_of(qspec, {2, {0, 2}, {0, 0}}) == "w2*I,X2");
}

TEST_CASE("oracle equivalence on the single-qubit flavors") {
  CHECK(verify_matrix_oracle({2, 1, PauliFlavor::complex_qubit}) == 16 * 16);
  CHECK(verify_matrix_oracle({2, 1, PauliFlavor::real_qubit}) == 8 * 8);
  CHECK(verify_matrix_oracle({3, 1, PauliFlavor::qudit_odd}) == 27 * 27);
}

TEST_CASE("derived subgroup has order p for every supported spec") {
  CHECK(derived_subgroup(complex_1q()).order() == 2);
  CHECK(derived_subgroup(complex_2q()).order() == 2);
  CHECK(derived_subgroup(real_1q()).order() == 2);
  CHECK(derived_subgroup(real_2q()).order() == 2);
  CHECK(derived_subgroup(qutrit_2()).order() == 3);
}

TEST_CASE("complex qubit flavors have G^(2) = G'") {
  for (GroupPtr G : {complex_1q(), complex_2q()}) {
    std::vector<ElementId> all(G->order());
    for (int i = 0; i < G->order(); ++i) all[i] = i;
    CHECK(power_set(*G, all, 2) == derived_subgroup(G).members);
  }
}
