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

#include <algorithm>

#include "doctest.h"
#include "gpolar/forms.hpp"
#include "test_util.hpp"

using namespace gpolar;
using namespace gpolar::testing;

namespace {

SpacePtr space_of(GroupPtr G, Subgroup N, int p) {
  return std::make_shared<const GFpVectorSpace>(make_factor_group(std::move(N)), p);
}

AlternatingForm form_mod_center(GroupPtr G, int p, std::optional<int> g_index = {}) {
  GeneratorChoice gc = choose_generator(G, p, g_index);
  return AlternatingForm(space_of(G, center(G), p), gc);
}

AlternatingForm form_mod_K(GroupPtr G) {
  GeneratorChoice gc = choose_generator(G, 2);
  return AlternatingForm(space_of(G, torsion_center_K(G), 2), gc);
}

}  // namespace

TEST_CASE("condition reports for the complex 1-qubit group") {
  GroupPtr G = complex_1q();
  Subgroup K = torsion_center_K(G);
  Subgroup Z = center(G);

  ConditionReport repK = check_conditions(G, K, 2);
  for (int i = 1; i <= 5; ++i) CHECK(repK.cond(i) == CondStatus::holds);
  CHECK(repK.holds_through(5));

  ConditionReport repZ = check_conditions(G, Z, 2);
  CHECK(repZ.holds_through(4));
  CHECK(repZ.cond(5) == CondStatus::fails);
  REQUIRE(repZ.witness_of(5).has_value());
  // the witness rechecks: that member of N really has order > 2
  ElementId a = repZ.witness_of(5)->elements.at(0);
  CHECK(Z.contains(a));
  CHECK(G->mul(a, a) != 0);
}

TEST_CASE("condition witnesses verify on recheck") {
  PauliSpec rspec{2, 1, PauliFlavor::real_qubit};
  GroupPtr R = real_1q();
  // N = <X> is not normal, not central, and misses commutators
  Subgroup N = generated_subgroup(R, {pid(rspec, 0, {1}, {0})});
  ConditionReport rep = check_conditions(R, N, 2);

  CHECK(rep.cond(1) == CondStatus::fails);
  REQUIRE(rep.witness_of(1).has_value());
  {
    const auto& w = rep.witness_of(1)->elements;
    REQUIRE(w.size() == 3);
    CHECK(R->commutator(w[0], w[1]) == w[2]);
    CHECK_FALSE(N.contains(w[2]));
  }
  CHECK(rep.cond(3) == CondStatus::fails);
  REQUIRE(rep.witness_of(3).has_value());
  {
    const auto& w = rep.witness_of(3)->elements;
    REQUIRE(w.size() == 2);
    CHECK(N.contains(w[0]));
    CHECK(R->mul(w[0], w[1]) != R->mul(w[1], w[0]));
  }
  CHECK(rep.cond(5) == CondStatus::holds);  // X squares to the identity

  // condition 4 witness on a group with large squares: cyclic of order 4
  GroupPtr C4 = make_group(cyclic_table(4));
  ConditionReport rep4 = check_conditions(C4, make_subgroup(C4, {0}), 2);
  CHECK(rep4.cond(4) == CondStatus::fails);
  REQUIRE(rep4.witness_of(4).has_value());
  {
    const auto& w = rep4.witness_of(4)->elements;
    CHECK(C4->mul(w[0], w[0]) == w[1]);
    CHECK_FALSE(derived_subgroup(C4).contains(w[1]));
  }

  // conditions 4 and 5 are not applicable for odd p
  GroupPtr Q = qutrit_2();
  ConditionReport rep3 = check_conditions(Q, center(Q), 3);
  CHECK(rep3.cond(4) == CondStatus::not_applicable);
  CHECK(rep3.cond(5) == CondStatus::not_applicable);
  CHECK(rep3.holds_through(3));
}

TEST_CASE("generator choices and psi tables") {
  GroupPtr G = complex_1q();
  GeneratorChoice gc = choose_generator(G, 2);
  CHECK(gc.g == 8);  // -identity is the only non-identity member of G'
  CHECK(gc.psi_of(0) == 0);
  CHECK(gc.psi_of(8) == 1);
  CHECK_THROWS_AS(gc.psi_of(1), Error);

  GroupPtr Q = qutrit_2();
  GeneratorChoice g0 = choose_generator(Q, 3, 0);
  GeneratorChoice g1 = choose_generator(Q, 3, 1);
  CHECK(g0.g != g1.g);
  CHECK(g0.psi_of(0) == 0);
  CHECK(g1.psi_of(0) == 0);
  // the two tables differ by the scalar 2 = k with g = g~^k
  for (ElementId x : derived_subgroup(Q).members) {
    CHECK(g1.psi_of(x) == (2 * g0.psi_of(x)) % 3);
  }
  CHECK_THROWS_AS(choose_generator(Q, 3, 2), Error);

  GroupPtr cyclic = make_group(cyclic_table(6));
  CHECK_THROWS_AS(choose_generator(cyclic, 2), ConditionError);
}

TEST_CASE("bilinear form on the 1-qubit factor spaces") {
  GroupPtr G = complex_1q();
  AlternatingForm byZ = form_mod_center(G, 2);
  CHECK(byZ.gram() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(byZ.nondegenerate());

  AlternatingForm byK = form_mod_K(G);
  CHECK(byK.radical().dim() == 1);
  CHECK_FALSE(byK.nondegenerate());

  // [v, v] = 0 for every vector
  const GFpVectorSpace& V = byK.space();
  for (long long i = 0; i < V.num_vectors(); ++i) {
    GFpVector v = V.vector_at(i);
    CHECK(byK.eval(v, v) == 0);
  }

  // central classes pair to zero with everything
  const FactorGroup& F = *V.source();
  PauliSpec spec{2, 1, PauliFlavor::complex_qubit};
  int central = F.coset_of(pid(spec, 1, {0}, {0}));  // the iI class
  for (int c = 0; c < F.size(); ++c) {
    CHECK(byK.eval_cosets(central, c) == 0);
  }

  // the X and Z classes pair to 1
  int xc = F.coset_of(pid(spec, 0, {1}, {0}));
  int zc = F.coset_of(pid(spec, 0, {0}, {1}));
  CHECK(byK.eval_cosets(xc, zc) == 1);
}

TEST_CASE("form construction needs conditions 1-3") {
  GroupPtr G = complex_1q();
  GeneratorChoice gc = choose_generator(G, 2);
  // N = G' = K works; N = {e} violates Condition 1 upstream (space ctor)
  // N below the centre but non-central cannot happen; exercise condition 3
  // via the real 2-qubit group with N = a non-central exponent-2 subgroup:
  PauliSpec rspec{2, 2, PauliFlavor::real_qubit};
  GroupPtr R = real_2q();
  Subgroup N = generated_subgroup(R, {pid(rspec, 0, {1, 0}, {0, 0}),
                                      pid(rspec, 1, {0, 0}, {0, 0})});
  REQUIRE(is_normal(N));  // contains G'
  SpacePtr V = space_of(R, N, 2);
  GeneratorChoice rgc = choose_generator(R, 2);
  try {
    AlternatingForm f(V, rgc);
    FAIL("expected ConditionError");
  } catch (const ConditionError& e) {
    CHECK(e.condition() == 3);
  }
}

TEST_CASE("commute iff orthogonal, exhaustively and on named pairs") {
  PauliSpec spec{2, 1, PauliFlavor::complex_qubit};
  GroupPtr G = complex_1q();
  AlternatingForm f = form_mod_center(G, 2);
  ElementId x = pid(spec, 0, {1}, {0});
  ElementId z = pid(spec, 0, {0}, {1});
  CHECK(commute_iff_orthogonal(f, x, z) == std::pair<bool, bool>{false, false});
  CHECK(commute_iff_orthogonal(f, x, x) == std::pair<bool, bool>{true, true});

  for (int a = 0; a < G->order(); ++a) {
    for (int b = 0; b < G->order(); ++b) {
      auto [commute, orthogonal] = commute_iff_orthogonal(f, a, b);
      CHECK(commute == orthogonal);
    }
  }

  PauliSpec qspec{3, 2, PauliFlavor::qudit_odd};
  GroupPtr Q = qutrit_2();
  AlternatingForm fq = form_mod_center(Q, 3);
  ElementId xi = pid(qspec, 0, {1, 0}, {0, 0});
  ElementId zi = pid(qspec, 0, {0, 0}, {1, 0});
  ElementId iz = pid(qspec, 0, {0, 0}, {0, 1});
  CHECK(commute_iff_orthogonal(fq, xi, zi) == std::pair<bool, bool>{false, false});
  CHECK(commute_iff_orthogonal(fq, xi, iz) == std::pair<bool, bool>{true, true});
}

TEST_CASE("bilinearity by brute force over all triples") {
  for (auto [G, p] : {std::pair<GroupPtr, int>{complex_1q(), 2},
                      std::pair<GroupPtr, int>{qutrit_2(), 3}}) {
    AlternatingForm f = form_mod_center(G, p);
    const GFpVectorSpace& V = f.space();
    for (long long i = 0; i < V.num_vectors(); ++i) {
      GFpVector u = V.vector_at(i);
      for (long long j = 0; j < V.num_vectors(); ++j) {
        GFpVector v = V.vector_at(j);
        for (long long k = 0; k < V.num_vectors(); ++k) {
          GFpVector w = V.vector_at(k);
          CHECK(f.eval(gfp_add(u, v), w) == (f.eval(u, w) + f.eval(v, w)) % p);
        }
      }
    }
  }
}

TEST_CASE("radical equals the centre's image") {
  GroupPtr G = complex_1q();
  AlternatingForm byK = form_mod_K(G);
  SubspaceGF rad = byK.radical();
  CHECK(rad.dim() == 1);
  Subgroup back = subgroup_of_subspace(byK.space(), rad);
  CHECK(back.members == center(G).members);

  CHECK(form_mod_center(G, 2).radical().dim() == 0);
  CHECK(form_mod_K(complex_2q()).radical().dim() == 1);
}

TEST_CASE("degenerate when the dimension is odd") {
  CHECK(form_mod_K(complex_1q()).space().dim() == 3);
  CHECK(form_mod_K(complex_1q()).radical().dim() > 0);
  CHECK(form_mod_K(complex_2q()).space().dim() == 5);
  CHECK(form_mod_K(complex_2q()).radical().dim() > 0);
}

TEST_CASE("quadratic form values on the worked examples") {
  PauliSpec spec{2, 1, PauliFlavor::complex_qubit};
  GroupPtr G = complex_1q();
  QuadraticFormGF2 Q(space_of(G, torsion_center_K(G), 2));
  const GFpVectorSpace& V = Q.space();
  const FactorGroup& F = *V.source();

  CHECK(Q.eval(gfp_zero(2, 3)) == 0);
  // Hermitian classes are singular, skew-Hermitian classes are not
  CHECK(Q.eval_coset(F.coset_of(pid(spec, 0, {1}, {0}))) == 0);  // X
  CHECK(Q.eval_coset(F.coset_of(pid(spec, 0, {0}, {1}))) == 0);  // Z
  CHECK(Q.eval_coset(F.coset_of(pid(spec, 1, {1}, {1}))) == 0);  // Y = iXZ
  CHECK(Q.eval_coset(F.coset_of(pid(spec, 1, {0}, {0}))) == 1);  // iI
  CHECK(Q.eval_coset(F.coset_of(pid(spec, 1, {1}, {0}))) == 1);  // iX
  CHECK(Q.eval_coset(F.coset_of(pid(spec, 0, {1}, {1}))) == 1);  // XZ = -iY

  PauliSpec rspec{2, 1, PauliFlavor::real_qubit};
  GroupPtr R = real_1q();
  QuadraticFormGF2 Qr(space_of(R, torsion_center_K(R), 2));
  const FactorGroup& Fr = *Qr.space().source();
  CHECK(Qr.eval_coset(Fr.coset_of(pid(rspec, 0, {1}, {0}))) == 0);  // X
  CHECK(Qr.eval_coset(Fr.coset_of(pid(rspec, 0, {0}, {1}))) == 0);  // Z
  CHECK(Qr.eval_coset(Fr.coset_of(pid(rspec, 0, {1}, {1}))) == 1);  // Y class
}

TEST_CASE("quadratic form demands p = 2 and conditions 4, 5") {
  GroupPtr Q = qutrit_2();
  CHECK_THROWS_AS(QuadraticFormGF2(space_of(Q, center(Q), 3)), ConditionError);

  GroupPtr G = complex_1q();
  try {
    QuadraticFormGF2 q(space_of(G, center(G), 2));
    FAIL("expected ConditionError");
  } catch (const ConditionError& e) {
    CHECK(e.condition() == 5);
  }
}

TEST_CASE("polar identity holds exhaustively") {
  for (GroupPtr G : {complex_1q(), real_1q(), real_2q()}) {
    QuadraticFormGF2 Q(space_of(G, torsion_center_K(G), 2));
    AlternatingForm polar = Q.polar_form();
    AlternatingForm direct(Q.space_ptr(), Q.generator());
    CHECK(polar.gram() == direct.gram());
    const GFpVectorSpace& V = Q.space();
    for (long long i = 0; i < V.num_vectors(); ++i) {
      GFpVector v = V.vector_at(i);
      for (long long j = 0; j < V.num_vectors(); ++j) {
        GFpVector w = V.vector_at(j);
        CHECK((Q.eval(gfp_add(v, w)) + Q.eval(v) + Q.eval(w)) % 2 == polar.eval(v, w));
      }
    }
  }
}

TEST_CASE("Q is non-zero whenever the commutator form is") {
  for (GroupPtr G : {complex_1q(), complex_2q(), real_1q(), real_2q()}) {
    QuadraticFormGF2 Q(space_of(G, torsion_center_K(G), 2));
    AlternatingForm polar = Q.polar_form();
    bool form_nonzero = false;
    for (const auto& row : polar.gram()) {
      for (int v : row) form_nonzero |= v != 0;
    }
    REQUIRE(form_nonzero);
    bool q_nonzero = false;
    for (int v : Q.values()) q_nonzero |= v == 1;
    CHECK(q_nonzero);
  }
}

TEST_CASE("restriction of Q to the radical is linear with kernel K/N") {
  // N = K: the kernel K/N is the zero subspace, so Q hits 1 on the rest
  GroupPtr G = complex_1q();
  QuadraticFormGF2 Q(space_of(G, torsion_center_K(G), 2));
  SubspaceGF rad = Q.polar_form().radical();
  REQUIRE(rad.dim() == 1);
  for (const GFpVector& v : rad.enumerate()) {
    if (!v.is_zero()) CHECK(Q.eval(v) == 1);
  }

  // N strictly below K: kernel K/N covers the whole radical, Q is singular
  // (Q8 x C2: squares land in {+-1} x {0}, K = Z = {+-1} x C2)
  GroupPtr Q8xC2 = make_group(direct_product_table(quaternion_table(), cyclic_table(2)));
  Subgroup N0 = n0_subgroup(Q8xC2, 2);
  Subgroup K = torsion_center_K(Q8xC2);
  REQUIRE(N0.order() == 2);
  REQUIRE(K.order() == 4);
  QuadraticFormGF2 Qbig(space_of(Q8xC2, N0, 2));
  SubspaceGF radBig = Qbig.polar_form().radical();
  SubspaceGF kImage = subspace_of_subgroup(Qbig.space(), K);
  // K/N is exactly the kernel of Q restricted to the radical
  for (const GFpVector& v : radBig.enumerate()) {
    CHECK((Qbig.eval(v) == 0) == kImage.contains(v));
  }
  CHECK(radBig.contains_subspace(kImage));
}

TEST_CASE("enumerate admissible moduli") {
  GroupPtr G = complex_1q();
  Subgroup K = torsion_center_K(G);
  Subgroup Z = center(G);

  auto quad = enumerate_admissible_N(G, 2, AdmissibleLevel::quadratic);
  REQUIRE(quad.size() == 1);
  CHECK(quad[0].members == K.members);

  auto bil = enumerate_admissible_N(G, 2, AdmissibleLevel::bilinear);
  REQUIRE(bil.size() == 2);
  CHECK(bil[0].members == K.members);
  CHECK(bil[1].members == Z.members);

  CHECK(enumerate_admissible_N(G, 2, AdmissibleLevel::vector_space).size() == 16);

  GroupPtr R = real_1q();
  auto rbil = enumerate_admissible_N(R, 2, AdmissibleLevel::bilinear);
  REQUIRE(rbil.size() == 1);
  CHECK(rbil[0].members == center(R).members);
  auto rquad = enumerate_admissible_N(R, 2, AdmissibleLevel::quadratic);
  REQUIRE(rquad.size() == 1);
  CHECK(rquad[0].members == center(R).members);
  CHECK(enumerate_admissible_N(R, 2, AdmissibleLevel::vector_space).size() == 5);

  GroupPtr Q = qutrit_2();
  auto qbil = enumerate_admissible_N(Q, 3, AdmissibleLevel::bilinear);
  REQUIRE(qbil.size() == 1);
  CHECK(qbil[0].members == center(Q).members);
  CHECK(enumerate_admissible_N(Q, 3, AdmissibleLevel::vector_space).size() == 212);
  CHECK_THROWS_AS(enumerate_admissible_N(Q, 3, AdmissibleLevel::quadratic), ConditionError);

  GroupPtr cyclic = make_group(cyclic_table(6));
  CHECK_THROWS_AS(enumerate_admissible_N(cyclic, 2, AdmissibleLevel::bilinear), ConditionError);

  // every bilinear-admissible N really carries the form
  for (const Subgroup& N : bil) {
    GeneratorChoice gc = choose_generator(G, 2);
    CHECK_NOTHROW(AlternatingForm(space_of(G, N, 2), gc));
  }
}

TEST_CASE("generator covariance scales the gram matrix by 2 for p = 3") {
  GroupPtr Q = qutrit_2();
  AlternatingForm f0 = form_mod_center(Q, 3, 0);
  AlternatingForm f1 = form_mod_center(Q, 3, 1);
  const int d = f0.space().dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      CHECK(f1.gram()[i][j] == (2 * f0.gram()[i][j]) % 3);
    }
  }
  // orthogonality relations agree
  for (long long i = 0; i < f0.space().num_vectors(); ++i) {
    for (long long j = 0; j < f0.space().num_vectors(); ++j) {
      GFpVector v = f0.space().vector_at(i);
      GFpVector w = f0.space().vector_at(j);
      CHECK((f0.eval(v, w) == 0) == (f1.eval(v, w) == 0));
    }
  }
}
