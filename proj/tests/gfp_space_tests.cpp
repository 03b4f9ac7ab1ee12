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

#include <set>

#include "doctest.h"
#include "gpolar/gfp_space.hpp"
#include "test_util.hpp"

using namespace gpolar;
using namespace gpolar::testing;

namespace {

SpacePtr space_mod_K(GroupPtr G, int p = 2) {
  return std::make_shared<const GFpVectorSpace>(make_factor_group(torsion_center_K(G)), p);
}

SpacePtr space_mod_center(GroupPtr G, int p) {
  return std::make_shared<const GFpVectorSpace>(make_factor_group(center(G)), p);
}

}  // namespace

TEST_CASE("vector space dimensions from the worked factor groups") {
  CHECK(space_mod_K(complex_1q())->dim() == 3);
  CHECK(space_mod_center(complex_1q(), 2)->dim() == 2);
  SpacePtr V5 = space_mod_center(qutrit_2(), 3);
  CHECK(V5->dim() == 4);
  CHECK(V5->num_vectors() == 81);
}

TEST_CASE("condition violations are named") {
  // G/{e} for a non-commutative G breaks Condition 1
  GroupPtr G = complex_1q();
  FactorPtr trivial = make_factor_group(make_subgroup(G, {0}));
  try {
    GFpVectorSpace V(trivial, 2);
    FAIL("expected ConditionError");
  } catch (const ConditionError& e) {
    CHECK(e.condition() == 1);
  }

  // commutative but of exponent 4
  GroupPtr cyclic4 = make_group(cyclic_table(4));
  FactorPtr c4 = make_factor_group(make_subgroup(cyclic4, {0}));
  try {
    GFpVectorSpace V(c4, 2);
    FAIL("expected ConditionError");
  } catch (const ConditionError& e) {
    CHECK(e.condition() == 1);
    CHECK(std::string(e.what()).find("p-th powers") != std::string::npos);
  }
}

TEST_CASE("coordinates are a group isomorphism") {
  for (auto [G, p] : {std::pair<GroupPtr, int>{complex_1q(), 2},
                      std::pair<GroupPtr, int>{qutrit_2(), 3}}) {
    SpacePtr V = space_mod_center(G, p);
    const FactorGroup& F = *V->source();
    for (int u = 0; u < F.size(); ++u) {
      for (int v = 0; v < F.size(); ++v) {
        CHECK(V->coord_of(F.mul(u, v)) == gfp_add(V->coord_of(u), V->coord_of(v)));
      }
    }
  }
}

TEST_CASE("coset_to_word inverts coord_of") {
  PauliSpec spec{2, 1, PauliFlavor::complex_qubit};
  GroupPtr G = complex_1q();
  SpacePtr V = space_mod_center(G, 2);
  const FactorGroup& F = *V->source();

  CHECK(V->coset_to_word(gfp_zero(2, 2)) == 0);
  for (int i = 0; i < V->dim(); ++i) {
    CHECK(V->coset_to_word(gfp_unit(2, 2, i)) == V->basis()[i]);
  }
  // (1,1) lands in the coset of sigma_x sigma_z, the Y class
  ElementId y_rep = pid(spec, 0, {1}, {1});
  CHECK(V->coset_to_word(GFpVector{2, {1, 1}}) == F.coset_of(y_rep));

  for (int c = 0; c < F.size(); ++c) {
    CHECK(V->coset_to_word(V->coord_of(c)) == c);
  }
}

TEST_CASE("scalar action agrees with group powers and kills at p") {
  SpacePtr V = space_mod_center(qutrit_2(), 3);
  const FactorGroup& F = *V->source();
  for (int c = 0; c < F.size(); ++c) {
    const GFpVector& v = V->coord_of(c);
    for (int m = 0; m < 3; ++m) {
      CHECK(V->coset_to_word(gfp_scale(m, v)) == F.power(c, m));
    }
    CHECK(gfp_scale(3, v).is_zero());
    CHECK(F.power(c, 3) == 0);
  }
}

TEST_CASE("the group-word shortcut for scalars is wrong and stays out") {
  // m = 0 and v != o: the coordinate route gives o; the would-be shortcut
  // g^0 x N = x N gives back v itself.
  GroupPtr G = complex_1q();
  SpacePtr V = space_mod_center(G, 2);
  const FactorGroup& F = *V->source();
  GFpVector v = V->coord_of(1);
  REQUIRE(!v.is_zero());
  CHECK(gfp_scale(0, v).is_zero());
  ElementId x = F.rep(1);
  ElementId g = derived_subgroup(G).members[1];
  int shortcut_coset = F.coset_of(G->mul(G->power(g, 0), x));
  CHECK(shortcut_coset == 1);  // still v, not o
  CHECK(V->coset_to_word(gfp_scale(0, v)) != shortcut_coset);
}

TEST_CASE("subspace enumeration counts are gaussian binomials") {
  CHECK(all_subspaces(2, 4, 1).size() == 15);
  CHECK(all_subspaces(3, 4, 1).size() == 40);
  CHECK(all_subspaces(2, 4, 0).size() == 1);
  for (int p : {2, 3}) {
    for (int d = 0; d <= 5; ++d) {
      if (p == 3 && d > 4) continue;  // keep runtime flat
      for (int k = 0; k <= d; ++k) {
        CHECK(static_cast<long long>(all_subspaces(p, d, k).size()) ==
              gaussian_binomial(d, k, p));
      }
    }
  }
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
}

TEST_CASE("subspaces come out canonical and distinct") {
  auto subs = all_subspaces(3, 4, 2);
  std::set<std::vector<GFpVector>> seen;
  for (const SubspaceGF& S : subs) {
    CHECK(S.rows == gf_rref(S.rows));
    CHECK(seen.insert(S.rows).second);
    for (const GFpVector& r : S.rows) CHECK(S.contains(r));
    CHECK(static_cast<int>(S.enumerate().size()) == 9);
  }
}

TEST_CASE("rref and kernel behave on a known matrix") {
  // rows over GF(3)
  std::vector<GFpVector> rows = {GFpVector{3, {1, 2, 0, 1}}, GFpVector{3, {0, 0, 1, 2}},
                                 GFpVector{3, {1, 2, 1, 0}}};
  auto rref = gf_rref(rows);
  CHECK(rref.size() == 2);
  CHECK(rref[0] == GFpVector{3, {1, 2, 0, 1}});
  CHECK(rref[1] == GFpVector{3, {0, 0, 1, 2}});
  auto kernel = gf_kernel(rows, 3, 4);
  CHECK(kernel.size() == 2);
  for (const GFpVector& k : kernel) {
    for (const GFpVector& r : rows) CHECK(gfp_dot(r, k) == 0);
  }
}

TEST_CASE("subgroup of a subspace and back") {
  GroupPtr G = complex_1q();
  SpacePtr V = space_mod_K(G);
  const Subgroup& N = V->source()->modulus();

  SubspaceGF zero{2, 3, {}};
  CHECK(subgroup_of_subspace(*V, zero).members == N.members);

  std::vector<GFpVector> all_units;
  for (int i = 0; i < 3; ++i) all_units.push_back(gfp_unit(2, 3, i));
  SubspaceGF full = make_subspace(2, 3, all_units);
  CHECK(subgroup_of_subspace(*V, full).order() == G->order());

  // bijectivity over the whole interval [N, G]
  for (int k = 0; k <= 3; ++k) {
    for (const SubspaceGF& S : all_subspaces(2, 3, k)) {
      Subgroup sub = subgroup_of_subspace(*V, S);
      CHECK(sub.order() == N.order() * (1 << k));
      CHECK(subspace_of_subgroup(*V, sub) == S);
    }
  }

  // a subgroup that is not a union of cosets is rejected
  CHECK_THROWS_AS(subspace_of_subgroup(*V, make_subgroup(G, {0})), Error);
}
