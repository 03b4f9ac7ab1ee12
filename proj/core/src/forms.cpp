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

#include "gpolar/forms.hpp"

#include <algorithm>

namespace gpolar {

const char* to_string(CondStatus s) {
  switch (s) {
    case CondStatus::holds: return "holds";
    case CondStatus::fails: return "fails";
    case CondStatus::not_applicable: return "n/a";
  }
  return "?";
}

bool ConditionReport::holds_through(int k) const {
  for (int i = 1; i <= k; ++i) {
    if (cond(i) != CondStatus::holds) return false;
  }
  return true;
}

int ConditionReport::first_failure(int k) const {
  for (int i = 1; i <= k; ++i) {
    if (cond(i) != CondStatus::holds) return i;
  }
  return 0;
}

ConditionReport check_conditions(const GroupPtr& G, const Subgroup& N, int p) {
  require_prime(p);
  if (N.parent != G) throw Error("subgroup belongs to a different group");
  ConditionReport rep;
  rep.p = p;
  const int n = G->order();

  // Condition 1: N normal, G' <= N, G^(p) <= N. Containment of every
  // commutator and every p-th power is equivalent and gives first witnesses.
  rep.status[0] = CondStatus::holds;
  for (int a = 0; a < n && rep.status[0] == CondStatus::holds; ++a) {
    for (int b = 0; b < n; ++b) {
      ElementId c = G->commutator(a, b);
      if (!N.contains(c)) {
        rep.status[0] = CondStatus::fails;
        rep.witness[0] = ConditionWitness{"commutator [" + std::to_string(a) + "," +
                                              std::to_string(b) + "] = " + std::to_string(c) +
                                              " lies outside N",
                                          {a, b, c}};
        break;
      }
    }
  }
  if (rep.status[0] == CondStatus::holds) {
    for (int x = 0; x < n; ++x) {
      ElementId xp = G->power(x, p);
      if (!N.contains(xp)) {
        rep.status[0] = CondStatus::fails;
        rep.witness[0] = ConditionWitness{"p-th power " + std::to_string(x) + "^" +
                                              std::to_string(p) + " = " + std::to_string(xp) +
                                              " lies outside N",
                                          {x, xp}};
        break;
      }
    }
  }
  if (rep.status[0] == CondStatus::holds && !is_normal(N)) {
    // cannot happen once G' <= N; kept as a belt for corrupted inputs
    rep.status[0] = CondStatus::fails;
    rep.witness[0] = ConditionWitness{"N is not normal", {}};
  }

  // Condition 2: |G'| = p.
  Subgroup derived = derived_subgroup(G);
  if (derived.order() == p) {
    rep.status[1] = CondStatus::holds;
  } else {
    rep.status[1] = CondStatus::fails;
    rep.witness[1] = ConditionWitness{
        "commutator subgroup has order " + std::to_string(derived.order()) + ", not " +
            std::to_string(p),
        derived.members};
  }

  // Condition 3: N <= Z(G).
  rep.status[2] = CondStatus::holds;
  for (ElementId a : N.members) {
    bool central = true;
    for (int y = 0; y < n; ++y) {
      if (G->mul(a, y) != G->mul(y, a)) {
        rep.status[2] = CondStatus::fails;
        rep.witness[2] = ConditionWitness{"member " + std::to_string(a) +
                                              " of N does not commute with " + std::to_string(y),
                                          {a, y}};
        central = false;
        break;
      }
    }
    if (!central) break;
  }

  // Conditions 4 and 5 concern squares; only meaningful for p = 2.
  if (p != 2) {
    rep.status[3] = CondStatus::not_applicable;
    rep.status[4] = CondStatus::not_applicable;
    return rep;
  }
  rep.status[3] = CondStatus::holds;
  for (int x = 0; x < n; ++x) {
    ElementId sq = G->mul(x, x);
    if (!derived.contains(sq)) {
      rep.status[3] = CondStatus::fails;
      rep.witness[3] = ConditionWitness{"square of " + std::to_string(x) + " equals " +
                                            std::to_string(sq) + ", outside G'",
                                        {x, sq}};
      break;
    }
  }
  rep.status[4] = CondStatus::holds;
  for (ElementId a : N.members) {
    if (G->mul(a, a) != 0) {
      rep.status[4] = CondStatus::fails;
      rep.witness[4] = ConditionWitness{
          "member " + std::to_string(a) + " of N has order > 2", {a}};
      break;
    }
  }
  return rep;
}

int GeneratorChoice::psi_of(ElementId x) const {
  for (const auto& [id, value] : psi) {
    if (id == x) return value;
  }
  throw Error("element " + std::to_string(x) + " is not in the commutator subgroup");
}

GeneratorChoice choose_generator(const GroupPtr& G, int p, std::optional<int> index) {
  require_prime(p);
  Subgroup derived = derived_subgroup(G);
  if (derived.order() != p) {
    throw ConditionError(2, "Condition 2 fails: commutator subgroup has order " +
                                std::to_string(derived.order()) + ", not " + std::to_string(p));
  }
  std::vector<ElementId> candidates;
  for (ElementId x : derived.members) {
    if (x != 0) candidates.push_back(x);
  }
  ElementId g;
  if (index.has_value()) {
    if (*index < 0 || *index >= static_cast<int>(candidates.size())) {
      throw Error("generator index " + std::to_string(*index) + " out of range 0.." +
                  std::to_string(candidates.size() - 1));
    }
    g = candidates[*index];
  } else {
    g = candidates.front();
  }
  GeneratorChoice gc;
  gc.g = g;
  gc.p = p;
  ElementId acc = 0;
  for (int m = 0; m < p; ++m) {
    gc.psi.emplace_back(acc, m);
    acc = G->mul(acc, g);
  }
  if (acc != 0) throw InconsistencyError("generator does not have order p");
  std::sort(gc.psi.begin(), gc.psi.end());
  return gc;
}

AlternatingForm::AlternatingForm(SpacePtr space, GeneratorChoice gc) {
  space_ = std::move(space);
  const GFpVectorSpace& V = *space_;
  const FactorGroup& F = *V.source();
  const GroupPtr& G = F.parent_ptr();
  if (gc.p != V.p()) throw Error("generator choice and space use different primes");

  ConditionReport rep = check_conditions(G, F.modulus(), V.p());
  if (!rep.holds_through(3)) {
    int bad = rep.first_failure(3);
    std::string note = rep.witness_of(bad) ? rep.witness_of(bad)->note : "";
    throw ConditionError(bad, "Condition " + std::to_string(bad) +
                                  " fails; no commutator form on this factor space. " + note);
  }
  gc_ = std::move(gc);

  const int d = V.dim();
  gram_.assign(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ElementId xi = F.rep(V.basis()[i]);
      ElementId xj = F.rep(V.basis()[j]);
      gram_[i][j] = gc_->psi_of(G->commutator(xi, xj));
    }
  }
  // gram must be alternating
  for (int i = 0; i < d; ++i) {
    if (gram_[i][i] != 0) throw InconsistencyError("gram diagonal is not zero");
    for (int j = 0; j < d; ++j) {
      if ((gram_[i][j] + gram_[j][i]) % V.p() != 0) {
        throw InconsistencyError("gram matrix is not antisymmetric");
      }
    }
  }
  // well defined on cosets and consistent with bilinear evaluation: check
  // every pair of group elements, not just representatives
  const int n = G->order();
  for (int x = 0; x < n; ++x) {
    const GFpVector& vx = V.coord_of(F.coset_of(x));
    for (int y = 0; y < n; ++y) {
      const GFpVector& vy = V.coord_of(F.coset_of(y));
      if (gc_->psi_of(G->commutator(x, y)) != eval(vx, vy)) {
        throw InconsistencyError("commutator form is not well defined at pair (" +
                                 std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
}

AlternatingForm AlternatingForm::from_gram(SpacePtr space, std::optional<GeneratorChoice> gc,
                                           std::vector<std::vector<int>> gram) {
  AlternatingForm f;
  f.space_ = std::move(space);
  f.gc_ = std::move(gc);
  f.gram_ = std::move(gram);
  const int d = f.space_->dim();
  if (static_cast<int>(f.gram_.size()) != d) throw Error("gram matrix has wrong shape");
  for (const auto& row : f.gram_) {
    if (static_cast<int>(row.size()) != d) throw Error("gram matrix has wrong shape");
  }
  return f;
}

int AlternatingForm::eval(const GFpVector& v, const GFpVector& w) const {
  const int p = space_->p();
  const int d = space_->dim();
  if (v.dim() != d || w.dim() != d) throw Error("form evaluation shape mismatch");
  long long acc = 0;
  for (int i = 0; i < d; ++i) {
    if (v.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      acc += static_cast<long long>(v.c[i]) * w.c[j] % p * gram_[i][j];
    }
  }
  return static_cast<int>(((acc % p) + p) % p);
}

int AlternatingForm::eval_cosets(int cu, int cv) const {
  return eval(space_->coord_of(cu), space_->coord_of(cv));
}

SubspaceGF AlternatingForm::radical() const {
  const int d = space_->dim();
  std::vector<GFpVector> rows;
  rows.reserve(d);
  for (int i = 0; i < d; ++i) {
    rows.push_back(GFpVector{space_->p(), gram_[i]});
  }
  return SubspaceGF{space_->p(), d, gf_kernel(rows, space_->p(), d)};
}

std::pair<bool, bool> commute_iff_orthogonal(const AlternatingForm& form, ElementId x,
                                             ElementId y) {
  const FactorGroup& F = *form.space().source();
  const FiniteGroup& G = F.parent();
  bool commute = G.commutes(x, y);
  bool orthogonal = form.eval_cosets(F.coset_of(x), F.coset_of(y)) == 0;
  return {commute, orthogonal};
}

QuadraticFormGF2::QuadraticFormGF2(SpacePtr space) : space_(std::move(space)) {
  const GFpVectorSpace& V = *space_;
  if (V.p() != 2) {
    throw ConditionError(4, "quadratic form requires p = 2");
  }
  const FactorGroup& F = *V.source();
  const GroupPtr& G = F.parent_ptr();
  ConditionReport rep = check_conditions(G, F.modulus(), 2);
  if (!rep.holds_through(5)) {
    int bad = rep.first_failure(5);
    std::string note = rep.witness_of(bad) ? rep.witness_of(bad)->note : "";
    throw ConditionError(bad, "Condition " + std::to_string(bad) +
                                  " fails; no quadratic form on this factor space. " + note);
  }
  gc_ = choose_generator(G, 2);

  values_.assign(static_cast<size_t>(V.num_vectors()), -1);
  // Q(xN) = psi(x^2); assert the value is the same for every representative
  for (int x = 0; x < G->order(); ++x) {
    int coset = F.coset_of(x);
    long long idx = vector_index(V.coord_of(coset));
    int value = gc_.psi_of(G->mul(x, x));
    if (values_[idx] == -1) {
      values_[idx] = value;
    } else if (values_[idx] != value) {
      throw InconsistencyError("quadratic form is not well defined on coset " +
                               std::to_string(coset));
    }
  }
}

int QuadraticFormGF2::eval(const GFpVector& v) const {
  if (v.dim() != space_->dim()) throw Error("quadratic form shape mismatch");
  return values_[static_cast<size_t>(vector_index(v))];
}

int QuadraticFormGF2::eval_coset(int coset) const { return eval(space_->coord_of(coset)); }

AlternatingForm QuadraticFormGF2::polar_form() const {
  const GFpVectorSpace& V = *space_;
  const int d = V.dim();
  std::vector<std::vector<int>> gram(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      GFpVector ei = gfp_unit(2, d, i);
      GFpVector ej = gfp_unit(2, d, j);
      gram[i][j] = (eval(gfp_add(ei, ej)) + eval(ei) + eval(ej)) % 2;
    }
  }
  return AlternatingForm::from_gram(space_, gc_, std::move(gram));
}

const char* to_string(AdmissibleLevel level) {
  switch (level) {
    case AdmissibleLevel::vector_space: return "vector_space";
    case AdmissibleLevel::bilinear: return "bilinear";
    case AdmissibleLevel::quadratic: return "quadratic";
  }
  return "?";
}

namespace {

// Subgroups N0 <= N with N/N0 inside `top` (a subspace of V0 = G/N0),
// smallest first, canonical within one dimension.
std::vector<Subgroup> subgroups_under(const GFpVectorSpace& V0, const SubspaceGF& top) {
  std::vector<Subgroup> out;
  for (int k = 0; k <= top.dim(); ++k) {
    for (const SubspaceGF& small : all_subspaces(V0.p(), top.dim(), k)) {
      // expand coordinates relative to top's rows into ambient coordinates
      std::vector<GFpVector> rows;
      for (const GFpVector& r : small.rows) {
        GFpVector v = gfp_zero(V0.p(), V0.dim());
        for (int i = 0; i < top.dim(); ++i) {
          if (r.c[i] != 0) v = gfp_add(v, gfp_scale(r.c[i], top.rows[i]));
        }
        rows.push_back(std::move(v));
      }
      out.push_back(subgroup_of_subspace(V0, make_subspace(V0.p(), V0.dim(), std::move(rows))));
    }
  }
  return out;
}

}  // namespace

std::vector<Subgroup> enumerate_admissible_N(const GroupPtr& G, int p, AdmissibleLevel level) {
  require_prime(p);
  Subgroup N0 = n0_subgroup(G, p);
  GFpVectorSpace V0(make_factor_group(N0), p);

  SubspaceGF top{p, V0.dim(), {}};
  switch (level) {
    case AdmissibleLevel::vector_space: {
      std::vector<GFpVector> everything;
      for (int i = 0; i < V0.dim(); ++i) everything.push_back(gfp_unit(p, V0.dim(), i));
      top = make_subspace(p, V0.dim(), std::move(everything));
      break;
    }
    case AdmissibleLevel::bilinear: {
      Subgroup derived = derived_subgroup(G);
      if (derived.order() != p) {
        throw ConditionError(2, "Condition 2 fails: commutator subgroup has order " +
                                    std::to_string(derived.order()) + ", not " +
                                    std::to_string(p));
      }
      Subgroup Z = center(G);
      bool n0_central = std::includes(Z.members.begin(), Z.members.end(), N0.members.begin(),
                                      N0.members.end());
      if (!n0_central) return {};  // the interval [N0, Z(G)] is empty
      top = subspace_of_subgroup(V0, Z);
      break;
    }
    case AdmissibleLevel::quadratic: {
      if (p != 2) {
        throw ConditionError(4, "quadratic level requires p = 2");
      }
      Subgroup derived = derived_subgroup(G);
      if (derived.order() != p) {
        throw ConditionError(2, "Condition 2 fails: commutator subgroup has order " +
                                    std::to_string(derived.order()) + ", not " +
                                    std::to_string(p));
      }
      ConditionReport rep = check_conditions(G, N0, 2);
      if (rep.cond(4) != CondStatus::holds) {
        throw ConditionError(4, "Condition 4 fails: some square lies outside G'");
      }
      Subgroup K = torsion_center_K(G);
      bool n0_in_k = std::includes(K.members.begin(), K.members.end(), N0.members.begin(),
                                   N0.members.end());
      if (!n0_in_k) return {};
      top = subspace_of_subgroup(V0, K);
      break;
    }
  }

  std::vector<Subgroup> result = subgroups_under(V0, top);
  const int limit = level == AdmissibleLevel::vector_space ? 1
                    : level == AdmissibleLevel::bilinear   ? 3
                                                           : 5;
  for (const Subgroup& N : result) {
    ConditionReport rep = check_conditions(G, N, p);
    if (!rep.holds_through(limit)) {
      throw InconsistencyError("enumerated modulus fails re-verification");
    }
  }
  return result;
}

}  // namespace gpolar
