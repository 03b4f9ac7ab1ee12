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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gpolar/gfp_space.hpp"
#include "gpolar/group.hpp"

namespace gpolar {

// The five factorisation conditions, for a group G, candidate modulus N and
// prime p:
//   1. N is a normal subgroup containing G' and all p-th powers.
//   2. the commutator subgroup G' has order p.
//   3. N lies in the centre of G.
//   4. all squares of G lie in G'            (p = 2 only)
//   5. N has exponent 2                      (p = 2 only)

enum class CondStatus { holds, fails, not_applicable };

const char* to_string(CondStatus s);

struct ConditionWitness {
  std::string note;
  std::vector<ElementId> elements;
};

struct ConditionReport {
  int p = 2;
  std::array<CondStatus, 5> status{};
  std::array<std::optional<ConditionWitness>, 5> witness{};

  CondStatus cond(int number) const { return status.at(number - 1); }
  const std::optional<ConditionWitness>& witness_of(int number) const {
    return witness.at(number - 1);
  }
  bool holds(int number) const { return cond(number) == CondStatus::holds; }
  /// Conditions 1..k all hold (not_applicable does not count as holding).
  bool holds_through(int k) const;
  /// First condition in 1..k that is not satisfied, 0 if none.
  int first_failure(int k) const;
};

/// Evaluates each condition independently; never throws. Conditions 4 and 5
/// are reported not_applicable unless p = 2. Witnesses are the first
/// offending element or pair in id order.
ConditionReport check_conditions(const GroupPtr& G, const Subgroup& N, int p);

/// A generator g of the order-p commutator subgroup together with the induced
/// isomorphism psi: G' -> (GF(p), +), psi(g^m) = m.
struct GeneratorChoice {
  ElementId g = 0;
  int p = 2;
  std::vector<std::pair<ElementId, int>> psi;  // sorted by element id

  int psi_of(ElementId x) const;
};

/// Default g is the smallest non-identity id of G'; `index` selects the
/// index-th non-identity member instead. Throws ConditionError(2) if |G'| != p.
GeneratorChoice choose_generator(const GroupPtr& G, int p, std::optional<int> index = {});

/// The alternating bilinear form (v, w) = (xN, yN) |-> psi_g([x, y]) on a
/// factor space, stored via its Gram matrix on the space's basis.
class AlternatingForm {
 public:
  /// Requires Conditions 1-3 for the space's modulus; throws ConditionError
  /// otherwise. Well-definedness over all coset representatives is asserted
  /// exhaustively rather than trusted.
  AlternatingForm(SpacePtr space, GeneratorChoice gc);

  /// Wraps an externally computed Gram matrix (the polar-form path).
  static AlternatingForm from_gram(SpacePtr space, std::optional<GeneratorChoice> gc,
                                   std::vector<std::vector<int>> gram);

  const GFpVectorSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const std::optional<GeneratorChoice>& generator() const noexcept { return gc_; }
  const std::vector<std::vector<int>>& gram() const noexcept { return gram_; }

  int eval(const GFpVector& v, const GFpVector& w) const;
  int eval_cosets(int cu, int cv) const;

  SubspaceGF radical() const;
  bool nondegenerate() const { return radical().dim() == 0; }

 private:
  AlternatingForm() = default;
  SpacePtr space_;
  std::optional<GeneratorChoice> gc_;
  std::vector<std::vector<int>> gram_;
};

/// (x and y commute, their cosets are orthogonal). The two booleans agree;
/// that contract is what the tests exercise.
std::pair<bool, bool> commute_iff_orthogonal(const AlternatingForm& form, ElementId x,
                                             ElementId y);

/// The quadratic form Q(xN) = psi_g(x^2) on a factor space over GF(2).
class QuadraticFormGF2 {
 public:
  /// Requires p = 2 and Conditions 1-5 for the space's modulus; throws
  /// ConditionError naming the first failed condition. Well-definedness is
  /// asserted over every coset representative.
  explicit QuadraticFormGF2(SpacePtr space);

  const GFpVectorSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const GeneratorChoice& generator() const noexcept { return gc_; }
  /// Indexed by vector_index of the coordinate vector.
  const std::vector<int>& values() const noexcept { return values_; }

  int eval(const GFpVector& v) const;
  int eval_coset(int coset) const;

  /// (v, w) |-> Q(v+w) - Q(v) - Q(w); equals the commutator form entrywise.
  AlternatingForm polar_form() const;

 private:
  SpacePtr space_;
  GeneratorChoice gc_;
  std::vector<int> values_;
};

enum class AdmissibleLevel { vector_space, bilinear, quadratic };

const char* to_string(AdmissibleLevel level);

/// All moduli N admitting the requested structure:
///   vector_space: N0 <= N <= G
///   bilinear:     N0 <= N <= Z(G)   (requires Condition 2)
///   quadratic:    N0 <= N <= K      (requires p = 2 and Conditions 2, 4)
/// Returned in order of increasing size, deterministic within a size; every
/// returned N is re-verified through check_conditions.
std::vector<Subgroup> enumerate_admissible_N(const GroupPtr& G, int p, AdmissibleLevel level);

}  // namespace gpolar
