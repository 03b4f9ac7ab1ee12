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

#include <memory>
#include <string>
#include <vector>

#include "gpolar/errors.hpp"

namespace gpolar {

/// Index into the canonical element table of its group. Id 0 is the identity.
using ElementId = int;

bool is_prime(int p);
void require_prime(int p);

/// A finite group given by its full multiplication table. Immutable after
/// construction; all group axioms are checked exhaustively on ingestion.
class FiniteGroup {
 public:
  /// Dense tables only make sense at desk scale; larger inputs are rejected.
  static constexpr int kMaxOrder = 4096;

  /// `table[a][b]` is the id of a*b. Labels default to "g<i>".
  /// Throws SizeError / AxiomError with a witness on invalid input.
  explicit FiniteGroup(std::vector<std::vector<ElementId>> table,
                       std::vector<std::string> labels = {});

  int order() const noexcept { return order_; }
  ElementId identity() const noexcept { return 0; }

  ElementId mul(ElementId a, ElementId b) const {
    check_id(a);
    check_id(b);
    return table_[static_cast<size_t>(a) * order_ + b];
  }
  ElementId inv(ElementId a) const {
    check_id(a);
    return inv_[a];
  }

  /// x^m for any integer m (negative exponents via the inverse).
  ElementId power(ElementId x, long long m) const;

  /// aba^{-1}b^{-1}
  ElementId commutator(ElementId a, ElementId b) const;

  bool commutes(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }

  /// Smallest k >= 1 with x^k = e.
  int element_order(ElementId x) const;

  const std::string& label(ElementId a) const {
    check_id(a);
    return labels_[a];
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  void check_id(ElementId a) const {
    if (a < 0 || a >= order_) {
      throw InvalidElementError("element id " + std::to_string(a) +
                                " out of range for group of order " + std::to_string(order_));
    }
  }
  void validate() const;

  int order_ = 0;
  std::vector<ElementId> table_;  // row-major order_ x order_
  std::vector<ElementId> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::vector<std::vector<ElementId>> table,
                    std::vector<std::string> labels = {});

/// A subgroup, stored as the sorted id set of its members.
struct Subgroup {
  GroupPtr parent;
  std::vector<ElementId> members;  // sorted ascending, unique, contains 0

  int order() const noexcept { return static_cast<int>(members.size()); }
  bool contains(ElementId x) const;
  bool operator==(const Subgroup& other) const { return members == other.members; }
};

/// Validates that `members` really is a subgroup (identity, closure, Lagrange).
Subgroup make_subgroup(GroupPtr parent, std::vector<ElementId> members);

/// Smallest subgroup containing `seed` (closure iteration). Empty seed gives {e}.
Subgroup generated_subgroup(const GroupPtr& G, const std::vector<ElementId>& seed);

/// Subgroup generated by all commutators [a,b].
Subgroup derived_subgroup(const GroupPtr& G);

/// Elements commuting with the whole group.
Subgroup center(const GroupPtr& G);

/// { x^m | x in M } as a sorted id set.
std::vector<ElementId> power_set(const FiniteGroup& G, const std::vector<ElementId>& M,
                                 long long m);

/// The subgroup generated by the derived subgroup together with all p-th powers.
Subgroup n0_subgroup(const GroupPtr& G, int p);

/// True iff xSx^{-1} = S for all x.
bool is_normal(const Subgroup& S);

/// Central elements of order <= 2.
Subgroup torsion_center_K(const GroupPtr& G);

/// True iff x^m = e for every member of S.
bool exponent_divides(const Subgroup& S, long long m);

/// Re-index a subgroup as a standalone group (labels carried over).
GroupPtr subgroup_to_group(const Subgroup& S);

/// Cosets of a normal subgroup, with the induced multiplication. Cosets are
/// ordered by their smallest member id, which is also the representative, so
/// coset 0 is the modulus itself.
class FactorGroup {
 public:
  /// Throws NormalityError if the modulus is not normal. The induced
  /// multiplication is asserted representative-independent over all pairs.
  explicit FactorGroup(Subgroup modulus);

  const GroupPtr& parent_ptr() const noexcept { return modulus_.parent; }
  const FiniteGroup& parent() const noexcept { return *modulus_.parent; }
  const Subgroup& modulus() const noexcept { return modulus_; }

  int size() const noexcept { return static_cast<int>(cosets_.size()); }
  int coset_of(ElementId x) const;
  ElementId rep(int coset) const;
  const std::vector<ElementId>& members(int coset) const;

  int mul(int u, int v) const;
  int inv(int u) const;
  int power(int u, long long m) const;
  int identity_coset() const noexcept { return 0; }

  bool commutative() const;

 private:
  void check_coset(int c) const;

  Subgroup modulus_;
  std::vector<std::vector<ElementId>> cosets_;
  std::vector<int> coset_of_;
};

using FactorPtr = std::shared_ptr<const FactorGroup>;

FactorPtr make_factor_group(Subgroup modulus);

}  // namespace gpolar
