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

#include <map>
#include <vector>

#include "gpolar/group.hpp"

namespace gpolar {

/// Coordinate vector over GF(p), entries kept in 0..p-1.
struct GFpVector {
  int p = 2;
  std::vector<int> c;

  int dim() const noexcept { return static_cast<int>(c.size()); }
  bool is_zero() const;
  bool operator==(const GFpVector&) const = default;
  /// Lexicographic, first coordinate most significant. Usable as map key.
  bool operator<(const GFpVector& other) const;
};

GFpVector gfp_zero(int p, int dim);
GFpVector gfp_unit(int p, int dim, int i);
GFpVector gfp_add(const GFpVector& a, const GFpVector& b);
GFpVector gfp_sub(const GFpVector& a, const GFpVector& b);
/// Scalar action m*v, reduced mod p. This is coordinatewise arithmetic, never
/// a group-word shortcut; in particular 0*v is the zero vector for every v.
GFpVector gfp_scale(int m, const GFpVector& v);
int gfp_dot(const GFpVector& a, const GFpVector& b);

/// Lexicographic index of v among all p^dim vectors, and its inverse.
long long vector_index(const GFpVector& v);
GFpVector vector_at(int p, int dim, long long index);

int mod_inverse(int a, int p);

// Row operations over GF(p). Rows must share p and dimension.
/// Reduced row echelon form; zero rows dropped. Canonical per row space.
std::vector<GFpVector> gf_rref(std::vector<GFpVector> rows);
/// Remainder of v after reduction by RREF rows; zero iff v lies in the span.
GFpVector gf_reduce(const std::vector<GFpVector>& rref_rows, GFpVector v);
/// RREF basis of { v : rows * v = 0 }.
std::vector<GFpVector> gf_kernel(const std::vector<GFpVector>& rows, int p, int ncols);

/// A subspace in canonical reduced-row-echelon form (unique per subspace).
struct SubspaceGF {
  int p = 2;
  int ambient_dim = 0;
  std::vector<GFpVector> rows;  // RREF, no zero rows

  int dim() const noexcept { return static_cast<int>(rows.size()); }
  bool contains(const GFpVector& v) const;
  bool contains_subspace(const SubspaceGF& other) const;
  /// All p^dim member vectors, deterministic order.
  std::vector<GFpVector> enumerate() const;
  bool operator==(const SubspaceGF&) const = default;
  bool operator<(const SubspaceGF& other) const;
};

SubspaceGF make_subspace(int p, int ambient_dim, std::vector<GFpVector> spanning);
SubspaceGF subspace_sum(const SubspaceGF& a, const SubspaceGF& b);

/// Every k-dimensional subspace of GF(p)^dim exactly once, canonical form,
/// deterministic order (pivot columns lexicographic, then free entries).
std::vector<SubspaceGF> all_subspaces(int p, int dim, int k);

long long gaussian_binomial(int dim, int k, int p);

/// A commutative factor group of exponent p, reinterpreted as GF(p)^d with an
/// explicit greedy basis and a coordinate bijection.
class GFpVectorSpace {
 public:
  /// Throws ConditionError(1) if the factor group is not commutative or has
  /// exponent other than p.
  GFpVectorSpace(FactorPtr source, int p);

  int p() const noexcept { return p_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  long long num_vectors() const;
  const FactorPtr& source() const noexcept { return source_; }
  const std::vector<int>& basis() const noexcept { return basis_; }

  const GFpVector& coord_of(int coset) const;
  int coset_of_vector(const GFpVector& v) const;

  /// Product of basis representatives raised to the coordinates, computed by
  /// group words. Inverse of coord_of (asserted by tests, not by trust).
  int coset_to_word(const GFpVector& v) const;

  GFpVector vector_at(long long index) const;

 private:
  FactorPtr source_;
  int p_;
  std::vector<int> basis_;            // coset indices
  std::vector<GFpVector> coords_;     // per coset
  std::map<GFpVector, int> coset_by_vector_;
};

using SpacePtr = std::shared_ptr<const GFpVectorSpace>;

/// The subgroup of the parent group that is the union of the cosets in S.
Subgroup subgroup_of_subspace(const GFpVectorSpace& V, const SubspaceGF& S);

/// Inverse of subgroup_of_subspace on the interval [N, G]: the image of a
/// subgroup containing the modulus, as a subspace.
SubspaceGF subspace_of_subgroup(const GFpVectorSpace& V, const Subgroup& S);

}  // namespace gpolar
