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

#include "gpolar/gfp_space.hpp"

#include <algorithm>

namespace gpolar {

namespace {

int mod(long long a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

void check_same_shape(const GFpVector& a, const GFpVector& b) {
  if (a.p != b.p || a.dim() != b.dim()) {
    throw Error("GF(p) vector shape mismatch");
  }
}

}  // namespace

bool GFpVector::is_zero() const {
  for (int x : c) {
    if (x != 0) return false;
  }
  return true;
}

bool GFpVector::operator<(const GFpVector& other) const {
  if (p != other.p) return p < other.p;
  return c < other.c;
}

GFpVector gfp_zero(int p, int dim) { return GFpVector{p, std::vector<int>(dim, 0)}; }

GFpVector gfp_unit(int p, int dim, int i) {
  GFpVector v = gfp_zero(p, dim);
  v.c.at(i) = 1;
  return v;
}

GFpVector gfp_add(const GFpVector& a, const GFpVector& b) {
  check_same_shape(a, b);
  GFpVector out = a;
  for (int i = 0; i < a.dim(); ++i) out.c[i] = mod(a.c[i] + b.c[i], a.p);
  return out;
}

GFpVector gfp_sub(const GFpVector& a, const GFpVector& b) {
  check_same_shape(a, b);
  GFpVector out = a;
  for (int i = 0; i < a.dim(); ++i) out.c[i] = mod(a.c[i] - b.c[i], a.p);
  return out;
}

GFpVector gfp_scale(int m, const GFpVector& v) {
  GFpVector out = v;
  for (int i = 0; i < v.dim(); ++i) out.c[i] = mod(static_cast<long long>(m) * v.c[i], v.p);
  return out;
}

int gfp_dot(const GFpVector& a, const GFpVector& b) {
  check_same_shape(a, b);
  long long acc = 0;
  for (int i = 0; i < a.dim(); ++i) acc += static_cast<long long>(a.c[i]) * b.c[i];
  return mod(acc, a.p);
}

long long vector_index(const GFpVector& v) {
  long long idx = 0;
  for (int x : v.c) idx = idx * v.p + x;
  return idx;
}

GFpVector vector_at(int p, int dim, long long index) {
  GFpVector v = gfp_zero(p, dim);
  for (int i = dim - 1; i >= 0; --i) {
    v.c[i] = static_cast<int>(index % p);
    index /= p;
  }
  if (index != 0) throw Error("vector index out of range");
  return v;
}

int mod_inverse(int a, int p) {
  a = mod(a, p);
  if (a == 0) throw Error("zero has no inverse mod p");
  // p is prime and tiny here; a^(p-2) by repeated multiplication
  int acc = 1;
  for (int i = 0; i < p - 2; ++i) acc = mod(static_cast<long long>(acc) * a, p);
  return acc;
}

std::vector<GFpVector> gf_rref(std::vector<GFpVector> rows) {
  if (rows.empty()) return rows;
  const int p = rows[0].p;
  const int ncols = rows[0].dim();
  for (const auto& r : rows) {
    if (r.p != p || r.dim() != ncols) throw Error("rref rows have mixed shapes");
  }
  int pivot_row = 0;
  for (int col = 0; col < ncols && pivot_row < static_cast<int>(rows.size()); ++col) {
    int found = -1;
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r].c[col] != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(rows[pivot_row], rows[found]);
    int inv = mod_inverse(rows[pivot_row].c[col], p);
    rows[pivot_row] = gfp_scale(inv, rows[pivot_row]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != pivot_row && rows[r].c[col] != 0) {
        rows[r] = gfp_sub(rows[r], gfp_scale(rows[r].c[col], rows[pivot_row]));
      }
    }
    ++pivot_row;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const GFpVector& r) { return r.is_zero(); }),
             rows.end());
  return rows;
}

GFpVector gf_reduce(const std::vector<GFpVector>& rref_rows, GFpVector v) {
  for (const auto& row : rref_rows) {
    int pivot = -1;
    for (int i = 0; i < row.dim(); ++i) {
      if (row.c[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot >= 0 && v.c[pivot] != 0) {
      v = gfp_sub(v, gfp_scale(v.c[pivot], row));
    }
  }
  return v;
}

std::vector<GFpVector> gf_kernel(const std::vector<GFpVector>& rows, int p, int ncols) {
  std::vector<GFpVector> rref = gf_rref(rows);
  std::vector<int> pivots;
  std::vector<char> is_pivot(ncols, 0);
  for (const auto& row : rref) {
    for (int i = 0; i < ncols; ++i) {
      if (row.c[i] != 0) {
        pivots.push_back(i);
        is_pivot[i] = 1;
        break;
      }
    }
  }
  std::vector<GFpVector> basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    GFpVector v = gfp_zero(p, ncols);
    v.c[free_col] = 1;
    for (size_t r = 0; r < rref.size(); ++r) {
      v.c[pivots[r]] = mod(-rref[r].c[free_col], p);
    }
    basis.push_back(std::move(v));
  }
  return gf_rref(std::move(basis));
}

bool SubspaceGF::contains(const GFpVector& v) const {
  return gf_reduce(rows, v).is_zero();
}

bool SubspaceGF::contains_subspace(const SubspaceGF& other) const {
  for (const auto& r : other.rows) {
    if (!contains(r)) return false;
  }
  return true;
}

std::vector<GFpVector> SubspaceGF::enumerate() const {
  const int k = dim();
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  std::vector<GFpVector> out;
  out.reserve(total);
  for (long long idx = 0; idx < total; ++idx) {
    GFpVector coeffs = gpolar::vector_at(p, k, idx);
    GFpVector v = gfp_zero(p, ambient_dim);
    for (int i = 0; i < k; ++i) {
      if (coeffs.c[i] != 0) v = gfp_add(v, gfp_scale(coeffs.c[i], rows[i]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool SubspaceGF::operator<(const SubspaceGF& other) const {
  if (dim() != other.dim()) return dim() < other.dim();
  return rows < other.rows;
}

SubspaceGF make_subspace(int p, int ambient_dim, std::vector<GFpVector> spanning) {
  for (const auto& v : spanning) {
    if (v.p != p || v.dim() != ambient_dim) throw Error("subspace spanning vector shape mismatch");
  }
  return SubspaceGF{p, ambient_dim, gf_rref(std::move(spanning))};
}

SubspaceGF subspace_sum(const SubspaceGF& a, const SubspaceGF& b) {
  if (a.p != b.p || a.ambient_dim != b.ambient_dim) throw Error("subspace sum shape mismatch");
  std::vector<GFpVector> rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return make_subspace(a.p, a.ambient_dim, std::move(rows));
}

std::vector<SubspaceGF> all_subspaces(int p, int dim, int k) {
  if (k < 0 || k > dim) throw Error("subspace dimension out of range");
  std::vector<SubspaceGF> out;
  if (k == 0) {
    out.push_back(SubspaceGF{p, dim, {}});
    return out;
  }
  // choose pivot columns c_1 < ... < c_k, then fill the free entries:
  // entry (i, j) is free iff j > c_i and j is not a pivot column.
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<char> is_pivot(dim, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < k; ++i) {
      for (int j = pivots[i] + 1; j < dim; ++j) {
        if (!is_pivot[j]) free_cells.emplace_back(i, j);
      }
    }
    long long fills = 1;
    for (size_t i = 0; i < free_cells.size(); ++i) fills *= p;
    for (long long f = 0; f < fills; ++f) {
      std::vector<GFpVector> rows(k, gfp_zero(p, dim));
      for (int i = 0; i < k; ++i) rows[i].c[pivots[i]] = 1;
      long long rest = f;
      for (size_t cell = free_cells.size(); cell-- > 0;) {
        rows[free_cells[cell].first].c[free_cells[cell].second] = static_cast<int>(rest % p);
        rest /= p;
      }
      out.push_back(SubspaceGF{p, dim, std::move(rows)});
    }
    // next pivot combination, lexicographic
    int i = k - 1;
    while (i >= 0 && pivots[i] == dim - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

long long gaussian_binomial(int dim, int k, int p) {
  if (k < 0 || k > dim) return 0;
  if (k == 0) return 1;
  auto power = [&](int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
  };
  // [d k]_p = [d-1 k-1]_p * (p^d - 1) / (p^k - 1), exact at each step
  return gaussian_binomial(dim - 1, k - 1, p) * (power(dim) - 1) / (power(k) - 1);
}

GFpVectorSpace::GFpVectorSpace(FactorPtr source, int p) : source_(std::move(source)), p_(p) {
  require_prime(p);
  if (!source_) throw Error("vector space needs a factor group");
  const FactorGroup& F = *source_;
  if (!F.commutative()) {
    throw ConditionError(1,
                         "Condition 1 fails: factor group is not commutative "
                         "(commutator subgroup not contained in the modulus)");
  }
  for (int c = 0; c < F.size(); ++c) {
    if (F.power(c, p) != F.identity_coset()) {
      throw ConditionError(1,
                           "Condition 1 fails: coset " + std::to_string(c) +
                               " does not have order dividing p = " + std::to_string(p) +
                               " (p-th powers not contained in the modulus)");
    }
  }

  const int m = F.size();
  coords_.assign(m, GFpVector{});
  std::vector<char> known(m, 0);
  std::vector<int> span_list;
  coords_[0] = gfp_zero(p_, 0);
  known[0] = 1;
  span_list.push_back(0);

  for (int c = 0; c < m; ++c) {
    if (known[c]) continue;
    const int i = static_cast<int>(basis_.size());
    basis_.push_back(c);
    // widen existing coordinates by one slot
    for (int s : span_list) coords_[s].c.push_back(0);
    std::vector<int> old_span = span_list;
    for (int coeff = 1; coeff < p_; ++coeff) {
      int cm = F.power(c, coeff);
      for (int s : old_span) {
        int nc = F.mul(cm, s);
        if (known[nc]) continue;
        GFpVector v = coords_[s];
        v.c[i] = coeff;
        coords_[nc] = std::move(v);
        known[nc] = 1;
        span_list.push_back(nc);
      }
    }
  }
  const int d = static_cast<int>(basis_.size());
  long long expect = 1;
  for (int i = 0; i < d; ++i) expect *= p_;
  if (expect != m || static_cast<int>(span_list.size()) != m) {
    throw InconsistencyError("factor group size is not p^d; basis scan failed");
  }
  for (int c = 0; c < m; ++c) {
    coords_[c].p = p_;
    coords_[c].c.resize(d, 0);
    coset_by_vector_[coords_[c]] = c;
  }
  // coordinates form a group isomorphism; assert it over every pair
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (coords_[F.mul(u, v)] != gfp_add(coords_[u], coords_[v])) {
        throw InconsistencyError("coordinate map is not additive at cosets (" +
                                 std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
  }
}

long long GFpVectorSpace::num_vectors() const {
  long long total = 1;
  for (int i = 0; i < dim(); ++i) total *= p_;
  return total;
}

const GFpVector& GFpVectorSpace::coord_of(int coset) const {
  if (coset < 0 || coset >= static_cast<int>(coords_.size())) {
    throw InvalidElementError("coset index out of range");
  }
  return coords_[coset];
}

int GFpVectorSpace::coset_of_vector(const GFpVector& v) const {
  auto it = coset_by_vector_.find(v);
  if (it == coset_by_vector_.end()) throw Error("vector does not belong to this space");
  return it->second;
}

int GFpVectorSpace::coset_to_word(const GFpVector& v) const {
  if (v.p != p_ || v.dim() != dim()) throw Error("coordinate vector shape mismatch");
  const FactorGroup& F = *source_;
  int w = F.identity_coset();
  for (int i = 0; i < dim(); ++i) {
    w = F.mul(w, F.power(basis_[i], v.c[i]));
  }
  return w;
}

GFpVector GFpVectorSpace::vector_at(long long index) const {
  return gpolar::vector_at(p_, dim(), index);
}

Subgroup subgroup_of_subspace(const GFpVectorSpace& V, const SubspaceGF& S) {
  if (S.p != V.p() || S.ambient_dim != V.dim()) throw Error("subspace does not live in this space");
  const FactorGroup& F = *V.source();
  std::vector<ElementId> members;
  for (const GFpVector& v : S.enumerate()) {
    const auto& coset = F.members(V.coset_of_vector(v));
    members.insert(members.end(), coset.begin(), coset.end());
  }
  return make_subgroup(F.parent_ptr(), std::move(members));
}

SubspaceGF subspace_of_subgroup(const GFpVectorSpace& V, const Subgroup& S) {
  const FactorGroup& F = *V.source();
  if (S.parent != F.parent_ptr()) throw Error("subgroup belongs to a different group");
  for (ElementId a : F.modulus().members) {
    if (!S.contains(a)) throw Error("subgroup does not contain the modulus");
  }
  std::vector<GFpVector> vecs;
  for (ElementId x : S.members) vecs.push_back(V.coord_of(F.coset_of(x)));
  SubspaceGF out = make_subspace(V.p(), V.dim(), std::move(vecs));
  // sanity: |S| = |N| * p^dim(out)
  long long expect = F.modulus().order();
  for (int i = 0; i < out.dim(); ++i) expect *= V.p();
  if (expect != S.order()) {
    throw InconsistencyError("subgroup is not a union of cosets of the modulus");
  }
  return out;
}

}  // namespace gpolar
