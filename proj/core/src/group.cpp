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

#include "gpolar/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gpolar {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) {
    throw SpecError("p = " + std::to_string(p) + " is not prime");
  }
}

FiniteGroup::FiniteGroup(std::vector<std::vector<ElementId>> table,
                         std::vector<std::string> labels) {
  order_ = static_cast<int>(table.size());
  if (order_ == 0) throw AxiomError("empty multiplication table");
  if (order_ > kMaxOrder) {
    throw SizeError("group order " + std::to_string(order_) + " exceeds dense-table bound " +
                    std::to_string(kMaxOrder));
  }
  table_.resize(static_cast<size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a) {
    if (static_cast<int>(table[a].size()) != order_) {
      throw AxiomError("multiplication table row " + std::to_string(a) + " has wrong length");
    }
    for (int b = 0; b < order_; ++b) {
      ElementId v = table[a][b];
      if (v < 0 || v >= order_) {
        throw AxiomError("table entry (" + std::to_string(a) + "," + std::to_string(b) +
                         ") = " + std::to_string(v) + " out of range");
      }
      table_[static_cast<size_t>(a) * order_ + b] = v;
    }
  }

  if (labels.empty()) {
    labels_.reserve(order_);
    for (int i = 0; i < order_; ++i) labels_.push_back("g" + std::to_string(i));
  } else {
    if (static_cast<int>(labels.size()) != order_) {
      throw AxiomError("label list length does not match group order");
    }
    labels_ = std::move(labels);
  }

  validate();

  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (table_[static_cast<size_t>(a) * order_ + b] == 0) {
        inv_[a] = b;
        break;
      }
    }
  }
}

void FiniteGroup::validate() const {
  const int n = order_;
  // identity at id 0
  for (int a = 0; a < n; ++a) {
    if (table_[static_cast<size_t>(0) * n + a] != a || table_[static_cast<size_t>(a) * n + 0] != a) {
      throw AxiomError("id 0 is not a two-sided identity (witness element " + std::to_string(a) +
                       ")");
    }
  }
  // two-sided inverses
  for (int a = 0; a < n; ++a) {
    int left = -1, right = -1;
    for (int b = 0; b < n; ++b) {
      if (table_[static_cast<size_t>(a) * n + b] == 0) right = b;
      if (table_[static_cast<size_t>(b) * n + a] == 0) left = b;
    }
    if (right < 0 || left < 0 || right != left) {
      throw AxiomError("element " + std::to_string(a) + " lacks a two-sided inverse");
    }
  }
  // associativity, exhaustively
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const ElementId ab = table_[static_cast<size_t>(a) * n + b];
      const ElementId* row_ab = &table_[static_cast<size_t>(ab) * n];
      const ElementId* row_b = &table_[static_cast<size_t>(b) * n];
      const ElementId* row_a = &table_[static_cast<size_t>(a) * n];
      for (int c = 0; c < n; ++c) {
        if (row_ab[c] != row_a[row_b[c]]) {
          throw AxiomError("associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

ElementId FiniteGroup::power(ElementId x, long long m) const {
  check_id(x);
  if (m < 0) return power(inv(x), -m);
  ElementId acc = 0;
  ElementId base = x;
  while (m > 0) {
    if (m & 1) acc = mul(acc, base);
    base = mul(base, base);
    m >>= 1;
  }
  return acc;
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const {
  return mul(a, mul(b, mul(inv(a), inv(b))));
}

int FiniteGroup::element_order(ElementId x) const {
  check_id(x);
  ElementId acc = x;
  int k = 1;
  while (acc != 0) {
    acc = mul(acc, x);
    ++k;
  }
  return k;
}

GroupPtr make_group(std::vector<std::vector<ElementId>> table, std::vector<std::string> labels) {
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
}

bool Subgroup::contains(ElementId x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup make_subgroup(GroupPtr parent, std::vector<ElementId> members) {
  if (!parent) throw Error("subgroup without parent group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) {
    throw AxiomError("subgroup must contain the identity");
  }
  const FiniteGroup& G = *parent;
  for (ElementId a : members) {
    for (ElementId b : members) {
      ElementId ab = G.mul(a, b);
      if (!std::binary_search(members.begin(), members.end(), ab)) {
        throw AxiomError("set is not closed under multiplication: " + std::to_string(a) + "*" +
                         std::to_string(b) + " = " + std::to_string(ab) + " is missing");
      }
    }
  }
  if (G.order() % static_cast<int>(members.size()) != 0) {
    throw InconsistencyError("subgroup order does not divide group order");
  }
  return Subgroup{std::move(parent), std::move(members)};
}

Subgroup generated_subgroup(const GroupPtr& G, const std::vector<ElementId>& seed) {
  const int n = G->order();
  std::vector<char> present(n, 0);
  std::vector<ElementId> members;
  std::deque<ElementId> queue;
  auto add = [&](ElementId x) {
    if (!present[x]) {
      present[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  add(0);
  for (ElementId s : seed) {
    if (s < 0 || s >= n) {
      throw InvalidElementError("seed id " + std::to_string(s) + " out of range");
    }
    add(s);
  }
  while (!queue.empty()) {
    ElementId x = queue.front();
    queue.pop_front();
    add(G->inv(x));
    // snapshot size: members added later will pair with x when they are popped
    size_t count = members.size();
    for (size_t i = 0; i < count; ++i) {
      ElementId y = members[i];
      add(G->mul(x, y));
      add(G->mul(y, x));
    }
  }
  return make_subgroup(G, std::move(members));
}

Subgroup derived_subgroup(const GroupPtr& G) {
  const int n = G->order();
  std::set<ElementId> comms;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      comms.insert(G->commutator(a, b));
    }
  }
  return generated_subgroup(G, std::vector<ElementId>(comms.begin(), comms.end()));
}

Subgroup center(const GroupPtr& G) {
  const int n = G->order();
  std::vector<ElementId> members;
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n; ++y) {
      if (G->mul(x, y) != G->mul(y, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return make_subgroup(G, std::move(members));
}

std::vector<ElementId> power_set(const FiniteGroup& G, const std::vector<ElementId>& M,
                                 long long m) {
  std::set<ElementId> out;
  for (ElementId x : M) out.insert(G.power(x, m));
  return std::vector<ElementId>(out.begin(), out.end());
}

Subgroup n0_subgroup(const GroupPtr& G, int p) {
  require_prime(p);
  std::vector<ElementId> all(G->order());
  for (int i = 0; i < G->order(); ++i) all[i] = i;
  std::vector<ElementId> seed = power_set(*G, all, p);
  Subgroup derived = derived_subgroup(G);
  seed.insert(seed.end(), derived.members.begin(), derived.members.end());
  Subgroup result = generated_subgroup(G, seed);
  if (!is_normal(result)) {
    throw InconsistencyError("N0 = <G' u G^(p)> is not normal; input table is not a group");
  }
  return result;
}

bool is_normal(const Subgroup& S) {
  const FiniteGroup& G = *S.parent;
  for (int x = 0; x < G.order(); ++x) {
    for (ElementId s : S.members) {
      ElementId conj = G.mul(G.mul(x, s), G.inv(x));
      if (!S.contains(conj)) return false;
    }
  }
  return true;
}

Subgroup torsion_center_K(const GroupPtr& G) {
  Subgroup Z = center(G);
  std::vector<ElementId> members;
  for (ElementId x : Z.members) {
    if (G->mul(x, x) == 0) members.push_back(x);
  }
  return make_subgroup(G, std::move(members));
}

bool exponent_divides(const Subgroup& S, long long m) {
  if (m < 1) throw Error("exponent test requires m >= 1");
  for (ElementId x : S.members) {
    if (S.parent->power(x, m) != 0) return false;
  }
  return true;
}

GroupPtr subgroup_to_group(const Subgroup& S) {
  const FiniteGroup& G = *S.parent;
  const int m = S.order();
  std::vector<int> index_of(G.order(), -1);
  for (int i = 0; i < m; ++i) index_of[S.members[i]] = i;
  std::vector<std::vector<ElementId>> table(m, std::vector<ElementId>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = G.label(S.members[i]);
    for (int j = 0; j < m; ++j) {
      table[i][j] = index_of[G.mul(S.members[i], S.members[j])];
    }
  }
  return make_group(std::move(table), std::move(labels));
}

FactorGroup::FactorGroup(Subgroup modulus) : modulus_(std::move(modulus)) {
  if (!is_normal(modulus_)) {
    throw NormalityError("modulus of order " + std::to_string(modulus_.order()) +
                         " is not a normal subgroup");
  }
  const FiniteGroup& G = *modulus_.parent;
  const int n = G.order();
  coset_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (coset_of_[x] >= 0) continue;
    std::vector<ElementId> coset;
    coset.reserve(modulus_.members.size());
    for (ElementId a : modulus_.members) coset.push_back(G.mul(x, a));
    std::sort(coset.begin(), coset.end());
    int idx = static_cast<int>(cosets_.size());
    for (ElementId y : coset) {
      if (coset_of_[y] >= 0) {
        throw InconsistencyError("cosets do not partition the group");
      }
      coset_of_[y] = idx;
    }
    cosets_.push_back(std::move(coset));
  }
  // induced multiplication is representative-independent: check every pair
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int via_elements = coset_of_[G.mul(x, y)];
      int via_reps = coset_of_[G.mul(rep(coset_of_[x]), rep(coset_of_[y]))];
      if (via_elements != via_reps) {
        throw InconsistencyError("induced coset multiplication is not well defined at (" +
                                 std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
}

void FactorGroup::check_coset(int c) const {
  if (c < 0 || c >= size()) {
    throw InvalidElementError("coset index " + std::to_string(c) + " out of range");
  }
}

int FactorGroup::coset_of(ElementId x) const {
  if (x < 0 || x >= static_cast<int>(coset_of_.size())) {
    throw InvalidElementError("element id " + std::to_string(x) + " out of range");
  }
  return coset_of_[x];
}

ElementId FactorGroup::rep(int coset) const {
  check_coset(coset);
  return cosets_[coset].front();
}

const std::vector<ElementId>& FactorGroup::members(int coset) const {
  check_coset(coset);
  return cosets_[coset];
}

int FactorGroup::mul(int u, int v) const {
  check_coset(u);
  check_coset(v);
  return coset_of_[parent().mul(rep(u), rep(v))];
}

int FactorGroup::inv(int u) const {
  check_coset(u);
  return coset_of_[parent().inv(rep(u))];
}

int FactorGroup::power(int u, long long m) const {
  check_coset(u);
  return coset_of_[parent().power(rep(u), m)];
}

bool FactorGroup::commutative() const {
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (mul(u, v) != mul(v, u)) return false;
    }
  }
  return true;
}

FactorPtr make_factor_group(Subgroup modulus) {
  return std::make_shared<const FactorGroup>(std::move(modulus));
}

}  // namespace gpolar
