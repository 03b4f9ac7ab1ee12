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

#include "gpolar/pauli.hpp"

#include <unordered_map>

namespace gpolar {

const char* to_string(PauliFlavor flavor) {
  switch (flavor) {
    case PauliFlavor::complex_qubit: return "complex_qubit";
    case PauliFlavor::real_qubit: return "real_qubit";
    case PauliFlavor::qudit_odd: return "qudit_odd";
  }
  return "?";
}

PauliFlavor pauli_flavor_from_string(const std::string& name) {
  if (name == "complex_qubit") return PauliFlavor::complex_qubit;
  if (name == "real_qubit") return PauliFlavor::real_qubit;
  if (name == "qudit_odd") return PauliFlavor::qudit_odd;
  throw SpecError("unknown pauli flavor \"" + name + "\"");
}

int PauliSpec::phase_order() const {
  switch (flavor) {
    case PauliFlavor::complex_qubit: return 4;
    case PauliFlavor::real_qubit: return 2;
    case PauliFlavor::qudit_odd: return p;
  }
  return 0;
}

long long PauliSpec::group_order() const {
  long long order = phase_order();
  for (int i = 0; i < 2 * n; ++i) order *= p;
  return order;
}

void PauliSpec::validate() const {
  require_prime(p);
  if (n < 1) throw SpecError("pauli spec needs n >= 1 tensor factors");
  switch (flavor) {
    case PauliFlavor::complex_qubit:
    case PauliFlavor::real_qubit:
      if (p != 2) {
        throw SpecError(std::string(to_string(flavor)) + " requires p = 2, got p = " +
                        std::to_string(p));
      }
      break;
    case PauliFlavor::qudit_odd:
      if (p == 2) throw SpecError("qudit_odd requires an odd prime, got p = 2");
      break;
  }
}

namespace {

int mod(long long a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

void check_shape(const PauliSpec& spec, const PauliElement& u) {
  if (static_cast<int>(u.xvec.size()) != spec.n || static_cast<int>(u.zvec.size()) != spec.n) {
    throw SpecError("pauli element has wrong number of tensor factors");
  }
  if (u.phase < 0 || u.phase >= spec.phase_order()) {
    throw SpecError("pauli element phase out of range");
  }
  for (int j = 0; j < spec.n; ++j) {
    if (u.xvec[j] < 0 || u.xvec[j] >= spec.p || u.zvec[j] < 0 || u.zvec[j] >= spec.p) {
      throw SpecError("pauli element exponent out of range");
    }
  }
}

// kappa in the phase cocycle: Z X = zeta_phase^kappa X Z per factor.
int kappa(const PauliSpec& spec) {
  return spec.flavor == PauliFlavor::complex_qubit ? 2 : 1;
}

}  // namespace

CycloMatrix::CycloMatrix(int dim, int root_order) : dim_(dim), root_order_(root_order) {
  if (dim < 1 || root_order < 1) throw SpecError("invalid cyclotomic matrix shape");
  entries_.assign(static_cast<size_t>(dim) * dim, -1);
}

CycloMatrix CycloMatrix::matrix_identity(int dim, int root_order) {
  CycloMatrix m(dim, root_order);
  for (int i = 0; i < dim; ++i) m.set(i, i, 0);
  return m;
}

int CycloMatrix::exponent(int r, int c) const {
  int e = at(r, c);
  if (e < 0) throw Error("cyclotomic matrix entry is zero");
  return e;
}

void CycloMatrix::set(int r, int c, int exponent) {
  entries_[static_cast<size_t>(r) * dim_ + c] = mod(exponent, root_order_);
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& rhs) const {
  if (dim_ != rhs.dim_ || root_order_ != rhs.root_order_) {
    throw SpecError("cyclotomic matrix shape mismatch in product");
  }
  CycloMatrix out(dim_, root_order_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      int acc = -1;
      for (int k = 0; k < dim_; ++k) {
        int a = at(r, k);
        int b = rhs.at(k, c);
        if (a < 0 || b < 0) continue;
        if (acc >= 0) {
          throw InconsistencyError(
              "cyclotomic matrix product is not monomial; exact sum of roots unsupported");
        }
        acc = mod(a + b, root_order_);
      }
      out.entries_[static_cast<size_t>(r) * dim_ + c] = acc;
    }
  }
  return out;
}

CycloMatrix CycloMatrix::kron(const CycloMatrix& rhs) const {
  if (root_order_ != rhs.root_order_) throw SpecError("kron root order mismatch");
  CycloMatrix out(dim_ * rhs.dim_, root_order_);
  for (int r1 = 0; r1 < dim_; ++r1) {
    for (int c1 = 0; c1 < dim_; ++c1) {
      int a = at(r1, c1);
      if (a < 0) continue;
      for (int r2 = 0; r2 < rhs.dim_; ++r2) {
        for (int c2 = 0; c2 < rhs.dim_; ++c2) {
          int b = rhs.at(r2, c2);
          if (b < 0) continue;
          out.set(r1 * rhs.dim_ + r2, c1 * rhs.dim_ + c2, a + b);
        }
      }
    }
  }
  return out;
}

CycloMatrix CycloMatrix::scaled(int delta) const {
  CycloMatrix out(*this);
  for (auto& e : out.entries_) {
    if (e >= 0) e = mod(e + delta, root_order_);
  }
  return out;
}

std::string CycloMatrix::key() const {
  std::string s;
  s.reserve(entries_.size() * 3);
  for (int e : entries_) {
    s += std::to_string(e);
    s += ';';
  }
  return s;
}

ElementId pauli_index(const PauliSpec& spec, const PauliElement& u) {
  check_shape(spec, u);
  long long idx = u.phase;
  for (int j = 0; j < spec.n; ++j) idx = idx * spec.p + u.xvec[j];
  for (int j = 0; j < spec.n; ++j) idx = idx * spec.p + u.zvec[j];
  return static_cast<ElementId>(idx);
}

PauliElement pauli_element_of(const PauliSpec& spec, ElementId id) {
  if (id < 0 || id >= spec.group_order()) {
    throw InvalidElementError("pauli element id out of range");
  }
  PauliElement u;
  u.xvec.assign(spec.n, 0);
  u.zvec.assign(spec.n, 0);
  long long rest = id;
  for (int j = spec.n - 1; j >= 0; --j) {
    u.zvec[j] = static_cast<int>(rest % spec.p);
    rest /= spec.p;
  }
  for (int j = spec.n - 1; j >= 0; --j) {
    u.xvec[j] = static_cast<int>(rest % spec.p);
    rest /= spec.p;
  }
  u.phase = static_cast<int>(rest);
  return u;
}

PauliElement pauli_multiply(const PauliSpec& spec, const PauliElement& u, const PauliElement& v) {
  check_shape(spec, u);
  check_shape(spec, v);
  long long crossings = 0;
  for (int j = 0; j < spec.n; ++j) {
    crossings += static_cast<long long>(u.zvec[j]) * v.xvec[j];
  }
  PauliElement w;
  w.phase = mod(static_cast<long long>(u.phase) + v.phase + kappa(spec) * crossings,
                spec.phase_order());
  w.xvec.resize(spec.n);
  w.zvec.resize(spec.n);
  for (int j = 0; j < spec.n; ++j) {
    w.xvec[j] = mod(u.xvec[j] + v.xvec[j], spec.p);
    w.zvec[j] = mod(u.zvec[j] + v.zvec[j], spec.p);
  }
  return w;
}

CycloMatrix to_matrix(const PauliSpec& spec, const PauliElement& u) {
  check_shape(spec, u);
  const int m = spec.flavor == PauliFlavor::complex_qubit ? 4
                : spec.flavor == PauliFlavor::real_qubit  ? 2
                                                          : spec.p;
  // scale embedding the p-th roots used by Z into the phase root group
  const int s = m / spec.p;
  CycloMatrix acc = CycloMatrix::matrix_identity(1, m);
  for (int j = 0; j < spec.n; ++j) {
    CycloMatrix factor(spec.p, m);
    // X^b Z^c maps e_k to zeta_p^(k*c) e_(k+b)
    for (int k = 0; k < spec.p; ++k) {
      factor.set((k + u.xvec[j]) % spec.p, k, s * k * u.zvec[j]);
    }
    acc = acc.kron(factor);
  }
  return acc.scaled(u.phase);
}

namespace {

std::string qubit_letter(int x, int z) {
  if (x == 0 && z == 0) return "I";
  if (x == 1 && z == 0) return "X";
  if (x == 0 && z == 1) return "Z";
  return "Y";
}

std::string qudit_token(int x, int z) {
  if (x == 0 && z == 0) return "I";
  std::string t;
  if (x == 1) t += "X";
  if (x > 1) t += "X" + std::to_string(x);
  if (z == 1) t += "Z";
  if (z > 1) t += "Z" + std::to_string(z);
  return t;
}

}  // namespace

std::string class_label(const PauliSpec& spec, const PauliElement& u) {
  check_shape(spec, u);
  std::string s;
  for (int j = 0; j < spec.n; ++j) {
    if (spec.flavor == PauliFlavor::qudit_odd) {
      if (j > 0) s += ',';
      s += qudit_token(u.xvec[j], u.zvec[j]);
    } else {
      s += qubit_letter(u.xvec[j], u.zvec[j]);
    }
  }
  return s;
}

int sigma_phase(const PauliSpec& spec, const PauliElement& u) {
  check_shape(spec, u);
  if (spec.flavor == PauliFlavor::qudit_odd) return u.phase;
  int y_letters = 0;
  for (int j = 0; j < spec.n; ++j) {
    if (u.xvec[j] == 1 && u.zvec[j] == 1) ++y_letters;
  }
  if (spec.flavor == PauliFlavor::complex_qubit) {
    return mod(u.phase - y_letters, 4);  // sigma_y = i X Z
  }
  return mod(u.phase + y_letters, 2);  // Y = Z X = -X Z
}

std::string label_of(const PauliSpec& spec, const PauliElement& u) {
  const int phase = sigma_phase(spec, u);
  std::string prefix;
  switch (spec.flavor) {
    case PauliFlavor::complex_qubit:
      prefix = (phase == 1) ? "i" : (phase == 2) ? "-" : (phase == 3) ? "-i" : "";
      break;
    case PauliFlavor::real_qubit:
      prefix = (phase == 1) ? "-" : "";
      break;
    case PauliFlavor::qudit_odd:
      if (phase == 1) {
        prefix = "w*";
      } else if (phase > 1) {
        prefix = "w" + std::to_string(phase) + "*";
      }
      break;
  }
  return prefix + class_label(spec, u);
}

GroupPtr build_pauli_group(const PauliSpec& spec) {
  spec.validate();
  const long long order = spec.group_order();
  if (order > FiniteGroup::kMaxOrder) {
    throw SizeError("pauli group order " + std::to_string(order) + " exceeds dense-table bound");
  }
  const int n = static_cast<int>(order);
  std::vector<PauliElement> elements(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    elements[i] = pauli_element_of(spec, i);
    labels[i] = label_of(spec, elements[i]);
  }
  std::vector<std::vector<ElementId>> table(n, std::vector<ElementId>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = pauli_index(spec, pauli_multiply(spec, elements[a], elements[b]));
    }
  }
  return make_group(std::move(table), std::move(labels));
}

long long verify_matrix_oracle(const PauliSpec& spec) {
  spec.validate();
  const long long order = spec.group_order();
  if (order > FiniteGroup::kMaxOrder) {
    throw SizeError("oracle check limited to desk-scale groups");
  }
  const int n = static_cast<int>(order);
  std::vector<PauliElement> elements(n);
  std::vector<CycloMatrix> matrices;
  matrices.reserve(n);
  std::unordered_map<std::string, int> decode;
  decode.reserve(n * 2);
  for (int i = 0; i < n; ++i) {
    elements[i] = pauli_element_of(spec, i);
    matrices.push_back(to_matrix(spec, elements[i]));
    if (!decode.emplace(matrices.back().key(), i).second) {
      throw InconsistencyError("two distinct pauli elements share one matrix");
    }
  }
  long long pairs = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      CycloMatrix product = matrices[a] * matrices[b];
      auto it = decode.find(product.key());
      if (it == decode.end()) {
        throw InconsistencyError("matrix product is not the matrix of any group element");
      }
      int symbolic = pauli_index(spec, pauli_multiply(spec, elements[a], elements[b]));
      if (it->second != symbolic) {
        throw InconsistencyError("symbolic product disagrees with the matrix oracle at pair (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
      }
      ++pairs;
    }
  }
  return pairs;
}

}  // namespace gpolar
