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

#include "gpolar/polar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gpolar {

ProjectivePoint make_projective_point(const GFpVector& v) {
  if (v.is_zero()) throw Error("the zero vector spans no projective point");
  int lead = 0;
  while (v.c[lead] == 0) ++lead;
  return ProjectivePoint{gfp_scale(mod_inverse(v.c[lead], v.p), v)};
}

std::vector<ProjectivePoint> projective_points(int p, int dim) {
  if (dim < 0) throw Error("negative dimension");
  std::set<GFpVector> reps;
  long long total = 1;
  for (int i = 0; i < dim; ++i) total *= p;
  for (long long idx = 1; idx < total; ++idx) {
    reps.insert(make_projective_point(vector_at(p, dim, idx)).rep);
  }
  std::vector<ProjectivePoint> out;
  out.reserve(reps.size());
  for (const auto& r : reps) out.push_back(ProjectivePoint{r});
  return out;
}

std::vector<ProjectivePoint> projective_points(const GFpVectorSpace& V) {
  return projective_points(V.p(), V.dim());
}

namespace {

std::vector<ProjectivePoint> points_of_subspace(const SubspaceGF& S) {
  std::set<GFpVector> reps;
  for (const GFpVector& v : S.enumerate()) {
    if (!v.is_zero()) reps.insert(make_projective_point(v).rep);
  }
  std::vector<ProjectivePoint> out;
  for (const auto& r : reps) out.push_back(ProjectivePoint{r});
  return out;
}

bool subspace_isotropic(const AlternatingForm& form, const SubspaceGF& S) {
  for (size_t i = 0; i < S.rows.size(); ++i) {
    for (size_t j = i + 1; j < S.rows.size(); ++j) {
      if (form.eval(S.rows[i], S.rows[j]) != 0) return false;
    }
  }
  return true;
}

}  // namespace

Flat perp(const AlternatingForm& form, const Flat& F) {
  const GFpVectorSpace& V = form.space();
  const int d = V.dim();
  if (F.subspace.dim() == 0) {
    std::vector<GFpVector> all;
    for (int i = 0; i < d; ++i) all.push_back(gfp_unit(V.p(), d, i));
    return Flat{make_subspace(V.p(), d, std::move(all))};
  }
  // v is orthogonal to S iff (r * gram) . v = 0 for each basis row r
  std::vector<GFpVector> equations;
  for (const GFpVector& r : F.subspace.rows) {
    GFpVector eq = gfp_zero(V.p(), d);
    for (int j = 0; j < d; ++j) {
      long long acc = 0;
      for (int i = 0; i < d; ++i) {
        acc += static_cast<long long>(r.c[i]) * form.gram()[i][j];
      }
      eq.c[j] = static_cast<int>(acc % V.p());
    }
    equations.push_back(std::move(eq));
  }
  return Flat{SubspaceGF{V.p(), d, gf_kernel(equations, V.p(), d)}};
}

PolarSpaceW::PolarSpaceW(AlternatingForm form) : form_(std::move(form)) {
  const GFpVectorSpace& V = form_.space();
  SubspaceGF rad = form_.radical();
  if (rad.dim() != 0) {
    throw DegeneracyError(
        "alternating form is degenerate (radical dimension " + std::to_string(rad.dim()) +
        "); build the polar space of the quotient via quotient_polar_space");
  }
  if (V.dim() % 2 != 0) {
    throw InconsistencyError("non-degenerate alternating form on odd-dimensional space");
  }
  rank_ = V.dim() / 2;
  points_ = projective_points(V);

  iso_flats_.assign(std::max(rank_, 0), {});
  if (rank_ >= 1) {
    for (const ProjectivePoint& P : points_) {
      iso_flats_[0].push_back(Flat{make_subspace(V.p(), V.dim(), {P.rep})});
    }
  }
  for (int k = 2; k <= rank_; ++k) {
    for (const SubspaceGF& S : all_subspaces(V.p(), V.dim(), k)) {
      if (subspace_isotropic(form_, S)) iso_flats_[k - 1].push_back(Flat{S});
    }
  }
}

int PolarSpaceW::point_index(const ProjectivePoint& P) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), P);
  if (it == points_.end() || !(*it == P)) throw Error("not a point of this polar space");
  return static_cast<int>(it - points_.begin());
}

const std::vector<Flat>& PolarSpaceW::iso_flats(int proj_dim) const {
  static const std::vector<Flat> empty;
  if (proj_dim < 0 || proj_dim >= static_cast<int>(iso_flats_.size())) return empty;
  return iso_flats_[proj_dim];
}

bool PolarSpaceW::conjugate(const ProjectivePoint& P, const ProjectivePoint& R) const {
  return form_.eval(P.rep, R.rep) == 0;
}

PolarSpaceW symplectic_polar_space(const GroupPtr& G, int p) {
  GeneratorChoice gc = choose_generator(G, p);
  auto V = std::make_shared<const GFpVectorSpace>(make_factor_group(center(G)), p);
  return PolarSpaceW(AlternatingForm(V, gc));
}

GFpVector QuotientPolarSpace::project(const GFpVector& v) const {
  const int dq = polar.space().dim();
  GFpVector out = gfp_zero(v.p, dq);
  for (int i = 0; i < v.dim(); ++i) {
    if (v.c[i] != 0) out = gfp_add(out, gfp_scale(v.c[i], projection[i]));
  }
  return out;
}

SubspaceGF QuotientPolarSpace::lift(const SubspaceGF& quotient_subspace) const {
  const GFpVectorSpace& Va = *ambient;
  const GFpVectorSpace& Vq = polar.space();
  const FactorGroup& Fa = *Va.source();
  const FactorGroup& Fq = *Vq.source();
  std::vector<GFpVector> rows = radical.rows;
  for (const GFpVector& w : quotient_subspace.rows) {
    ElementId x = Fq.rep(Vq.coset_of_vector(w));
    rows.push_back(Va.coord_of(Fa.coset_of(x)));
  }
  SubspaceGF out = make_subspace(Va.p(), Va.dim(), std::move(rows));
  if (out.dim() != quotient_subspace.dim() + radical.dim()) {
    throw InconsistencyError("lift of a quotient subspace has unexpected dimension");
  }
  return out;
}

QuotientPolarSpace::TwoDims QuotientPolarSpace::dims_of(const Flat& quotient_flat) const {
  return TwoDims{quotient_flat.proj_dim() + radical.dim(), quotient_flat.proj_dim()};
}

QuotientPolarSpace quotient_polar_space(AlternatingForm ambient_form) {
  SpacePtr Va = ambient_form.space_ptr();
  if (!ambient_form.generator()) {
    throw Error("quotient polar space needs the generator used for the ambient form");
  }
  GeneratorChoice gc = *ambient_form.generator();
  const FactorGroup& Fa = *Va->source();
  const GroupPtr& G = Fa.parent_ptr();
  const int p = Va->p();

  SubspaceGF radical = ambient_form.radical();
  auto Vq = std::make_shared<const GFpVectorSpace>(make_factor_group(center(G)), p);
  PolarSpaceW polar((AlternatingForm(Vq, gc)));

  const FactorGroup& Fq = *Vq->source();
  std::vector<GFpVector> projection;
  for (int i = 0; i < Va->dim(); ++i) {
    ElementId x = Fa.rep(Va->basis()[i]);
    projection.push_back(Vq->coord_of(Fq.coset_of(x)));
  }
  QuotientPolarSpace out{Va, std::move(ambient_form), std::move(radical), std::move(polar),
                         std::move(projection)};
  // the radical is exactly the kernel of the projection
  for (const GFpVector& r : out.radical.rows) {
    if (!out.project(r).is_zero()) {
      throw InconsistencyError("radical does not project to zero; centre mismatch");
    }
  }
  return out;
}

QuotientPolarSpace quotient_polar_space(const GroupPtr& G, const Subgroup& N, int p) {
  GeneratorChoice gc = choose_generator(G, p);
  auto V = std::make_shared<const GFpVectorSpace>(make_factor_group(N), p);
  return quotient_polar_space(AlternatingForm(V, gc));
}

bool conjugate_points(const PolarSpaceW& W, const ProjectivePoint& P, const ProjectivePoint& R) {
  return W.conjugate(P, R);
}

std::vector<ElementId> condensation(const GFpVectorSpace& V, const ProjectivePoint& P) {
  const FactorGroup& F = *V.source();
  std::vector<ElementId> out;
  for (int m = 1; m < V.p(); ++m) {
    int coset = V.coset_of_vector(gfp_scale(m, P.rep));
    const auto& members = F.members(coset);
    out.insert(out.end(), members.begin(), members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(QuadricTag tag) {
  switch (tag) {
    case QuadricTag::parabolic: return "parabolic";
    case QuadricTag::hyperbolic: return "hyperbolic";
    case QuadricTag::elliptic: return "elliptic";
  }
  return "?";
}

QuadricClass classify_quadric(int n, long long point_count, int max_singular_proj_dim) {
  auto pow2 = [](int e) { return 1LL << e; };
  if (n < 1) throw Error("quadric needs ambient projective dimension >= 1");
  if (n % 2 == 0) {
    const int k = n / 2;
    if (point_count != pow2(2 * k) - 1) {
      throw InconsistencyError("parabolic quadric point count " + std::to_string(point_count) +
                               " does not match 2^" + std::to_string(2 * k) + " - 1");
    }
    if (max_singular_proj_dim != k - 1) {
      throw InconsistencyError("parabolic quadric has maximal singular dimension " +
                               std::to_string(max_singular_proj_dim) + ", expected " +
                               std::to_string(k - 1));
    }
    return QuadricClass{QuadricTag::parabolic, k};
  }
  const int k = (n - 1) / 2;
  if (point_count == pow2(2 * k + 1) + pow2(k) - 1) {
    if (max_singular_proj_dim != k) {
      throw InconsistencyError("hyperbolic quadric has maximal singular dimension " +
                               std::to_string(max_singular_proj_dim) + ", expected " +
                               std::to_string(k));
    }
    return QuadricClass{QuadricTag::hyperbolic, k + 1};
  }
  if (point_count == pow2(2 * k + 1) - pow2(k) - 1) {
    if (max_singular_proj_dim != k - 1) {
      throw InconsistencyError("elliptic quadric has maximal singular dimension " +
                               std::to_string(max_singular_proj_dim) + ", expected " +
                               std::to_string(k - 1));
    }
    return QuadricClass{QuadricTag::elliptic, k};
  }
  throw InconsistencyError("singular point count " + std::to_string(point_count) +
                           " matches no quadric of PG(" + std::to_string(n) + ",2)");
}

Quadric::Quadric(QuadraticFormGF2 q) : q_(std::move(q)), polar_(q_.polar_form()) {
  const GFpVectorSpace& V = q_.space();
  const int d = V.dim();

  SubspaceGF radical = polar_.radical();
  for (const GFpVector& v : radical.enumerate()) {
    if (!v.is_zero() && q_.eval(v) == 0) {
      throw DegeneracyError("quadratic form is singular: it vanishes on a nonzero radical vector");
    }
  }

  for (const ProjectivePoint& P : projective_points(V)) {
    if (q_.eval(P.rep) == 0) points_.push_back(P);
  }
  flats_.clear();
  if (!points_.empty()) {
    flats_.emplace_back();
    for (const ProjectivePoint& P : points_) {
      flats_[0].push_back(Flat{make_subspace(2, d, {P.rep})});
    }
    for (int k = 2; k <= d; ++k) {
      std::vector<Flat> found;
      for (const SubspaceGF& S : all_subspaces(2, d, k)) {
        bool singular = subspace_isotropic(polar_, S);
        for (const GFpVector& r : S.rows) {
          if (!singular) break;
          if (q_.eval(r) != 0) singular = false;
        }
        if (singular) found.push_back(Flat{S});
      }
      if (found.empty()) break;
      flats_.push_back(std::move(found));
    }
  }

  const int n = d - 1;
  class_ = classify_quadric(n, static_cast<long long>(points_.size()), max_singular_proj_dim());

  if (n % 2 == 0) {
    if (radical.dim() != 1) {
      throw InconsistencyError("parabolic case expects a one-dimensional radical");
    }
    nucleus_ = make_projective_point(radical.rows[0]);
  } else if (radical.dim() != 0) {
    throw InconsistencyError("odd ambient dimension expects a non-degenerate polar form");
  }
}

const std::vector<Flat>& Quadric::singular_flats(int proj_dim) const {
  static const std::vector<Flat> empty;
  if (proj_dim < 0 || proj_dim >= static_cast<int>(flats_.size())) return empty;
  return flats_[proj_dim];
}

int Quadric::max_singular_proj_dim() const { return static_cast<int>(flats_.size()) - 1; }

Quadric quadric_of_group(const GroupPtr& G) {
  Subgroup K = torsion_center_K(G);
  auto V = std::make_shared<const GFpVectorSpace>(make_factor_group(K), 2);
  Quadric qd{QuadraticFormGF2(V)};
  // Singular flats carry exactly the exponent-2 subgroups containing K.
  for (int j = 0; j <= qd.max_singular_proj_dim(); ++j) {
    for (const Flat& f : qd.singular_flats(j)) {
      Subgroup T = subgroup_of_subspace(*V, f.subspace);
      if (!exponent_divides(T, 2)) {
        throw InconsistencyError("singular flat carries a subgroup of exponent > 2");
      }
    }
  }
  return qd;
}

NucleusJoin join_with_nucleus(const Quadric& qd) {
  if (!qd.nucleus()) {
    throw Error("join with nucleus is not applicable: quadric has no nucleus");
  }
  const GFpVectorSpace& V = qd.space();
  QuotientPolarSpace quotient = quotient_polar_space(qd.polar());
  const GFpVectorSpace& Vq = quotient.polar.space();
  const Subgroup& Z = Vq.source()->modulus();

  NucleusJoin out{std::move(quotient), {}, {}};
  SubspaceGF radical = out.quotient.radical;

  auto add_pair = [&](const Flat& singular) {
    SubspaceGF joined = subspace_sum(singular.subspace, radical);
    std::vector<GFpVector> projected;
    for (const GFpVector& r : singular.subspace.rows) {
      projected.push_back(out.quotient.project(r));
    }
    SubspaceGF image = make_subspace(Vq.p(), Vq.dim(), std::move(projected));
    if (image.dim() != singular.subspace.dim()) {
      throw InconsistencyError("singular flat does not project isomorphically");
    }
    // locate the image among the quotient's totally isotropic flats
    const auto& candidates = out.quotient.polar.iso_flats(singular.proj_dim());
    const Flat* found = nullptr;
    for (const Flat& c : candidates) {
      if (c.subspace == image) {
        found = &c;
        break;
      }
    }
    if (singular.proj_dim() >= 0 && found == nullptr) {
      throw InconsistencyError("projected singular flat is not totally isotropic");
    }
    Flat quotient_flat = found ? *found : Flat{SubspaceGF{Vq.p(), Vq.dim(), {}}};
    Subgroup T = subgroup_of_subspace(V, singular.subspace);
    Subgroup C = subgroup_of_subspace(Vq, quotient_flat.subspace);
    // C must equal the complex product T * Z(G)
    std::set<ElementId> product;
    for (ElementId t : T.members) {
      for (ElementId z : Z.members) {
        product.insert(V.source()->parent().mul(t, z));
      }
    }
    if (!std::equal(product.begin(), product.end(), C.members.begin(), C.members.end()) ||
        product.size() != C.members.size()) {
      throw InconsistencyError("join bijection T -> T Z(G) broke on a singular flat");
    }
    out.pairs.push_back(NucleusJoin::Pair{singular, std::move(joined), quotient_flat});
    out.subgroup_pairs.emplace_back(std::move(T), std::move(C));
  };

  // base case: the empty flat, T = K mapping to Z(G)
  add_pair(Flat{SubspaceGF{V.p(), V.dim(), {}}});
  for (int j = 0; j <= qd.max_singular_proj_dim(); ++j) {
    const auto& singulars = qd.singular_flats(j);
    const auto& isos = out.quotient.polar.iso_flats(j);
    if (singulars.size() != isos.size()) {
      throw InconsistencyError("singular flats and isotropic flats disagree in count at dim " +
                               std::to_string(j));
    }
    std::set<SubspaceGF> seen;
    for (const Flat& f : singulars) {
      add_pair(f);
      if (!seen.insert(out.pairs.back().quotient_flat.subspace).second) {
        throw InconsistencyError("join map is not injective at dim " + std::to_string(j));
      }
    }
  }
  return out;
}

Gq24 derive_gq24(const PolarSpaceW& W, const ProjectivePoint& U, const PointLabeler& labeler) {
  const GFpVectorSpace& V = W.space();
  if (V.p() != 3 || V.dim() != 4) {
    throw Error("GQ(2,4) derivation needs the symplectic polar space W3(3)");
  }
  W.point_index(U);  // membership check

  Gq24 out;
  std::map<GFpVector, int> gq_index;
  for (const ProjectivePoint& P : W.points()) {
    if (W.form().eval(U.rep, P.rep) != 0) {
      gq_index[P.rep] = static_cast<int>(out.points.size());
      out.points.push_back(P);
    }
  }

  auto line_of_points = [&](const std::vector<ProjectivePoint>& pts) {
    std::vector<int> idx;
    for (const ProjectivePoint& P : pts) {
      auto it = gq_index.find(P.rep);
      if (it != gq_index.end()) idx.push_back(it->second);
    }
    std::sort(idx.begin(), idx.end());
    return idx;
  };

  std::vector<std::vector<int>> lines;
  // (a) totally isotropic lines of W avoiding U, restricted to GQ points
  for (const Flat& f : W.iso_flats(1)) {
    if (f.subspace.contains(U.rep)) continue;
    std::vector<int> line = line_of_points(points_of_subspace(f.subspace));
    if (line.size() != 3) {
      throw InconsistencyError("an isotropic line off U must keep exactly 3 points");
    }
    lines.push_back(std::move(line));
    ++out.polar_line_count;
  }
  // (b) hyperbolic lines through U, punctured at U
  std::set<SubspaceGF> hyperbolic;
  for (const ProjectivePoint& P : out.points) {
    hyperbolic.insert(make_subspace(3, 4, {U.rep, P.rep}));
  }
  for (const SubspaceGF& length2 : hyperbolic) {
    std::vector<ProjectivePoint> pts;
    for (const ProjectivePoint& P : points_of_subspace(length2)) {
      if (!(P == U)) pts.push_back(P);
    }
    std::vector<int> line = line_of_points(pts);
    if (line.size() != 3) {
      throw InconsistencyError("a hyperbolic line through U must meet U_perp only at U");
    }
    lines.push_back(std::move(line));
    ++out.hyperbolic_line_count;
  }

  out.incidence.lines = std::move(lines);
  out.incidence.order_params = {2, 4};
  for (const ProjectivePoint& P : out.points) {
    std::string label;
    if (labeler) {
      label = labeler(P);
    } else {
      for (int x : P.rep.c) label += std::to_string(x);
    }
    out.incidence.point_labels.push_back(std::move(label));
  }
  validate_incidence(out.incidence);

  // the generalized-quadrangle axiom, exhaustively
  const int np = out.incidence.num_points();
  std::vector<std::vector<char>> collinear(np, std::vector<char>(np, 0));
  for (const auto& line : out.incidence.lines) {
    for (int a : line) {
      for (int b : line) collinear[a][b] = 1;
    }
  }
  for (int pt = 0; pt < np; ++pt) {
    for (const auto& line : out.incidence.lines) {
      if (std::find(line.begin(), line.end(), pt) != line.end()) continue;
      int meets = 0;
      for (int other : line) meets += collinear[pt][other];
      if (meets != 1) {
        throw InconsistencyError("GQ axiom fails: " + std::to_string(meets) +
                                 " collinear points on a non-incident line");
      }
    }
  }
  // order (2, 4): 3 points per line (checked above), 5 lines per point
  std::vector<int> degree(np, 0);
  for (const auto& line : out.incidence.lines) {
    for (int a : line) ++degree[a];
  }
  for (int deg : degree) {
    if (deg != 5) {
      throw InconsistencyError("GQ(2,4) needs 5 lines per point, found " + std::to_string(deg));
    }
  }
  return out;
}

std::string incidence_fingerprint(const IncidenceStructure& s) {
  validate_incidence(s);
  auto run_length = [](std::vector<int> values) {
    std::sort(values.begin(), values.end());
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < values.size()) {
      size_t j = i;
      while (j < values.size() && values[j] == values[i]) ++j;
      if (!first) out << ",";
      out << values[i] << "^" << (j - i);
      first = false;
      i = j;
    }
    return out.str();
  };
  const int np = s.num_points();
  std::vector<int> line_sizes;
  for (const auto& line : s.lines) line_sizes.push_back(static_cast<int>(line.size()));
  std::vector<int> degrees(np, 0);
  std::vector<std::set<int>> neighbours(np);
  for (const auto& line : s.lines) {
    for (int a : line) {
      ++degrees[a];
      for (int b : line) {
        if (a != b) neighbours[a].insert(b);
      }
    }
  }
  std::vector<int> coll_degrees;
  for (const auto& nb : neighbours) coll_degrees.push_back(static_cast<int>(nb.size()));
  std::ostringstream out;
  out << "points=" << np << ";lines=" << s.num_lines() << ";line_sizes=" << run_length(line_sizes)
      << ";point_degrees=" << run_length(degrees)
      << ";collinearity_degrees=" << run_length(coll_degrees);
  return out.str();
}

IncidenceStructure polar_incidence(const PolarSpaceW& W, const std::vector<std::string>& labels,
                                   const std::vector<PointShade>& shades) {
  IncidenceStructure s;
  const auto& pts = W.points();
  if (!labels.empty() && labels.size() != pts.size()) {
    throw Error("label list length does not match point count");
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    s.point_labels.push_back(labels.empty() ? "P" + std::to_string(i) : labels[i]);
  }
  s.shades = shades;
  for (const Flat& f : W.lines()) {
    std::vector<int> line;
    for (const ProjectivePoint& P : points_of_subspace(f.subspace)) {
      line.push_back(W.point_index(P));
    }
    std::sort(line.begin(), line.end());
    s.lines.push_back(std::move(line));
  }
  validate_incidence(s);
  return s;
}

IncidenceStructure projective_figure(const Quadric& qd, const std::vector<std::string>& labels) {
  const GFpVectorSpace& V = qd.space();
  const int d = V.dim();
  std::vector<ProjectivePoint> pts = projective_points(V);
  if (!labels.empty() && labels.size() != pts.size()) {
    throw Error("label list length does not match point count");
  }
  std::map<GFpVector, int> index;
  IncidenceStructure s;
  for (size_t i = 0; i < pts.size(); ++i) {
    index[pts[i].rep] = static_cast<int>(i);
    s.point_labels.push_back(labels.empty() ? "P" + std::to_string(i) : labels[i]);
    if (qd.q().eval(pts[i].rep) == 0) {
      s.shades.push_back(PointShade::dark);
    } else if (qd.nucleus() && pts[i] == *qd.nucleus()) {
      s.shades.push_back(PointShade::nucleus);
    } else {
      s.shades.push_back(PointShade::light);
    }
  }
  for (const SubspaceGF& S : all_subspaces(V.p(), d, 2)) {
    std::vector<int> line;
    for (const ProjectivePoint& P : points_of_subspace(S)) line.push_back(index.at(P.rep));
    std::sort(line.begin(), line.end());
    s.lines.push_back(std::move(line));
  }
  validate_incidence(s);
  return s;
}

}  // namespace gpolar
