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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpolar/forms.hpp"
#include "gpolar/gfp_space.hpp"
#include "gpolar/incidence.hpp"

namespace gpolar {

/// A point of the projective space P(V): a nonzero vector normalized so that
/// its first nonzero coordinate is 1. Equal points have equal reps.
struct ProjectivePoint {
  GFpVector rep;
  bool operator==(const ProjectivePoint&) const = default;
  bool operator<(const ProjectivePoint& other) const { return rep < other.rep; }
};

/// Throws on the zero vector.
ProjectivePoint make_projective_point(const GFpVector& v);

/// All (p^d - 1)/(p - 1) points in lexicographic order of their reps.
std::vector<ProjectivePoint> projective_points(int p, int dim);
std::vector<ProjectivePoint> projective_points(const GFpVectorSpace& V);

/// A projective flat: P(S) for a subspace S, with proj_dim = dim S - 1.
/// The zero subspace is the empty flat with proj_dim -1; it closes the
/// lattice but is excluded from all point and flat listings.
struct Flat {
  SubspaceGF subspace;
  int proj_dim() const noexcept { return subspace.dim() - 1; }
  bool operator==(const Flat&) const = default;
};

/// The orthogonal flat of F with respect to the form (total; for the
/// non-degenerate case proj dims satisfy dim + perp dim = n - 1).
Flat perp(const AlternatingForm& form, const Flat& F);

/// The symplectic polar space of a non-degenerate alternating form: all
/// projective points plus the totally isotropic flats grouped by dimension.
class PolarSpaceW {
 public:
  /// Throws DegeneracyError if the form has a nonzero radical (use
  /// quotient_polar_space for that case).
  explicit PolarSpaceW(AlternatingForm form);

  const AlternatingForm& form() const noexcept { return form_; }
  const GFpVectorSpace& space() const noexcept { return form_.space(); }
  int rank() const noexcept { return rank_; }

  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
  int point_index(const ProjectivePoint& P) const;

  /// Totally isotropic flats of the given projective dimension (0..rank-1).
  /// Dimension 0 is aligned with points().
  const std::vector<Flat>& iso_flats(int proj_dim) const;
  std::vector<Flat> lines() const { return rank_ >= 2 ? iso_flats(1) : std::vector<Flat>{}; }

  bool conjugate(const ProjectivePoint& P, const ProjectivePoint& R) const;

 private:
  AlternatingForm form_;
  int rank_ = 0;
  std::vector<ProjectivePoint> points_;
  std::vector<std::vector<Flat>> iso_flats_;  // by projective dimension
};

/// Builds W over G/Z(G); requires Conditions 1-3 with N = Z(G).
PolarSpaceW symplectic_polar_space(const GroupPtr& G, int p);

/// The polar space seen through a degenerate form on V = G/N: the symplectic
/// polar space lives in P(V / V_perp) = P(G/Z(G)); every flat there lifts to
/// a flat of P(V) through P(V_perp) and hence carries two projective
/// dimensions.
struct QuotientPolarSpace {
  SpacePtr ambient;               // G/N
  AlternatingForm ambient_form;   // commutator form on the ambient space
  SubspaceGF radical;             // V_perp = Z(G)/N, in ambient coordinates
  PolarSpaceW polar;              // the symplectic polar space on G/Z(G)
  std::vector<GFpVector> projection;  // images of ambient basis vectors

  GFpVector project(const GFpVector& v) const;
  /// Preimage of a quotient subspace; always contains the radical.
  SubspaceGF lift(const SubspaceGF& quotient_subspace) const;

  struct TwoDims {
    int ambient_proj_dim;
    int quotient_proj_dim;
  };
  TwoDims dims_of(const Flat& quotient_flat) const;
};

QuotientPolarSpace quotient_polar_space(const GroupPtr& G, const Subgroup& N, int p);
QuotientPolarSpace quotient_polar_space(AlternatingForm ambient_form);

bool conjugate_points(const PolarSpaceW& W, const ProjectivePoint& P, const ProjectivePoint& R);

/// All group elements condensed into the point P of the polar space over V:
/// the members of the cosets spanned by P, the modulus itself excluded.
std::vector<ElementId> condensation(const GFpVectorSpace& V, const ProjectivePoint& P);

enum class QuadricTag { parabolic, hyperbolic, elliptic };
const char* to_string(QuadricTag tag);

struct QuadricClass {
  QuadricTag tag;
  int witt;  // maximal singular flats have projective dimension witt - 1
};

/// Classification over GF(2) from the ambient projective dimension n and the
/// singular point count, cross-checked against the maximal singular flat
/// dimension; disagreement raises InconsistencyError.
QuadricClass classify_quadric(int ambient_proj_dim, long long point_count,
                              int max_singular_proj_dim);

/// The non-singular quadric of a quadratic form over GF(2): singular points
/// and flats, classification, and the nucleus when the ambient projective
/// dimension is even.
class Quadric {
 public:
  /// Throws DegeneracyError if Q vanishes on a nonzero radical vector.
  explicit Quadric(QuadraticFormGF2 q);

  const QuadraticFormGF2& q() const noexcept { return q_; }
  const GFpVectorSpace& space() const noexcept { return q_.space(); }
  const AlternatingForm& polar() const noexcept { return polar_; }

  int ambient_proj_dim() const noexcept { return space().dim() - 1; }
  QuadricTag tag() const noexcept { return class_.tag; }
  int witt() const noexcept { return class_.witt; }

  const std::vector<ProjectivePoint>& singular_points() const noexcept { return points_; }
  const std::vector<Flat>& singular_flats(int proj_dim) const;
  int max_singular_proj_dim() const;
  const std::optional<ProjectivePoint>& nucleus() const noexcept { return nucleus_; }

 private:
  QuadraticFormGF2 q_;
  AlternatingForm polar_;
  QuadricClass class_{QuadricTag::parabolic, 0};
  std::vector<ProjectivePoint> points_;
  std::vector<std::vector<Flat>> flats_;  // by projective dimension
  std::optional<ProjectivePoint> nucleus_;
};

/// Builds the quadric of G over V = G/K; requires Conditions 1-5 with N = K.
Quadric quadric_of_group(const GroupPtr& G);

/// The isomorphism "join the quadric with its nucleus": each singular flat
/// P(S) maps to P(S + V_perp), a totally isotropic flat of the quotient polar
/// space; in group terms the bijection T -> T Z(G) from exponent-2 subgroups
/// containing K onto commutative subgroups containing Z(G).
struct NucleusJoin {
  QuotientPolarSpace quotient;
  struct Pair {
    Flat singular;            // empty flat (proj_dim -1) is the base case
    SubspaceGF ambient_join;  // S + V_perp inside the quadric's space
    Flat quotient_flat;       // matching flat of quotient.polar
  };
  std::vector<Pair> pairs;                                    // by singular dim, ascending
  std::vector<std::pair<Subgroup, Subgroup>> subgroup_pairs;  // T -> T Z(G), aligned with pairs
};

/// Throws Error when the quadric has no nucleus (non-parabolic case).
NucleusJoin join_with_nucleus(const Quadric& qd);

/// The generalized quadrangle of order (2,4) derived from W3(3) at a point U:
/// points are the 27 points not collinear with U; lines are the isotropic
/// lines avoiding U plus the punctured hyperbolic lines through U.
struct Gq24 {
  IncidenceStructure incidence;          // carries order (2,4)
  std::vector<ProjectivePoint> points;   // aligned with incidence point indices
  int polar_line_count = 0;              // isotropic lines not through U
  int hyperbolic_line_count = 0;         // punctured hyperbolic lines through U
};

using PointLabeler = std::function<std::string(const ProjectivePoint&)>;

Gq24 derive_gq24(const PolarSpaceW& W, const ProjectivePoint& U,
                 const PointLabeler& labeler = {});

/// Invariant fingerprint: point/line counts, line sizes, per-point line
/// degrees, and the collinearity-graph degree sequence (all sorted).
std::string incidence_fingerprint(const IncidenceStructure& s);

/// The polar space as an incidence structure: its points and its totally
/// isotropic lines. Labels default to "P<i>"; shades are optional.
IncidenceStructure polar_incidence(const PolarSpaceW& W,
                                   const std::vector<std::string>& labels = {},
                                   const std::vector<PointShade>& shades = {});

/// Every point and every line of the quadric's ambient projective space,
/// shaded dark (singular) / light / nucleus. The classical small figures.
IncidenceStructure projective_figure(const Quadric& qd,
                                     const std::vector<std::string>& labels = {});

}  // namespace gpolar
