// Copyright 2026 The chaingeo Authors
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

#include <span>

#include "chaingeo/common.hpp"

namespace chaingeo {

/// Hermitian form of signature (p,1) on C^{p+1},
///   <X,Y> = sum_{i<p} X_i conj(Y_i) - X_p conj(Y_p),
/// together with the metric normalisation. With metric_scale s = 1 the
/// metric has minimal holomorphic sectional curvature -1 and distance
/// d = 2 arccosh sqrt(delta); a general s multiplies all lengths by s.
class HermitianModel {
 public:
  explicit HermitianModel(int p, double metric_scale = 1.0);

  int p() const { return p_; }
  int dim() const { return p_ + 1; }
  double metric_scale() const { return scale_; }

  /// diag(1,...,1,-1)
  Mat form() const;

  void check_dim(const Vec& v) const;

  friend bool operator==(const HermitianModel&, const HermitianModel&) = default;

 private:
  int p_;
  double scale_;
};

/// Relative tolerance for classifying a vector as null.
inline constexpr double kTolNull = 1e-10;

/// <X,Y>, linear in X, conjugate-linear in Y. No dimension check.
cplx herm(const Vec& x, const Vec& y);

/// Checked version of herm().
cplx inner(const HermitianModel& model, const Vec& x, const Vec& y);

enum class PointKind { Interior, Boundary };

/// Projective class of a non-positive vector. The stored lift is canonical:
/// last coordinate real positive, and <X,X> = -1 (interior) or Euclidean
/// norm 1 (boundary).
class ProjPoint {
 public:
  /// Classifies and canonicalises `lift`. Throws DomainError for positive
  /// or zero vectors.
  static ProjPoint from_lift(const Vec& lift, double tol_null = kTolNull);

  /// Point with ball coordinates z (|z| < 1 interior, |z| = 1 boundary).
  static ProjPoint from_ball(const Vec& z, double tol_null = kTolNull);

  /// The origin of the ball model, e_{p+1}.
  static ProjPoint origin(int p);

  const Vec& lift() const { return lift_; }
  PointKind kind() const { return kind_; }
  bool is_interior() const { return kind_ == PointKind::Interior; }
  bool is_boundary() const { return kind_ == PointKind::Boundary; }
  int p() const { return static_cast<int>(lift_.size()) - 1; }

  /// Ball coordinates lift[0..p) / lift[p].
  Vec ball() const;

 private:
  ProjPoint(Vec lift, PointKind kind) : lift_(std::move(lift)), kind_(kind) {}
  Vec lift_;
  PointKind kind_;
};

/// Projective (Fubini-Study) sine distance between the lines spanned by a, b.
double projective_distance(const Vec& a, const Vec& b);

/// True when x and y define the same projective point (within tol).
bool same_point(const ProjPoint& x, const ProjPoint& y, double tol = 1e-12);

/// Tangent vector at an interior point, represented by its horizontal lift
/// at the canonical lift X: <components, X> = 0.
struct TangentVector {
  ProjPoint base;
  Vec components;
};

/// Horizontal projection of an arbitrary vector w at x: w + <w,X> X.
TangentVector tangent_at(const ProjPoint& x, const Vec& w);

/// The point [L] and the tangent vector represented by the derivative dL of
/// the lift along a curve through L.
TangentVector tangent_from_lift(const Vec& lift, const Vec& dlift);

double distance(const HermitianModel& model, const ProjPoint& x, const ProjPoint& y);

/// Unit speed geodesic from interior x toward target (interior or boundary).
ProjPoint geodesic(const HermitianModel& model, const ProjPoint& x, const ProjPoint& target,
                   double t);

/// Unit-speed initial velocity at x of the geodesic toward target.
TangentVector direction_to(const HermitianModel& model, const ProjPoint& x,
                           const ProjPoint& target);

/// Point at distance |v| along the geodesic with initial velocity v.
ProjPoint exp_map(const HermitianModel& model, const TangentVector& v);

struct MetricKahler {
  double g;
  double omega;
};

/// g_x(u,v) and omega_x(u,v) = g_x(Ju,v).
MetricKahler metric_and_kahler(const HermitianModel& model, const TangentVector& u,
                               const TangentVector& v);

double norm(const HermitianModel& model, const TangentVector& v);

/// Metric and Kahler form evaluated on arbitrary (non-horizontal) vectors
/// U, V at an arbitrary negative lift P; both are invariant under
/// P -> cP, U -> cU + aP.
MetricKahler metric_and_kahler_on_lift(const HermitianModel& model, const Vec& p,
                                       const Vec& u, const Vec& v);

struct TriangleArea {
  double value = 0.0;
  double error = 0.0;  ///< quadrature error estimate
  bool degenerate = false;
};

/// Integral of the Kahler form over the triangle with geodesic sides filled
/// by the cone from vertex `apex` (0, 1 or 2) to the opposite side.
/// Vertices may be interior or boundary points.
TriangleArea triangle_area(const HermitianModel& model, const ProjPoint& x, const ProjPoint& y,
                           const ProjPoint& z, int apex = 0, double tol = 1e-9);

}  // namespace chaingeo
