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


#include "chaingeo/hermitian.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace chaingeo {

HermitianModel::HermitianModel(int p, double metric_scale) : p_(p), scale_(metric_scale) {
  if (p < 1) throw DomainError("HermitianModel: p must be >= 1");
  if (!(metric_scale > 0.0) || !std::isfinite(metric_scale))
    throw DomainError("HermitianModel: metric_scale must be positive");
}

Mat HermitianModel::form() const {
  Mat j = Mat::Identity(dim(), dim());
  j(p_, p_) = -1.0;
  return j;
}

void HermitianModel::check_dim(const Vec& v) const {
  if (v.size() != dim())
    throw DimensionError("expected vector of dimension " + std::to_string(dim()) + ", got " +
                         std::to_string(v.size()));
}

cplx herm(const Vec& x, const Vec& y) {
  const Eigen::Index n = x.size() - 1;
  cplx s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) s += x[i] * std::conj(y[i]);
  return s - x[n] * std::conj(y[n]);
}

cplx inner(const HermitianModel& model, const Vec& x, const Vec& y) {
  model.check_dim(x);
  model.check_dim(y);
  return herm(x, y);
}

namespace {

// Multiply by the unit phase making the last coordinate real positive.
Vec fix_phase(Vec v) {
  const cplx last = v[v.size() - 1];
  if (std::abs(last) > 0.0) v *= std::conj(last) / std::abs(last);
  return v;
}

}  // namespace

ProjPoint ProjPoint::from_lift(const Vec& lift, double tol_null) {
  if (lift.size() < 2) throw DimensionError("ProjPoint: need at least 2 coordinates");
  const double n2 = lift.squaredNorm();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw DomainError("ProjPoint: zero or non-finite lift");
  const double q = herm(lift, lift).real();
  const Eigen::Index p = lift.size() - 1;
  if (std::abs(q) <= tol_null * n2) {
    // Snap onto the null cone through the ball coordinates.
    Vec b = lift.head(p) / lift[p];
    b /= b.norm();
    Vec v(p + 1);
    v.head(p) = b;
    v[p] = 1.0;
    v /= std::sqrt(2.0);
    return ProjPoint(v, PointKind::Boundary);
  }
  if (q > 0.0) throw DomainError("ProjPoint: positive vector is not a point of the closed ball");
  return ProjPoint(fix_phase(lift / std::sqrt(-q)), PointKind::Interior);
}

ProjPoint ProjPoint::from_ball(const Vec& z, double tol_null) {
  Vec v(z.size() + 1);
  v.head(z.size()) = z;
  v[z.size()] = 1.0;
  return from_lift(v, tol_null);
}

ProjPoint ProjPoint::origin(int p) {
  Vec v = Vec::Zero(p + 1);
  v[p] = 1.0;
  return ProjPoint(v, PointKind::Interior);
}

Vec ProjPoint::ball() const {
  const Eigen::Index p = lift_.size() - 1;
  return lift_.head(p) / lift_[p];
}

double projective_distance(const Vec& a, const Vec& b) {
  const Vec ua = a / a.norm();
  const Vec ub = b / b.norm();
  // sine of the angle via the orthogonal component; stable for close points
  return std::min(1.0, (ub - ua.dot(ub) * ua).norm());
}

bool same_point(const ProjPoint& x, const ProjPoint& y, double tol) {
  if (x.lift().size() != y.lift().size()) return false;
  return projective_distance(x.lift(), y.lift()) <= tol;
}

TangentVector tangent_at(const ProjPoint& x, const Vec& w) {
  if (!x.is_interior()) throw DomainError("tangent_at: base point must be interior");
  if (w.size() != x.lift().size()) throw DimensionError("tangent_at: dimension mismatch");
  const Vec& X = x.lift();
  return {x, w + herm(w, X) * X};
}

TangentVector tangent_from_lift(const Vec& lift, const Vec& dlift) {
  ProjPoint y = ProjPoint::from_lift(lift);
  if (!y.is_interior()) throw DomainError("tangent_from_lift: point must be interior");
  const Eigen::Index p = lift.size() - 1;
  const cplx c = y.lift()[p] / lift[p];
  return tangent_at(y, c * dlift);
}

namespace {

// Lift of `target` with <T,X> real negative, and the unit horizontal
// direction U (<U,U> = 1) at X pointing to it.
std::pair<Vec, Vec> aligned_direction(const ProjPoint& x, const ProjPoint& target) {
  const Vec& X = x.lift();
  Vec t = target.lift();
  const cplx a = herm(t, X);
  if (std::abs(a) == 0.0) throw DomainError("geodesic: orthogonal lifts");
  t *= -std::conj(a) / std::abs(a);
  Vec th = t + herm(t, X) * X;
  const double n2 = herm(th, th).real();
  if (!(n2 > 0.0)) throw DomainError("geodesic: target coincides with the base point");
  return {t, th / std::sqrt(n2)};
}

}  // namespace

double distance(const HermitianModel& model, const ProjPoint& x, const ProjPoint& y) {
  if (!x.is_interior() || !y.is_interior())
    throw DomainError("distance: both points must be interior");
  model.check_dim(x.lift());
  model.check_dim(y.lift());
  const Vec& X = x.lift();
  const Vec& Y = y.lift();
  // sinh^2(d/2) = <Yh,Yh> for the horizontal part Yh of Y at X.
  const Vec yh = Y + herm(Y, X) * X;
  const double s2 = std::max(0.0, herm(yh, yh).real());
  return model.metric_scale() * 2.0 * std::asinh(std::sqrt(s2));
}

TangentVector direction_to(const HermitianModel& model, const ProjPoint& x,
                           const ProjPoint& target) {
  if (!x.is_interior()) throw DomainError("direction_to: base point must be interior");
  model.check_dim(target.lift());
  if (same_point(x, target)) throw DomainError("direction_to: target equals base point");
  auto [t, u] = aligned_direction(x, target);
  return {x, u / (2.0 * model.metric_scale())};
}

ProjPoint geodesic(const HermitianModel& model, const ProjPoint& x, const ProjPoint& target,
                   double t) {
  if (!x.is_interior()) throw DomainError("geodesic: start point must be interior");
  model.check_dim(x.lift());
  model.check_dim(target.lift());
  if (same_point(x, target)) throw DomainError("geodesic: direction undefined (x == target)");
  auto [aligned, u] = aligned_direction(x, target);
  const double tau = t / (2.0 * model.metric_scale());
  return ProjPoint::from_lift(std::cosh(tau) * x.lift() + std::sinh(tau) * u);
}

ProjPoint exp_map(const HermitianModel& model, const TangentVector& v) {
  const double n = norm(model, v);
  if (n == 0.0) return v.base;
  const double tau = n / (2.0 * model.metric_scale());
  const Vec u = v.components / std::sqrt(herm(v.components, v.components).real());
  return ProjPoint::from_lift(std::cosh(tau) * v.base.lift() + std::sinh(tau) * u);
}

MetricKahler metric_and_kahler(const HermitianModel& model, const TangentVector& u,
                               const TangentVector& v) {
  model.check_dim(u.components);
  model.check_dim(v.components);
  if (!same_point(u.base, v.base, 1e-10))
    throw DomainError("metric_and_kahler: tangent vectors based at different points");
  const double s2 = model.metric_scale() * model.metric_scale();
  const cplx h = herm(u.components, v.components);
  return {4.0 * s2 * h.real(), -4.0 * s2 * h.imag()};
}

double norm(const HermitianModel& model, const TangentVector& v) {
  return 2.0 * model.metric_scale() * std::sqrt(std::max(0.0, herm(v.components, v.components).real()));
}

MetricKahler metric_and_kahler_on_lift(const HermitianModel& model, const Vec& p, const Vec& u,
                                       const Vec& v) {
  const double pp = herm(p, p).real();
  const cplx num = herm(u, v) * pp - herm(u, p) * herm(p, v);
  const double s2 = model.metric_scale() * model.metric_scale();
  return {-4.0 * s2 * num.real() / (pp * pp), 4.0 * s2 * num.imag() / (pp * pp)};
}

TriangleArea triangle_area(const HermitianModel& model, const ProjPoint& x, const ProjPoint& y,
                           const ProjPoint& z, int apex, double tol) {
  model.check_dim(x.lift());
  model.check_dim(y.lift());
  model.check_dim(z.lift());
  if (same_point(x, y) || same_point(y, z) || same_point(x, z)) return {0.0, 0.0, true};

  const ProjPoint* v[3] = {&x, &y, &z};
  const int r = ((apex % 3) + 3) % 3;
  const Vec X = v[r]->lift();
  const Vec Y = v[(r + 1) % 3]->lift();
  Vec Z = v[(r + 2) % 3]->lift();
  // Phase Z so that the segment [aY + bZ], a,b >= 0, is the geodesic [y,z].
  const cplx ayz = herm(Y, Z);
  Z *= -ayz / std::abs(ayz);
  const Vec dW = Z - Y;
  const cplx adx = herm(X, dW);

  // Cone parametrisation P(s,u) = (1-u) X + u c(s) W(s), where W(s) runs
  // along [y,z] and the phase c(s) keeps <X, cW> real negative.
  auto inner_integral = [&](double s, double& err) {
    const Vec W = (1.0 - s) * Y + s * Z;
    const cplx a = herm(X, W);
    const double na = std::abs(a);
    const double dna = (std::conj(a) * adx).real() / na;
    const cplx c = -a / na;
    const cplx dc = -(adx / na - a * dna / (na * na));
    const Vec cw = c * W;
    const Vec dws = dc * W + c * dW;
    const Vec dpu = cw - X;
    auto f = [&](double u) {
      const Vec P = (1.0 - u) * X + u * cw;
      if (herm(P, P).real() >= -1e-300) return 0.0;
      return metric_and_kahler_on_lift(model, P, dpu, u * dws).omega;
    };
    return boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, 0.0, 1.0, 18, tol * 0.1,
                                                                         &err);
  };
  double inner_err_sum = 0.0;
  auto outer = [&](double s) {
    double e = 0.0;
    const double val = inner_integral(s, e);
    inner_err_sum = std::max(inner_err_sum, e);
    return val;
  };
  double err = 0.0;
  const double val =
      boost::math::quadrature::gauss_kronrod<double, 21>::integrate(outer, 0.0, 1.0, 18, tol, &err);
  return {val, err + inner_err_sum, false};
}

}  // namespace chaingeo
