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


#include "chaingeo/cartan.hpp"

#include <algorithm>
#include <cmath>

namespace chaingeo {

CartanValue cartan_invariant(const Vec& a, const Vec& b, const Vec& c) {
  const Vec ua = a / a.norm();
  const Vec ub = b / b.norm();
  const Vec uc = c / c.norm();
  const cplx ab = herm(ua, ub), bc = herm(ub, uc), ca = herm(uc, ua);
  // each factor vanishes only at a coincident pair
  if (std::min({std::abs(ab), std::abs(bc), std::abs(ca)}) <= 1e-10) return {0.0, true};
  const cplx t = ab * bc * ca;
  const double v = 2.0 / kPi * std::arg(-t);
  return {std::clamp(v, -1.0, 1.0), false};
}

CartanValue cartan_invariant(const HermitianModel& model, const ProjPoint& a, const ProjPoint& b,
                             const ProjPoint& c) {
  model.check_dim(a.lift());
  model.check_dim(b.lift());
  model.check_dim(c.lift());
  if (!a.is_boundary() || !b.is_boundary() || !c.is_boundary())
    throw DomainError("cartan_invariant: points must lie on the boundary");
  if (same_point(a, b) || same_point(b, c) || same_point(a, c)) return {0.0, true};
  return cartan_invariant(a.lift(), b.lift(), c.lift());
}

Chain::Chain(Vec a, Vec b, int orientation)
    : a_(std::move(a)), b_(std::move(b)), orientation_(orientation >= 0 ? 1 : -1) {
  if (a_.size() != b_.size() || a_.size() < 2) throw DimensionError("Chain: dimension mismatch");
  const Eigen::Index n = a_.size();
  Mat basis(n, 2);
  basis.col(0) = a_ / a_.norm();
  basis.col(1) = b_ / b_.norm();
  Mat j = Mat::Identity(n, n);
  j(n - 1, n - 1) = -1.0;
  const Mat gram = basis.adjoint() * j * basis;
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  const auto& ev = es.eigenvalues();
  if (!(ev[0] < -1e-10 && ev[1] > 1e-10))
    throw DomainError("Chain: span does not have signature (1,1)");
  e_neg_ = basis * es.eigenvectors().col(0) / std::sqrt(-ev[0]);
  e_pos_ = basis * es.eigenvectors().col(1) / std::sqrt(ev[1]);
  Eigen::HouseholderQR<Mat> qr(basis);
  span_ = qr.householderQ() * Mat::Identity(n, 2);
}

Chain chain_through(const HermitianModel& model, const ProjPoint& xi, const ProjPoint& eta) {
  model.check_dim(xi.lift());
  model.check_dim(eta.lift());
  if (!xi.is_boundary() || !eta.is_boundary())
    throw DomainError("chain_through: points must lie on the boundary");
  if (same_point(xi, eta)) throw DomainError("chain_through: points must be distinct");
  return Chain(xi.lift(), eta.lift(), 1);
}

double chain_residual(const Chain& chain, const Vec& zeta) {
  if (zeta.size() != chain.span().rows()) throw DimensionError("chain_residual: dimension mismatch");
  const Vec z = zeta / zeta.norm();
  const Vec r = z - chain.span() * (chain.span().adjoint() * z);
  return r.norm();
}

bool chain_contains(const Chain& chain, const ProjPoint& zeta, double tol) {
  return chain_residual(chain, zeta.lift()) <= tol;
}

ProjPoint sample_chain_point(const Chain& chain, double t) {
  const cplx phase = std::polar(1.0, chain.orientation() * t);
  return ProjPoint::from_lift(chain.negative() + phase * chain.positive());
}

bool KPlane::contains(const ProjPoint& x, double tol) const {
  if (x.lift().size() != basis.rows()) throw DimensionError("KPlane: dimension mismatch");
  const Vec z = x.lift() / x.lift().norm();
  return (z - basis * (basis.adjoint() * z)).norm() <= tol;
}

KPlane k_plane_through(const HermitianModel& model, std::span<const ProjPoint> points,
                       double rank_tol) {
  if (points.size() < 2) throw DomainError("k_plane_through: need at least two points");
  const Eigen::Index n = model.dim();
  Mat m(n, static_cast<Eigen::Index>(points.size()));
  for (size_t i = 0; i < points.size(); ++i) {
    model.check_dim(points[i].lift());
    m.col(static_cast<Eigen::Index>(i)) = points[i].lift() / points[i].lift().norm();
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > rank_tol * sv[0]) ++rank;
  if (rank < 2) throw DomainError("k_plane_through: points span a degenerate subspace");
  const Mat basis = svd.matrixU().leftCols(rank);
  const Mat restricted = basis.adjoint() * model.form() * basis;
  Eigen::SelfAdjointEigenSolver<Mat> es(restricted);
  int neg = 0;
  int pos = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double e = es.eigenvalues()[i];
    if (e < -1e-10) ++neg;
    else if (e > 1e-10) ++pos;
  }
  if (neg != 1 || pos != rank - 1)
    throw DomainError("k_plane_through: span is not of signature (k,1)");
  return {rank - 1, basis};
}

cplx heisenberg_projection(const HermitianModel& model, const ProjPoint& xi,
                           const ProjPoint& zeta) {
  if (model.p() != 2) throw DomainError("heisenberg_projection: only defined for p = 2");
  model.check_dim(xi.lift());
  model.check_dim(zeta.lift());
  if (!xi.is_boundary() || !zeta.is_boundary())
    throw DomainError("heisenberg_projection: points must lie on the boundary");
  if (same_point(xi, zeta)) throw DomainError("heisenberg_projection: zeta equals xi");
  const Vec b = xi.ball();
  Vec e(3);
  e << -std::conj(b[1]), std::conj(b[0]), 0.0;
  const Vec& z = zeta.lift();
  return herm(z, e) / herm(z, xi.lift());
}

AffineC heisenberg_affine(const HermitianModel& model, const ProjPoint& xi, const Isometry& g) {
  if (model.p() != 2) throw DomainError("heisenberg_affine: only defined for p = 2");
  if (!same_point(apply(g, xi), xi, 1e-9)) throw DomainError("heisenberg_affine: g does not fix xi");
  const Mat j = model.form();
  const Mat sharp = j * g.matrix().adjoint() * j;
  const Vec b = xi.ball();
  Vec e(3);
  e << -std::conj(b[1]), std::conj(b[0]), 0.0;
  const Vec& x = xi.lift();
  const cplx mu = x.dot(sharp * x) / x.squaredNorm();
  const Vec se = sharp * e;
  const cplx alpha = herm(se, e);
  const cplx beta = x.dot(se - alpha * e) / x.squaredNorm();
  return {std::conj(alpha) / std::conj(mu), std::conj(beta) / std::conj(mu)};
}

}  // namespace chaingeo
