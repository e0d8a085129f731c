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


#include "chaingeo/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "chaingeo/random.hpp"

namespace chaingeo {

namespace {

Mat form_matrix(Eigen::Index n) {
  Mat j = Mat::Identity(n, n);
  j(n - 1, n - 1) = -1.0;
  return j;
}

}  // namespace

Isometry::Isometry(Mat matrix, double tol) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2)
    throw DimensionError("Isometry: matrix must be square of size >= 2");
  const Eigen::Index n = m_.rows();
  const Mat j = form_matrix(n);
  const Mat g = m_.adjoint() * j * m_;
  lambda_ = (j * g).trace().real() / static_cast<double>(n);
  if (!(lambda_ > 0.0)) throw DomainError("Isometry: matrix does not preserve the form with lambda > 0");
  if (form_residual() > tol)
    throw DomainError("Isometry: form residual " + std::to_string(form_residual()) +
                      " exceeds tolerance");
}

Isometry Isometry::identity(int p) { return Isometry(Mat::Identity(p + 1, p + 1)); }

double Isometry::form_residual() const {
  const Mat j = form_matrix(m_.rows());
  const Mat r = m_.adjoint() * j * m_ - lambda_ * j;
  return r.norm() / m_.squaredNorm();
}

Isometry Isometry::inverse() const {
  const Mat j = form_matrix(m_.rows());
  return Isometry(j * m_.adjoint() * j / lambda_, 1e-8);
}

Isometry Isometry::operator*(const Isometry& other) const {
  if (other.m_.rows() != m_.rows()) throw DimensionError("Isometry: dimension mismatch");
  return Isometry(m_ * other.m_, 1e-8);
}

Mat Isometry::normalized() const { return m_ / std::sqrt(lambda_); }

double EmbeddingMap::isometry_residual() const {
  const Mat jq = form_matrix(w.rows());
  const Mat jp = form_matrix(w.cols());
  const Mat r = w.adjoint() * jq * w - lambda * jp;
  return r.cwiseAbs().maxCoeff() / lambda;
}

Vec EmbeddingMap::apply_lift(const Vec& v) const {
  if (v.size() != w.cols()) throw DimensionError("EmbeddingMap: dimension mismatch");
  return antiholomorphic ? Vec(w * v.conjugate()) : Vec(w * v);
}

ProjPoint EmbeddingMap::apply(const ProjPoint& x) const {
  return ProjPoint::from_lift(apply_lift(x.lift()));
}

ProjPoint apply(const Isometry& g, const ProjPoint& x) {
  if (x.lift().size() != g.matrix().cols()) throw DimensionError("apply: dimension mismatch");
  return ProjPoint::from_lift(g.matrix() * x.lift());
}

TangentVector apply(const Isometry& g, const TangentVector& v) {
  if (v.components.size() != g.matrix().cols()) throw DimensionError("apply: dimension mismatch");
  return tangent_from_lift(g.matrix() * v.base.lift(), g.matrix() * v.components);
}

std::string to_string(IsometryType t) {
  switch (t) {
    case IsometryType::Elliptic: return "elliptic";
    case IsometryType::Parabolic: return "parabolic";
    case IsometryType::Hyperbolic: return "hyperbolic";
    case IsometryType::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Classification classify(const Isometry& g) {
  const Mat m = g.normalized();
  const Eigen::Index n = m.rows();
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  const Vec mu = es.eigenvalues();
  double lo = mu.cwiseAbs().minCoeff();
  double hi = mu.cwiseAbs().maxCoeff();
  const double spread = hi / lo - 1.0;
  if (spread > 1e-3) return {IsometryType::Hyperbolic, spread};

  // Cluster nearly equal eigenvalues; a cluster whose eigenspace is smaller
  // than its size is a (perturbed) Jordan block.
  constexpr double kCluster = 1e-5;
  const double sv_tol = 1e-4 * std::max(1.0, m.norm());
  const Mat j = form_matrix(n);
  std::vector<bool> used(static_cast<size_t>(n), false);
  bool defective = false;
  bool negative = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (used[static_cast<size_t>(i)]) continue;
    cplx centre = 0.0;
    int size = 0;
    for (Eigen::Index k = i; k < n; ++k) {
      if (!used[static_cast<size_t>(k)] && std::abs(mu[k] - mu[i]) < kCluster) {
        used[static_cast<size_t>(k)] = true;
        centre += mu[k];
        ++size;
      }
    }
    centre /= static_cast<double>(size);
    const Mat a = m - centre * Mat::Identity(n, n);
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int geo = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv[k] < sv_tol) ++geo;
    if (geo < size) defective = true;
    if (geo == 0) continue;
    const Mat basis = svd.matrixV().rightCols(geo);
    const Mat restricted = basis.adjoint() * j * basis;
    Eigen::SelfAdjointEigenSolver<Mat> rs(restricted);
    if (rs.eigenvalues().minCoeff() < -1e-8) negative = true;
  }
  // A fixed interior point with a non-unimodular spectrum is a near-identity
  // element whose type cannot be resolved at this precision.
  if (negative) return {spread > kTolCls ? IsometryType::Indeterminate : IsometryType::Elliptic, spread};
  if (defective) return {IsometryType::Parabolic, spread};
  if (spread > kTolCls) return {IsometryType::Hyperbolic, spread};
  return {IsometryType::Indeterminate, spread};
}

EmbeddingMap standard_embedding(int p, int q) {
  if (p < 1 || q < p) throw DomainError("standard_embedding: need 1 <= p <= q");
  Mat w = Mat::Zero(q + 1, p + 1);
  for (int i = 0; i < p; ++i) w(i, i) = 1.0;
  w(q, p) = 1.0;
  return {w, 1.0, false};
}

Isometry random_isometry(int p, std::uint64_t seed, double scale) {
  if (p < 1) throw DomainError("random_isometry: p must be >= 1");
  Rng rng = make_rng(seed, 0x150);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = p + 1;
  Mat s = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    s(i, i) = cplx(0.0, scale * gauss(rng));
    for (int k = i + 1; k < n; ++k) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      s(i, k) = scale * cplx(re, im);
      s(k, i) = -std::conj(s(i, k));
    }
  }
  const Mat a = form_matrix(n) * s;
  return Isometry(a.exp(), 1e-9);
}

Isometry transvection(const ProjPoint& x) {
  if (!x.is_interior()) throw DomainError("transvection: point must be interior");
  const Vec z = x.ball();
  const Eigen::Index p = z.size();
  const double r2 = z.squaredNorm();
  const double gamma = 1.0 / std::sqrt(1.0 - r2);
  Mat t = Mat::Identity(p + 1, p + 1);
  if (r2 > 0.0) t.topLeftCorner(p, p) += (gamma - 1.0) / r2 * (z * z.adjoint());
  t.topRightCorner(p, 1) = gamma * z;
  t.bottomLeftCorner(1, p) = gamma * z.adjoint();
  t(p, p) = gamma;
  return Isometry(t, 1e-8);
}

Mat conjugate_matrix(const Mat& m) { return m.conjugate(); }

}  // namespace chaingeo
