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


#include "chaingeo/projective.hpp"

#include <limits>

#include <Eigen/Dense>

#include "chaingeo/random.hpp"

namespace chaingeo {

cplx inversion(cplx center, double radius, cplx z) {
  const cplx d = z - center;
  if (std::abs(d) == 0.0) throw DomainError("inversion: z equals the center");
  return center + radius * radius / std::conj(d);
}

CircleFit fit_circle(const std::vector<cplx>& z) {
  if (z.size() < 3) throw DomainError("fit_circle: need at least 3 points");
  // x^2 + y^2 = 2 a x + 2 b y + c.
  Eigen::MatrixXd a(z.size(), 3);
  Eigen::VectorXd rhs(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    a(i, 0) = 2.0 * z[i].real();
    a(i, 1) = 2.0 * z[i].imag();
    a(i, 2) = 1.0;
    rhs[i] = std::norm(z[i]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv[2] <= 1e-12 * sv[0]) {
    return {cplx(0.0), std::numeric_limits<double>::infinity(), 0.0};
  }
  const Eigen::VectorXd sol = svd.solve(rhs);
  CircleFit f{cplx(sol[0], sol[1]), 0.0, 0.0};
  f.radius = std::sqrt(sol[2] + std::norm(f.center));
  for (const cplx& w : z) f.residual = std::max(f.residual, std::abs(std::abs(w - f.center) - f.radius));
  return f;
}

std::string to_string(AffineMode m) {
  switch (m) {
    case AffineMode::Holomorphic: return "affine";
    case AffineMode::Antiholomorphic: return "anti-affine";
    case AffineMode::RealAffine: return "real-affine";
  }
  return "affine";
}

namespace {

// Complex least squares; returns (solution, rms residual).
std::pair<Eigen::VectorXcd, double> lsq(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b) {
  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
  const double rms = (a * x - b).norm() / std::sqrt(static_cast<double>(b.size()));
  return {x, rms};
}

}  // namespace

AffineFit fit_affine(const std::vector<std::pair<cplx, cplx>>& samples, double tol) {
  const auto n = static_cast<Eigen::Index>(samples.size());
  if (n < 3) throw DomainError("fit_affine: need at least 3 samples");
  Eigen::MatrixXd geom(n, 3);
  Eigen::MatrixXcd holo(n, 2), anti(n, 2), real(n, 3);
  Eigen::VectorXcd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx z = samples[i].first;
    geom.row(i) << z.real(), z.imag(), 1.0;
    holo.row(i) << z, 1.0;
    anti.row(i) << std::conj(z), 1.0;
    real.row(i) << z, std::conj(z), 1.0;
    w[i] = samples[i].second;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(geom);
  const auto& sv = svd.singularValues();
  AffineFit f;
  f.condition = sv[0] / std::max(sv[2], 1e-300);
  if (sv[2] <= 1e-10 * sv[0]) throw NumericalError("fit_affine: samples are (nearly) collinear");
  const auto [xh, rh] = lsq(holo, w);
  const auto [xa, ra] = lsq(anti, w);
  const auto [xr, rr] = lsq(real, w);
  f.residual_holo = rh;
  f.residual_anti = ra;
  f.residual_real = rr;
  f.alpha = xr[0];
  f.beta = xr[1];
  f.c_real = xr[2];
  const double scale = std::max(1.0, w.norm() / std::sqrt(static_cast<double>(n)));
  const double best = std::min(rh, ra);
  if (best > tol * scale && rr <= tol * scale) {
    f.mode = AffineMode::RealAffine;
    f.residual = rr;
    f.lambda = xr[0];
    f.c = xr[2];
  } else if (rh <= ra) {
    f.mode = AffineMode::Holomorphic;
    f.residual = rh;
    f.lambda = xh[0];
    f.c = xh[1];
  } else {
    f.mode = AffineMode::Antiholomorphic;
    f.residual = ra;
    f.lambda = xa[0];
    f.c = xa[1];
  }
  f.orientation = std::norm(f.alpha) >= std::norm(f.beta) ? 1 : -1;
  return f;
}

namespace {

int orientation(cplx a, cplx b, cplx c) {
  const cplx u = b - a;
  const cplx v = c - a;
  const double cr = u.real() * v.imag() - u.imag() * v.real();
  return cr > 0.0 ? 1 : (cr < 0.0 ? -1 : 0);
}

}  // namespace

OrderCheck weakly_order_preserving_check(const std::vector<std::pair<cplx, cplx>>& samples,
                                         double tol) {
  const std::size_t n = samples.size();
  if (n < 3) throw DomainError("weakly_order_preserving_check: need at least 3 samples");
  OrderCheck out;
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto& [x1, y1] = samples[i];
    const auto& [x2, y2] = samples[j];
    const auto& [x3, y3] = samples[k];
    if (std::abs(x1 - x2) <= tol || std::abs(x2 - x3) <= tol || std::abs(x1 - x3) <= tol) return true;
    if (std::abs(y1 - y2) <= tol || std::abs(y2 - y3) <= tol || std::abs(y1 - y3) <= tol) return true;
    ++out.triples_checked;
    if (orientation(x1, x2, x3) != orientation(y1, y2, y3)) {
      out.preserving = false;
      out.witness = std::array<std::size_t, 3>{i, j, k};
      return false;
    }
    return true;
  };
  constexpr std::size_t kExhaustive = 200;
  if (n <= kExhaustive) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (!check(i, j, k)) return out;
    return out;
  }
  Rng rng = make_rng(0x0dde, n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int t = 0; t < 1000000; ++t) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (i == j || j == k || i == k) continue;
    if (!check(i, j, k)) return out;
  }
  return out;
}

}  // namespace chaingeo
