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

#include <cstdint>
#include <string>

#include "chaingeo/hermitian.hpp"

namespace chaingeo {

/// Element of PU(p,1), stored as a representative M with M^* J M = lambda J,
/// lambda > 0. The determinant is never normalised.
class Isometry {
 public:
  /// Validates the form-preservation invariant (relative residual `tol`).
  explicit Isometry(Mat matrix, double tol = 1e-10);

  static Isometry identity(int p);

  const Mat& matrix() const { return m_; }
  int p() const { return static_cast<int>(m_.rows()) - 1; }
  double lambda() const { return lambda_; }

  /// Relative residual of M^* J M - lambda J.
  double form_residual() const;

  Isometry inverse() const;
  Isometry operator*(const Isometry& other) const;

  /// Matrix rescaled so that lambda = 1.
  Mat normalized() const;

 private:
  Mat m_;
  double lambda_;
};

/// Complex-linear W: C^{p+1} -> C^{q+1} with <Wv,Ww>_q = lambda <v,w>_p.
/// When `antiholomorphic` is set the boundary map is xi -> W conj(xi).
struct EmbeddingMap {
  Mat w;
  double lambda = 1.0;
  bool antiholomorphic = false;

  int p() const { return static_cast<int>(w.cols()) - 1; }
  int q() const { return static_cast<int>(w.rows()) - 1; }

  /// max |<Wv,Ww>_q - lambda <v,w>_p| over basis pairs, relative to lambda.
  double isometry_residual() const;

  Vec apply_lift(const Vec& v) const;
  ProjPoint apply(const ProjPoint& x) const;
};

/// Projective action g.x. Preserves the point kind.
ProjPoint apply(const Isometry& g, const ProjPoint& x);

/// Action on a tangent vector: dg_x(v) at g.x.
TangentVector apply(const Isometry& g, const TangentVector& v);

enum class IsometryType { Elliptic, Parabolic, Hyperbolic, Indeterminate };

std::string to_string(IsometryType t);

inline constexpr double kTolCls = 1e-8;

struct Classification {
  IsometryType type;
  double modulus_spread;  ///< max|mu| / min|mu| - 1 of the normalised spectrum
};

Classification classify(const Isometry& g);

/// (z_1..z_p, w) -> (z_1..z_p, 0..0, w).
EmbeddingMap standard_embedding(int p, int q);

/// exp(A) for A in u(p,1) with Gaussian entries (A = J S, S skew-Hermitian);
/// `scale` multiplies the entries. Deterministic per seed.
Isometry random_isometry(int p, std::uint64_t seed, double scale = 1.0);

/// The transvection along the geodesic through the origin that maps the
/// origin to x and maps the canonical lift e_{p+1} to the canonical lift of x.
Isometry transvection(const ProjPoint& x);

/// Entrywise complex conjugate of M (an anti-holomorphic isometry).
Mat conjugate_matrix(const Mat& m);

}  // namespace chaingeo
