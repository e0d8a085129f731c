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
#include <vector>

#include "chaingeo/hermitian.hpp"
#include "chaingeo/isometry.hpp"

namespace chaingeo {

struct CartanValue {
  double value = 0.0;  ///< in [-1, 1]
  bool degenerate = false;
};

/// Cartan angular invariant (2/pi) arg(-<v1,v2><v2,v3><v3,v1>) of three
/// boundary points, normalised so that the counter-clockwise triple
/// (1, i, -1) of the circle gives +1. Degenerate triples give 0 + flag.
CartanValue cartan_invariant(const HermitianModel& model, const ProjPoint& a, const ProjPoint& b,
                             const ProjPoint& c);

/// Unchecked fast path on raw lifts (any scaling).
CartanValue cartan_invariant(const Vec& a, const Vec& b, const Vec& c);

/// Boundary circle of a complex geodesic: a signature (1,1) plane with an
/// orientation relative to the complex one.
class Chain {
 public:
  Chain(Vec a, Vec b, int orientation = 1);

  const Vec& first() const { return a_; }
  const Vec& second() const { return b_; }
  int orientation() const { return orientation_; }
  int p() const { return static_cast<int>(a_.size()) - 1; }

  Chain reversed() const { return Chain(a_, b_, -orientation_); }

  /// J-orthonormal basis of the plane: <e+,e+> = 1, <e-,e-> = -1.
  const Vec& positive() const { return e_pos_; }
  const Vec& negative() const { return e_neg_; }

  /// Euclidean orthonormal basis (columns) of the plane.
  const Mat& span() const { return span_; }

 private:
  Vec a_, b_;
  int orientation_;
  Vec e_pos_, e_neg_;
  Mat span_;
};

Chain chain_through(const HermitianModel& model, const ProjPoint& xi, const ProjPoint& eta);

bool chain_contains(const Chain& chain, const ProjPoint& zeta, double tol = 1e-9);

/// Relative Euclidean distance of the lift of zeta to the chain's plane.
double chain_residual(const Chain& chain, const Vec& zeta);

/// Boundary point e- + exp(i*orientation*t) e+ of the chain.
ProjPoint sample_chain_point(const Chain& chain, double t);

/// Nondegenerate indefinite subspace of signature (k,1).
struct KPlane {
  int k = 0;
  Mat basis;  ///< Euclidean orthonormal columns, (p+1) x (k+1)

  bool contains(const ProjPoint& x, double tol = 1e-9) const;
};

/// The k-plane spanned by the lifts; k + 1 is the rank of the span.
KPlane k_plane_through(const HermitianModel& model, std::span<const ProjPoint> points,
                       double rank_tol = 1e-9);

/// Heisenberg projection pi_xi: boundary minus xi -> C (p = 2 only), whose
/// fibres are the chains through xi. Defined by
///   pi_xi(zeta) = <Z, E> / <Z, xi>
/// with E = (-conj(b2), conj(b1), 0) for the ball coordinates (b1, b2) of xi.
cplx heisenberg_projection(const HermitianModel& model, const ProjPoint& xi,
                           const ProjPoint& zeta);

/// Affine map z -> a z + b of C induced on pi_xi by g in Stab(xi).
struct AffineC {
  cplx a;
  cplx b;
  cplx operator()(cplx z) const { return a * z + b; }
};

/// omega_xi(g): throws DomainError if g does not fix xi.
AffineC heisenberg_affine(const HermitianModel& model, const ProjPoint& xi, const Isometry& g);

/// Uniform random boundary point (round measure on the sphere at infinity).
template <class Rng>
ProjPoint random_boundary_point(int p, Rng& rng);

/// Random interior point with ball radius drawn as tanh(r/2), r ~ U[0, max_dist].
template <class Rng>
ProjPoint random_interior_point(int p, Rng& rng, double max_dist = 3.0);

}  // namespace chaingeo

#include "chaingeo/detail/sampling.hpp"
