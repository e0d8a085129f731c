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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chaingeo/busemann.hpp"
#include "chaingeo/hermitian.hpp"
#include "chaingeo/isometry.hpp"

namespace chaingeo {

/// Bounded function on (n+1)-tuples of boundary points, evaluated on
/// canonical boundary lifts.
struct BoundaryCocycle {
  int arity = 1;
  std::function<double(std::span<const Vec>)> eval;
  double sup_norm_bound = 1.0;
  bool alternating = false;

  double operator()(std::span<const Vec> xi) const;
};

BoundaryCocycle constant_cocycle(int arity, double value);

/// (xi0, xi1, xi2) -> c_p(xi0, xi1, xi2).
BoundaryCocycle cartan_cocycle();

/// Coboundary of a 2-point cocycle: dc(x0,x1,x2) = c(x1,x2) - c(x0,x2) + c(x0,x1).
BoundaryCocycle coboundary(const BoundaryCocycle& c);

/// Max |value| and alternation defect over the given tuples.
struct CocycleAudit {
  double max_abs = 0.0;
  double alternation_defect = 0.0;
  bool bounded = true;
};

CocycleAudit audit_cocycle(const BoundaryCocycle& c, std::span<const std::vector<Vec>> tuples);

/// Map of boundaries dH_C^p -> dH_C^q: closed form (embedding), a sample
/// table with nearest-neighbour completion, or an arbitrary function of lifts.
class BoundaryMap {
 public:
  static BoundaryMap embedding(EmbeddingMap w);
  static BoundaryMap table(std::vector<std::pair<ProjPoint, ProjPoint>> samples);
  static BoundaryMap function(int p, int q, std::function<Vec(const Vec&)> f);
  static BoundaryMap constant(int p, const ProjPoint& value);

  int p() const { return p_; }
  int q() const { return q_; }

  /// A lift of the image of the boundary point with lift `xi`.
  Vec apply_lift(const Vec& xi) const;
  ProjPoint apply(const ProjPoint& xi) const;

  /// Set for maps built by embedding().
  const std::optional<EmbeddingMap>& closed_form() const { return embedding_; }

 private:
  BoundaryMap(int p, int q, std::function<Vec(const Vec&)> f)
      : p_(p), q_(q), f_(std::move(f)) {}
  int p_;
  int q_;
  std::function<Vec(const Vec&)> f_;
  std::optional<EmbeddingMap> embedding_;
};

/// c_q(phi xi0, phi xi1, phi xi2); degenerate triples count as 0.
BoundaryCocycle pullback_cartan(const BoundaryMap& phi);

struct McOptions {
  std::size_t n = 200000;
  std::uint64_t seed = 0;
  int batches = 20;
  int threads = 1;
};

struct FormEvaluation {
  ProjPoint x;
  std::vector<TangentVector> vectors;
  double value = 0.0;
  double mc_stderr = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<double> batch_values;

  /// |value| <= h^n ||c|| prod|v_i| (1 + 3 stderr_rel).
  bool within_bound(const HermitianModel& model, double h, double sup_norm) const;
};

/// Monte-Carlo value of delta_infinity(c) at x on v_1..v_n, n = arity - 1 <= 2.
/// Samples are drawn from nu_x = (T_x)_* nu_0, which has density
/// e^xi(x) against nu_0; batches use seeds derived from (seed, batch).
FormEvaluation delta_form_eval(const HermitianModel& model, const Entropy& entropy,
                               const BoundaryCocycle& c, const ProjPoint& x,
                               std::span<const TangentVector> v, const McOptions& opts);

FormEvaluation pullback_kappa_form(const HermitianModel& model, const Entropy& entropy,
                                   const BoundaryMap& phi, const ProjPoint& x,
                                   const TangentVector& u, const TangentVector& v,
                                   const McOptions& opts);

/// Field of 2-forms: (u, v) tangent at a common base point -> value.
using TwoFormField = std::function<double(const TangentVector&, const TangentVector&)>;
using OneFormField = std::function<double(const TangentVector&)>;

struct FdDerivative {
  double value = 0.0;
  double fd_error = 0.0;  ///< Richardson estimate of the truncation error
};

/// Central-difference d(omega)(u, v, w) in the affine chart
/// t -> [X + t_1 u + t_2 v + t_3 w] at x, Richardson-extrapolated.
FdDerivative exterior_derivative_fd(const TwoFormField& omega, const TangentVector& u,
                                    const TangentVector& v, const TangentVector& w,
                                    double step = 1e-3);

/// d(alpha)(u, v) of a 1-form field, same scheme.
FdDerivative exterior_derivative_fd(const OneFormField& alpha, const TangentVector& u,
                                    const TangentVector& v, double step = 1e-3);

struct ClosednessReport {
  double value = 0.0;      ///< mean over batches of the FD dω
  double mc_stderr = 0.0;  ///< batch-means standard error
  double fd_error = 0.0;
  bool noise_warning = false;  ///< MC noise dominates the step^2 signal band
  std::size_t n = 0;
  std::uint64_t seed = 0;

  bool closed(double sigmas = 3.0) const {
    return std::abs(value) <= sigmas * mc_stderr + 10.0 * fd_error + 1e-12;
  }
};

/// d(delta_infinity c)(u, v, w) at x for a 3-point cocycle; each batch
/// differentiates its own common-random-number estimator.
ClosednessReport closedness_check(const HermitianModel& model, const Entropy& entropy,
                                  const BoundaryCocycle& c, const TangentVector& u,
                                  const TangentVector& v, const TangentVector& w,
                                  const McOptions& opts, double step = 1e-3);

struct CommutationReport {
  double lhs = 0.0;  ///< delta^(2)(dc)(u, v)
  double rhs = 0.0;  ///< d(delta^(1) c)(u, v)
  double stderr_ = 0.0;
  double fd_error = 0.0;

  bool agree(double sigmas = 3.0) const {
    return std::abs(lhs - rhs) <= sigmas * stderr_ + 10.0 * fd_error + 1e-12;
  }
};

/// Compares delta^(2)(dc1) with d(delta^(1) c1) for a 2-point cocycle c1.
CommutationReport commutation_check(const HermitianModel& model, const Entropy& entropy,
                                    const BoundaryCocycle& c1, const TangentVector& u,
                                    const TangentVector& v, const McOptions& opts,
                                    double step = 1e-3);

/// Isometry of H_C^q extending g through the standard embedding and fixing
/// the orthogonal complement.
Isometry extend_standard(const Isometry& g, int q);

struct ChainFormulaReport {
  double residual = 0.0;
  std::size_t triples = 0;
  double equivariance_defect = 0.0;
};

/// max |c_q(phi xi1, phi xi2, phi xi3) - i c_p(xi1, xi2, xi3)| over sampled
/// chain triples. `generators` pairs source and target isometries; phi must
/// intertwine them (DomainError otherwise).
ChainFormulaReport chain_formula_check(const HermitianModel& source, const HermitianModel& target,
                                       std::span<const std::pair<Isometry, Isometry>> generators,
                                       const BoundaryMap& phi, double declared_i,
                                       std::size_t triples, std::uint64_t seed);

}  // namespace chaingeo
