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
#include <vector>

#include "chaingeo/hermitian.hpp"
#include "chaingeo/isometry.hpp"
#include "chaingeo/random.hpp"

namespace chaingeo {

/// Monte-Carlo estimate with its standard error; serialised as
/// {estimate, stderr, N, seed}.
struct McEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// The K-invariant probability measure nu_0 on the boundary, K the
/// stabiliser of the origin: uniform on the unit sphere of C^p.
class VisualMeasure {
 public:
  VisualMeasure(int p, std::uint64_t seed) : p_(p), seed_(seed) {}

  int p() const { return p_; }
  std::uint64_t seed() const { return seed_; }

  /// Ball coordinates (unit vectors) of n samples from stream `stream`.
  std::vector<Vec> sample_ball(std::size_t n, std::uint64_t stream = 0) const;
  std::vector<ProjPoint> sample(std::size_t n, std::uint64_t stream = 0) const;

 private:
  int p_;
  std::uint64_t seed_;
};

/// Volume entropy of the model (exponential growth rate of ball volumes).
struct Entropy {
  double value = 0.0;
  int p = 0;
  double metric_scale = 1.0;
  double fit_residual = 0.0;  ///< max relative residual of the growth fit
};

/// B_xi(x,y) = lim_t d(x, gamma(t)) - d(y, gamma(t)), gamma a ray to xi.
double busemann(const HermitianModel& model, const ProjPoint& xi, const ProjPoint& x,
                const ProjPoint& y);

/// e^xi(x) = exp(-h B_xi(x, 0)).
double e_xi(const HermitianModel& model, const Entropy& entropy, const ProjPoint& xi,
            const ProjPoint& x);

/// Fits log vol B(r) = h r + a + b e^{-r/s} + c e^{-2r/s} on r/s in [5, 15]
/// using the closed-form sphere area sinh(r/s) sinh^{2p-2}(r/2s).
/// Throws NumericalError when the fit residual exceeds 2%.
Entropy volume_entropy(const HermitianModel& model);

/// log of the ball volume (up to an additive constant) at radius r.
double log_ball_volume(const HermitianModel& model, double r);

/// Monte-Carlo estimate of the integral of e^xi(x) against nu_0.
McEstimate integrate_e_xi(const HermitianModel& model, const Entropy& entropy, const ProjPoint& x,
                          std::size_t n, std::uint64_t seed);

struct TransformTerm {
  double pushed = 0.0;    ///< estimate of the integral of f d(g_* nu_0)
  double weighted = 0.0;  ///< estimate of the integral of f e^{-hB(g0,0)} dnu_0
  double stderr_ = 0.0;   ///< standard error of the paired difference
};

struct MeasureTransformStat {
  std::vector<TransformTerm> terms;  ///< one per test function
  double max_relative_deviation = 0.0;
  double max_z = 0.0;  ///< max |difference| / stderr
  std::size_t n = 0;
  std::uint64_t seed = 0;

  bool within(double sigmas) const { return max_z < sigmas; }
};

/// Compares the integrals of a fixed family of test functions against
/// g_* nu_0 and against e^{-h B_xi(g0,0)} nu_0, sharing the nu_0 samples.
MeasureTransformStat measure_transform_check(const HermitianModel& model, const Entropy& entropy,
                                             const Isometry& g, std::size_t n, std::uint64_t seed);

}  // namespace chaingeo
