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

#include <cmath>
#include <random>

#include "chaingeo/cartan.hpp"
#include "chaingeo/hermitian.hpp"
#include "chaingeo/isometry.hpp"
#include "chaingeo/random.hpp"

namespace chaingeo::testing {

inline Vec random_vec(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v[i] = cplx(re, im);
  }
  return v;
}

inline TangentVector random_tangent(const ProjPoint& x, Rng& rng) {
  return tangent_at(x, random_vec(x.p() + 1, rng));
}

inline TangentVector unit_tangent(const HermitianModel& m, const ProjPoint& x, Rng& rng) {
  TangentVector t = random_tangent(x, rng);
  t.components /= norm(m, t);
  return t;
}

/// Bergman metric in ball coordinates z with tangent dz, rescaled by s^2:
/// 4 s^2 ((1 - |z|^2)|dz|^2 + |<dz, z>|^2) / (1 - |z|^2)^2.
inline double bergman_metric(const Vec& z, const Vec& dz, double s) {
  const double r2 = z.squaredNorm();
  return 4.0 * s * s * ((1.0 - r2) * dz.squaredNorm() + std::norm(z.dot(dz))) / ((1.0 - r2) * (1.0 - r2));
}

/// Tangent vector at the point with ball coordinates z along ball direction dz.
inline TangentVector ball_tangent(const Vec& z, const Vec& dz) {
  Vec lift(z.size() + 1);
  lift.head(z.size()) = z;
  lift[z.size()] = 1.0;
  Vec dl = Vec::Zero(z.size() + 1);
  dl.head(z.size()) = dz;
  return tangent_from_lift(lift, dl);
}

}  // namespace chaingeo::testing
