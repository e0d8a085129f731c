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

namespace chaingeo {

namespace detail {

template <class Rng>
Vec random_unit_vector(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v[i] = cplx(re, im);
  }
  return v / v.norm();
}

}  // namespace detail

template <class Rng>
ProjPoint random_boundary_point(int p, Rng& rng) {
  return ProjPoint::from_ball(detail::random_unit_vector(p, rng));
}

template <class Rng>
ProjPoint random_interior_point(int p, Rng& rng, double max_dist) {
  std::uniform_real_distribution<double> uni(0.0, max_dist);
  const double r = std::tanh(uni(rng) / 2.0);
  return ProjPoint::from_ball(r * detail::random_unit_vector(p, rng));
}

}  // namespace chaingeo
