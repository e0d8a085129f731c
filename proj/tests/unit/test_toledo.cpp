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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "chaingeo/toledo.hpp"
#include "support.hpp"

namespace chaingeo {
namespace {

// Interior angle at a of the triangle abc from the hyperbolic law of
// cosines in the disc of curvature -1/s^2.
double angle(const HermitianModel& m, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  const double s = m.metric_scale();
  const double ab = distance(m, a, b) / s, ac = distance(m, a, c) / s, bc = distance(m, b, c) / s;
  const double cosg = (std::cosh(ab) * std::cosh(ac) - std::cosh(bc)) / (std::sinh(ab) * std::sinh(ac));
  return std::acos(std::clamp(cosg, -1.0, 1.0));
}

// Signed Gauss-Bonnet area of a triangle lying in the disc (p = 1),
// positive when the vertices run counter-clockwise in ball coordinates.
double gauss_bonnet_area(const HermitianModel& m, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  const double defect = kPi - angle(m, a, b, c) - angle(m, b, c, a) - angle(m, c, a, b);
  const cplx za = a.ball()[0], zb = b.ball()[0], zc = c.ball()[0];
  const double orient = std::imag(std::conj(zb - za) * (zc - za));
  const double s = m.metric_scale();
  return (orient > 0 ? 1.0 : -1.0) * s * s * defect;
}

TEST(Octagon, ToledoIsOne) {
  const SurfaceGroupRep rho = octagon_representation();
  EXPECT_EQ(rho.genus(), 2);
  EXPECT_LT(rho.relator_residual(), 1e-10);
  const HermitianModel m(1);
  const ToledoResult r = toledo_surface_group(m, rho);
  EXPECT_NEAR(r.value, 1.0, 1e-3);
  EXPECT_EQ(r.triangles, 6);
  EXPECT_LT(r.error_bound, 1e-3);
  EXPECT_NEAR(r.area_sum, 4.0 * kPi, 4e-3 * kPi);
}

TEST(Octagon, GaussBonnetCrossOracle) {
  // Triangle areas from angle defects, summed over the same cone of the
  // polygon with vertices at prefix products of the boundary word.
  const SurfaceGroupRep rho = octagon_representation();
  Rng rng = make_rng(1);
  for (double s : {1.0, 0.5}) {
    const HermitianModel m(1, s);
    for (int k = 0; k < 3; ++k) {
      const ProjPoint x = k == 0 ? ProjPoint::origin(1) : random_interior_point(1, rng, 1.0);
      std::vector<ProjPoint> v{x};
      Mat prefix = Mat::Identity(2, 2);
      const auto word = rho.boundary_word();
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        prefix = prefix * word[i];
        v.push_back(ProjPoint::from_lift(prefix * x.lift()));
      }
      double oracle = 0.0;
      for (std::size_t i = 1; i + 1 < v.size(); ++i) oracle += gauss_bonnet_area(m, v[0], v[i], v[i + 1]);
      const ToledoResult r = toledo_surface_group(m, rho, x);
      EXPECT_NEAR(r.area_sum, oracle, 1e-6 * s * s);
      EXPECT_NEAR(oracle / (s * s), 4.0 * kPi, 1e-6);
      EXPECT_NEAR(r.value, 1.0, 1e-3);
    }
  }
}

TEST(Octagon, ConjugationNegates) {
  const HermitianModel m(1);
  const SurfaceGroupRep rho = octagon_representation();
  const ToledoResult a = toledo_surface_group(m, rho);
  const ToledoResult b = toledo_surface_group(m, rho.conjugated());
  EXPECT_NEAR(b.value, -1.0, 1e-3);
  EXPECT_NEAR(a.value, -b.value, 1e-12);
}

TEST(Octagon, HigherTarget) {
  for (int q : {2, 3}) {
    const SurfaceGroupRep rho = octagon_representation(q);
    EXPECT_EQ(rho.p(), q);
    const ToledoResult r = toledo_surface_group(HermitianModel(q), rho, std::nullopt, 2);
    EXPECT_NEAR(r.value, 1.0, 1e-3);
    EXPECT_TRUE(milnor_wood_check(r, 1, 1).ok);
  }
}

TEST(Toledo, TrivialIsZero) {
  const ToledoResult r = toledo_surface_group(HermitianModel(2), SurfaceGroupRep::trivial(2, 2));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(milnor_wood_check(r, 1, 1).margin, 1.0);
}

TEST(Toledo, BasepointAndConjugationInvariance) {
  Rng rng = make_rng(2);
  const HermitianModel m(2);
  const SurfaceGroupRep rho = octagon_representation(2);
  const ToledoResult base = toledo_surface_group(m, rho);
  for (int k = 0; k < 3; ++k) {
    const ToledoResult moved = toledo_surface_group(m, rho, random_interior_point(2, rng, 1.5));
    EXPECT_NEAR(moved.value, base.value, 1e-3);
    const ToledoResult conj = toledo_surface_group(m, rho.conjugate_by(random_isometry(2, 10 + k, 0.5)));
    EXPECT_NEAR(conj.value, base.value, 2.0 * (base.error_bound + conj.error_bound) + 1e-9);
  }
}

TEST(Toledo, RelatorEnforced) {
  std::vector<Isometry> gens = octagon_representation().generators();
  gens[0] = gens[0] * random_isometry(1, 4, 0.3);
  EXPECT_THROW(SurfaceGroupRep(2, gens), DomainError);
  EXPECT_THROW(SurfaceGroupRep(2, std::vector<Isometry>(3, Isometry::identity(1))), DimensionError);
}

TEST(Toledo, RelatorResidualIsProjective) {
  std::vector<Isometry> gens = octagon_representation().generators();
  gens[1] = Isometry(cplx(0.0, 2.0) * gens[1].matrix());
  const SurfaceGroupRep r(2, gens);
  EXPECT_LT(r.relator_residual(), 1e-10);
}

TEST(HomogeneousCocycle, Properties) {
  const HermitianModel m(2);
  Rng rng = make_rng(3);
  const ProjPoint x = random_interior_point(2, rng);
  const Isometry a = random_isometry(2, 1), b = random_isometry(2, 2);
  EXPECT_EQ(homogeneous_cocycle(m, a, a, b, x), 0.0);
  for (int k = 0; k < 10; ++k) {
    const Isometry g1 = random_isometry(2, 20 + k), g2 = random_isometry(2, 40 + k), g3 = random_isometry(2, 60 + k);
    const Isometry h = random_isometry(2, 80 + k);
    const double v = homogeneous_cocycle(m, g1, g2, g3, x);
    EXPECT_LE(std::abs(v), kPi + 1e-3);
    EXPECT_NEAR(homogeneous_cocycle(m, h * g1, h * g2, h * g3, x), v, 1e-5);
    // cocycle identity on four group elements
    const Isometry g4 = random_isometry(2, 100 + k);
    const double s = homogeneous_cocycle(m, g2, g3, g4, x) - homogeneous_cocycle(m, g1, g3, g4, x) +
                     homogeneous_cocycle(m, g1, g2, g4, x) - v;
    EXPECT_NEAR(s, 0.0, 1e-6);
  }
}

TEST(MilnorWood, Examples) {
  ToledoResult r;
  r.value = 1.0;
  const MilnorWood a = milnor_wood_check(r, 1, 1);
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.margin, 0.0);
  r.value = 0.0;
  EXPECT_EQ(milnor_wood_check(r, 1, 1).margin, 1.0);
  r.value = 1.2;
  EXPECT_FALSE(milnor_wood_check(r, 1, 1).ok);
  r.value = -1.2;
  EXPECT_FALSE(milnor_wood_check(r, 1, 1).ok);
  EXPECT_TRUE(milnor_wood_check(r, 1, 2).ok);
  EXPECT_THROW(milnor_wood_check(r, 0, 1), DomainError);
}

}  // namespace
}  // namespace chaingeo
