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

#include <array>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chaingeo/hermitian.hpp"
#include "support.hpp"

namespace chaingeo {
namespace {

using testing::ball_tangent;
using testing::bergman_metric;
using testing::random_vec;

Vec e(int n, int i) {
  Vec v = Vec::Zero(n);
  v[i] = 1.0;
  return v;
}

TEST(Inner, Examples) {
  const HermitianModel m(1);
  EXPECT_EQ(inner(m, e(2, 1), e(2, 1)), cplx(-1.0));
  const HermitianModel m2(2);
  EXPECT_EQ(inner(m2, e(3, 0), e(3, 1)), cplx(0.0));
  Vec x(2), y(2);
  x << 1.0, 1.0;
  y << cplx(0, 1), 1.0;
  // 1 * conj(i) - 1 * conj(1)
  EXPECT_NEAR(std::abs(inner(m, x, y) - cplx(-1.0, -1.0)), 0.0, 1e-15);
  EXPECT_THROW(inner(m, e(3, 0), e(3, 0)), DimensionError);
}

TEST(Inner, HermitianSymmetry) {
  Rng rng = make_rng(1);
  const HermitianModel m(3);
  for (int i = 0; i < 50; ++i) {
    const Vec x = random_vec(4, rng), y = random_vec(4, rng);
    EXPECT_NEAR(std::abs(inner(m, x, y) - std::conj(inner(m, y, x))), 0.0, 1e-13);
  }
}

TEST(ProjPoint, ClassifiesAndCanonicalises) {
  Vec v(3);
  v << 0.1, cplx(0.0, 0.2), cplx(0.0, 2.0);
  const ProjPoint x = ProjPoint::from_lift(v);
  EXPECT_TRUE(x.is_interior());
  EXPECT_NEAR(herm(x.lift(), x.lift()).real(), -1.0, 1e-14);
  EXPECT_NEAR(x.lift()[2].imag(), 0.0, 1e-15);
  EXPECT_GT(x.lift()[2].real(), 0.0);

  Vec b(3);
  b << 0.6, cplx(0.0, 0.8), 1.0;
  const ProjPoint xi = ProjPoint::from_lift(b * cplx(3.0, -1.0));
  EXPECT_TRUE(xi.is_boundary());
  EXPECT_NEAR(xi.lift().norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(herm(xi.lift(), xi.lift())), 0.0, 1e-15);

  Vec pos(3);
  pos << 1.0, 0.0, 0.5;
  EXPECT_THROW(ProjPoint::from_lift(pos), DomainError);
  EXPECT_THROW(ProjPoint::from_lift(Vec::Zero(3)), DomainError);
}

TEST(Distance, ZeroAndSymmetric) {
  Rng rng = make_rng(2);
  const HermitianModel m(2, 1.7);
  for (int i = 0; i < 20; ++i) {
    const ProjPoint x = random_interior_point(2, rng), y = random_interior_point(2, rng);
    EXPECT_NEAR(distance(m, x, x), 0.0, 1e-7);
    EXPECT_NEAR(distance(m, x, y), distance(m, y, x), 1e-12);
  }
  EXPECT_THROW(distance(m, random_boundary_point(2, rng), random_interior_point(2, rng)), DomainError);
}

// Independent closed form: cosh^2(d / 2s) = |<X,Y>|^2 / (<X,X><Y,Y>).
TEST(Distance, MatchesCoshFormula) {
  Rng rng = make_rng(3);
  for (double s : {1.0, 0.5, 2.5}) {
    const HermitianModel m(3, s);
    for (int i = 0; i < 50; ++i) {
      const ProjPoint x = random_interior_point(3, rng, 4.0);
      const ProjPoint y = random_interior_point(3, rng, 4.0);
      const Vec& X = x.lift();
      const Vec& Y = y.lift();
      const double c2 = std::norm(herm(X, Y)) / (herm(X, X).real() * herm(Y, Y).real());
      const double expect = 2.0 * s * std::acosh(std::sqrt(c2));
      EXPECT_NEAR(distance(m, x, y), expect, 1e-9 * (1.0 + expect));
    }
  }
}

// Length of the radial segment [0, 0.5] from the Bergman line element.
TEST(Distance, MatchesMetricIntegral) {
  for (double s : {1.0, 2.0}) {
    const HermitianModel m(1, s);
    Vec dir(1);
    dir << 1.0;
    auto speed = [&](double r) {
      Vec z(1);
      z << r;
      return std::sqrt(bergman_metric(z, dir, s));
    };
    const double oracle =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(speed, 0.0, 0.5, 10, 1e-14);
    Vec z(1);
    z << 0.5;
    EXPECT_NEAR(distance(m, ProjPoint::origin(1), ProjPoint::from_ball(z)), oracle, 1e-12);
  }
}

TEST(Metric, MatchesBergmanFormula) {
  Rng rng = make_rng(4);
  for (double s : {1.0, 0.7}) {
    const HermitianModel m(2, s);
    for (int i = 0; i < 30; ++i) {
      const Vec z = random_interior_point(2, rng, 3.0).ball();
      const Vec dz = random_vec(2, rng);
      const TangentVector t = ball_tangent(z, dz);
      const double oracle = bergman_metric(z, dz, s);
      EXPECT_NEAR(metric_and_kahler(m, t, t).g, oracle, 1e-9 * oracle);
    }
  }
}

TEST(Metric, KahlerFormCompatibleWithComplexStructure) {
  Rng rng = make_rng(5);
  const HermitianModel m(2, 1.3);
  for (int i = 0; i < 20; ++i) {
    const ProjPoint x = random_interior_point(2, rng);
    const TangentVector u = testing::random_tangent(x, rng);
    const TangentVector v = testing::random_tangent(x, rng);
    const TangentVector ju{x, cplx(0, 1) * u.components};
    const MetricKahler uu = metric_and_kahler(m, u, u);
    EXPECT_NEAR(uu.omega, 0.0, 1e-12 * uu.g);
    EXPECT_NEAR(metric_and_kahler(m, u, ju).omega, uu.g, 1e-12 * uu.g);
    const MetricKahler uv = metric_and_kahler(m, u, v);
    const MetricKahler vu = metric_and_kahler(m, v, u);
    EXPECT_NEAR(uv.g, vu.g, 1e-12 * uu.g);
    EXPECT_NEAR(uv.omega, -vu.omega, 1e-12 * uu.g);
  }
}

TEST(Metric, LiftFormulaIgnoresScalingAndVerticalParts) {
  Rng rng = make_rng(6);
  const HermitianModel m(3);
  const ProjPoint x = random_interior_point(3, rng);
  const TangentVector u = testing::random_tangent(x, rng);
  const TangentVector v = testing::random_tangent(x, rng);
  const MetricKahler ref = metric_and_kahler(m, u, v);
  const cplx lam(0.3, -1.2);
  const Vec P = lam * x.lift();
  const Vec U = lam * u.components + cplx(0.4, 0.1) * x.lift();
  const Vec V = lam * v.components + cplx(-2.0, 0.5) * x.lift();
  const MetricKahler got = metric_and_kahler_on_lift(m, P, U, V);
  EXPECT_NEAR(got.g, ref.g, 1e-10 * std::abs(ref.g) + 1e-12);
  EXPECT_NEAR(got.omega, ref.omega, 1e-10 * std::abs(ref.omega) + 1e-12);
}

// Geodesic circles in a complex line have length L(r) = 2 pi s sinh(r/s);
// K = -L''/L recovers the holomorphic sectional curvature -1/s^2.
TEST(Metric, HolomorphicSectionalCurvature) {
  Rng rng = make_rng(7);
  for (double s : {1.0, 1.5}) {
    const HermitianModel m(2, s);
    for (int trial = 0; trial < 5; ++trial) {
      const ProjPoint x = random_interior_point(2, rng, 2.0);
      const TangentVector u = testing::unit_tangent(m, x, rng);
      const Vec U = u.components / std::sqrt(herm(u.components, u.components).real());
      auto length = [&](double r) {
        const double a = r / (2.0 * s);
        const Vec lift = std::cosh(a) * x.lift() + std::sinh(a) * U;
        const Vec dlift = std::sinh(a) * cplx(0, 1) * U;
        return 2.0 * kPi * norm(m, tangent_from_lift(lift, dlift));
      };
      const double r = 0.8 * s;
      const double h = 1e-3 * s;
      const double l = length(r);
      const double l2 = (length(r + h) - 2.0 * l + length(r - h)) / (h * h);
      EXPECT_NEAR(-l2 / l, -1.0 / (s * s), 1e-3 / (s * s));
    }
  }
}

TEST(Geodesic, EndpointsAndArcLength) {
  Rng rng = make_rng(8);
  const HermitianModel m(2, 1.4);
  for (int i = 0; i < 20; ++i) {
    const ProjPoint x = random_interior_point(2, rng);
    const ProjPoint y = random_interior_point(2, rng);
    const double d = distance(m, x, y);
    EXPECT_TRUE(same_point(geodesic(m, x, y, 0.0), x, 1e-12));
    EXPECT_TRUE(same_point(geodesic(m, x, y, d), y, 1e-9));
    EXPECT_NEAR(distance(m, x, geodesic(m, x, y, 0.3 * d)), 0.3 * d, 1e-9);
    const TangentVector v = direction_to(m, x, y);
    EXPECT_NEAR(norm(m, v), 1.0, 1e-12);
    TangentVector w = v;
    w.components *= d;
    EXPECT_TRUE(same_point(exp_map(m, w), y, 1e-9));
  }
  const ProjPoint x = random_interior_point(2, rng);
  EXPECT_THROW(geodesic(m, x, x, 1.0), DomainError);
}

TEST(Geodesic, TowardBoundaryPoint) {
  Rng rng = make_rng(9);
  const HermitianModel m(3);
  const ProjPoint x = random_interior_point(3, rng);
  const ProjPoint xi = random_boundary_point(3, rng);
  for (double t : {0.5, 2.0, 7.0}) EXPECT_NEAR(distance(m, x, geodesic(m, x, xi, t)), t, 1e-8);
  const ProjPoint far = geodesic(m, x, xi, 30.0);
  EXPECT_LT(projective_distance(far.lift(), xi.lift()), 1e-6);
}

TEST(TriangleArea, DegenerateIsZero) {
  Rng rng = make_rng(10);
  const HermitianModel m(2);
  const ProjPoint x = random_interior_point(2, rng), y = random_interior_point(2, rng);
  const TriangleArea a = triangle_area(m, x, x, y);
  EXPECT_EQ(a.value, 0.0);
  EXPECT_TRUE(a.degenerate);
}

TEST(TriangleArea, IdealChainTriangleIsPi) {
  const HermitianModel m(1);
  Vec a(1), b(1), c(1);
  a << 1.0;
  b << cplx(0, 1);
  c << -1.0;
  const TriangleArea t = triangle_area(m, ProjPoint::from_ball(a), ProjPoint::from_ball(b),
                                       ProjPoint::from_ball(c));
  EXPECT_NEAR(t.value, kPi, 1e-4);
  EXPECT_FALSE(t.degenerate);
}

double angle(const HermitianModel& m, const ProjPoint& at, const ProjPoint& a, const ProjPoint& b) {
  const TangentVector u = direction_to(m, at, a);
  const TangentVector v = direction_to(m, at, b);
  return std::acos(std::clamp(metric_and_kahler(m, u, v).g, -1.0, 1.0));
}

// Gauss-Bonnet in a complex line of curvature -1/s^2: area = s^2 (pi - angles).
TEST(TriangleArea, GaussBonnetInComplexLine) {
  Rng rng = make_rng(11);
  for (double s : {1.0, 0.8}) {
    const HermitianModel m(1, s);
    for (int i = 0; i < 10; ++i) {
      const ProjPoint x = random_interior_point(1, rng, 3.0);
      const ProjPoint y = random_interior_point(1, rng, 3.0);
      const ProjPoint z = random_interior_point(1, rng, 3.0);
      const double sum = angle(m, x, y, z) + angle(m, y, z, x) + angle(m, z, x, y);
      const double area = std::abs(triangle_area(m, x, y, z).value);
      EXPECT_NEAR(area, s * s * (kPi - sum), 1e-7);
    }
  }
}

// Real points span a totally real plane, on which omega vanishes.
TEST(TriangleArea, TotallyRealTriangleHasZeroArea) {
  Rng rng = make_rng(12);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  const HermitianModel m(2);
  for (int i = 0; i < 5; ++i) {
    std::array<ProjPoint, 3> pts{ProjPoint::origin(2), ProjPoint::origin(2), ProjPoint::origin(2)};
    for (auto& p : pts) {
      Vec z(2);
      z << u(rng), u(rng);
      p = ProjPoint::from_ball(z);
    }
    EXPECT_NEAR(triangle_area(m, pts[0], pts[1], pts[2]).value, 0.0, 1e-10);
  }
}

TEST(TriangleArea, IndependentOfApexAndAntisymmetric) {
  Rng rng = make_rng(13);
  const HermitianModel m(2);
  for (int i = 0; i < 5; ++i) {
    const ProjPoint x = random_interior_point(2, rng, 2.0);
    const ProjPoint y = random_boundary_point(2, rng);
    const ProjPoint z = random_interior_point(2, rng, 2.0);
    const double a0 = triangle_area(m, x, y, z, 0).value;
    EXPECT_NEAR(triangle_area(m, x, y, z, 1).value, a0, 1e-7);
    EXPECT_NEAR(triangle_area(m, x, y, z, 2).value, a0, 1e-7);
    EXPECT_NEAR(triangle_area(m, y, x, z).value, -a0, 1e-7);
  }
}

}  // namespace
}  // namespace chaingeo
