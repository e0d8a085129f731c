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
#include <vector>

#include "chaingeo/cartan.hpp"
#include "chaingeo/projective.hpp"
#include "support.hpp"

namespace chaingeo {
namespace {

Vec v3(cplx a, cplx b, cplx c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

ProjPoint circle_point(double th) {
  Vec z(1);
  z << std::polar(1.0, th);
  return ProjPoint::from_ball(z);
}

TEST(Cartan, OrientedCircleTripleByExpansion) {
  // Lifts (1,1), (i,1), (-1,1):
  //   <v1,v2> = -i - 1, <v2,v3> = -i - 1, <v3,v1> = -2,
  //   product = (-1-i)^2 (-2) = -4i, so arg(-product) = arg(4i) = pi/2.
  const cplx i(0.0, 1.0);
  const cplx tp = (1.0 * std::conj(i) - 1.0) * (i * std::conj(cplx(-1.0)) - 1.0) * (-1.0 * 1.0 - 1.0);
  EXPECT_NEAR(std::abs(tp - cplx(0.0, -4.0)), 0.0, 1e-15);
  const double oracle = 2.0 / kPi * std::arg(-tp);

  const HermitianModel m(1);
  const CartanValue c = cartan_invariant(m, circle_point(0.0), circle_point(kPi / 2), circle_point(kPi));
  EXPECT_FALSE(c.degenerate);
  EXPECT_NEAR(c.value, oracle, 1e-12);
  EXPECT_NEAR(c.value, 1.0, 1e-12);
}

TEST(Cartan, DegenerateAndAlternating) {
  Rng rng = make_rng(1);
  const HermitianModel m(2);
  const ProjPoint a = random_boundary_point(2, rng), b = random_boundary_point(2, rng),
                  c = random_boundary_point(2, rng);
  const CartanValue d = cartan_invariant(m, a, a, b);
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.value, 0.0);
  const double abc = cartan_invariant(m, a, b, c).value;
  EXPECT_NEAR(cartan_invariant(m, b, a, c).value, -abc, 1e-14);
  EXPECT_NEAR(cartan_invariant(m, a, c, b).value, -abc, 1e-14);
  EXPECT_NEAR(cartan_invariant(m, b, c, a).value, abc, 1e-14);
  EXPECT_LE(std::abs(abc), 1.0);
  EXPECT_THROW(cartan_invariant(m, a, b, ProjPoint::origin(2)), DomainError);
}

TEST(Cartan, LiftIndependent) {
  Rng rng = make_rng(2);
  for (int k = 0; k < 100; ++k) {
    const ProjPoint a = random_boundary_point(3, rng), b = random_boundary_point(3, rng),
                    c = random_boundary_point(3, rng);
    const double ref = cartan_invariant(a.lift(), b.lift(), c.lift()).value;
    EXPECT_NEAR(cartan_invariant(cplx(2.0, -1.0) * a.lift(), cplx(0.0, 0.3) * b.lift(), -5.0 * c.lift()).value, ref,
                1e-12);
  }
}

TEST(Cartan, CocycleIdentity) {
  Rng rng = make_rng(3);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    std::array<Vec, 4> x;
    for (auto& v : x) v = random_boundary_point(2, rng).lift();
    auto c = [&](int i, int j, int l) { return cartan_invariant(x[i], x[j], x[l]).value; };
    worst = std::max(worst, std::abs(c(1, 2, 3) - c(0, 2, 3) + c(0, 1, 3) - c(0, 1, 2)));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Chain, SpecExamples) {
  const HermitianModel m(2);
  const ProjPoint a = ProjPoint::from_lift(v3(1, 0, 1)), b = ProjPoint::from_lift(v3(-1, 0, 1));
  const Chain c = chain_through(m, a, b);
  EXPECT_TRUE(chain_contains(c, a));
  EXPECT_TRUE(chain_contains(c, b));
  const ProjPoint on = ProjPoint::from_lift(v3(cplx(0, 1), 0, 1));
  EXPECT_TRUE(chain_contains(c, on));
  // rank oracle: (i,0,1) lies in the span of (1,0,1), (-1,0,1) iff the 3x3 matrix is singular
  Mat r(3, 3);
  r << v3(1, 0, 1), v3(-1, 0, 1), v3(cplx(0, 1), 0, 1);
  EXPECT_NEAR(std::abs(r.determinant()), 0.0, 1e-15);
  EXPECT_FALSE(chain_contains(c, ProjPoint::from_lift(v3(0, 1, 1))));
  EXPECT_THROW(chain_through(m, a, a), DomainError);
}

TEST(Chain, SignatureOfSpan) {
  Rng rng = make_rng(4);
  const HermitianModel m(3);
  for (int k = 0; k < 20; ++k) {
    const Chain c = chain_through(m, random_boundary_point(3, rng), random_boundary_point(3, rng));
    EXPECT_NEAR(herm(c.positive(), c.positive()).real(), 1.0, 1e-12);
    EXPECT_NEAR(herm(c.negative(), c.negative()).real(), -1.0, 1e-12);
    EXPECT_NEAR(std::abs(herm(c.positive(), c.negative())), 0.0, 1e-12);
  }
}

TEST(Chain, RandomPointIsOffChain) {
  Rng rng = make_rng(5);
  const HermitianModel m(2);
  const Chain c = chain_through(m, random_boundary_point(2, rng), random_boundary_point(2, rng));
  for (int k = 0; k < 100; ++k) EXPECT_FALSE(chain_contains(c, random_boundary_point(2, rng)));
}

TEST(Chain, OnChainTriplesAreExtremal) {
  Rng rng = make_rng(6);
  const HermitianModel m(2);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  for (int k = 0; k < 200; ++k) {
    const Chain c = chain_through(m, random_boundary_point(2, rng), random_boundary_point(2, rng));
    const ProjPoint a = sample_chain_point(c, u(rng)), b = sample_chain_point(c, u(rng)),
                    d = sample_chain_point(c, u(rng));
    EXPECT_NEAR(std::abs(cartan_invariant(m, a, b, d).value), 1.0, 1e-9);
  }
}

TEST(Chain, ExtremalTriplesAreOnChain) {
  Rng rng = make_rng(7);
  const HermitianModel m(2);
  int extremal = 0;
  for (int k = 0; k < 20000; ++k) {
    const ProjPoint a = random_boundary_point(2, rng), b = random_boundary_point(2, rng),
                    c = random_boundary_point(2, rng);
    const bool on = chain_contains(chain_through(m, a, b), c, 1e-7);
    const bool ext = std::abs(std::abs(cartan_invariant(m, a, b, c).value) - 1.0) < 1e-7;
    // generic triples are neither; both sides agree
    EXPECT_EQ(on, ext);
    extremal += ext;
  }
  // and the converse direction from constructed extremal triples: a triple with
  // |c| = 1 built by moving a chain triple by an isometry stays on a chain
  for (int k = 0; k < 200; ++k) {
    const Chain c0 = chain_through(m, random_boundary_point(2, rng), random_boundary_point(2, rng));
    const Isometry g = random_isometry(2, 300 + k);
    const ProjPoint a = apply(g, sample_chain_point(c0, 0.1)), b = apply(g, sample_chain_point(c0, 2.0)),
                    c = apply(g, sample_chain_point(c0, 4.0));
    ASSERT_NEAR(std::abs(cartan_invariant(m, a, b, c).value), 1.0, 1e-7);
    EXPECT_TRUE(chain_contains(chain_through(m, a, b), c, 1e-7));
  }
  EXPECT_EQ(extremal, 0);
}

TEST(Chain, IsometryImages) {
  Rng rng = make_rng(8);
  const HermitianModel m(2);
  const ProjPoint a = random_boundary_point(2, rng), b = random_boundary_point(2, rng);
  const Chain c = chain_through(m, a, b);
  const Isometry g = random_isometry(2, 9);
  const Chain gc = chain_through(m, apply(g, a), apply(g, b));
  for (int k = 0; k < 50; ++k) {
    EXPECT_TRUE(chain_contains(gc, apply(g, sample_chain_point(c, 0.13 * k))));
    const ProjPoint off = random_boundary_point(2, rng);
    EXPECT_EQ(chain_contains(c, off), chain_contains(gc, apply(g, off)));
  }
}

TEST(SampleChainPoint, PeriodicAndOriented) {
  Rng rng = make_rng(10);
  const HermitianModel m(2);
  for (int k = 0; k < 50; ++k) {
    const Chain c = chain_through(m, random_boundary_point(2, rng), random_boundary_point(2, rng));
    EXPECT_TRUE(chain_contains(c, sample_chain_point(c, 1.0)));
    EXPECT_TRUE(same_point(sample_chain_point(c, 1.0), sample_chain_point(c, 1.0 + 2.0 * kPi), 1e-12));
    EXPECT_NEAR(cartan_invariant(m, sample_chain_point(c, 0.2), sample_chain_point(c, 1.5), sample_chain_point(c, 3.0))
                    .value,
                1.0, 1e-9);
    const Chain r = c.reversed();
    EXPECT_NEAR(cartan_invariant(m, sample_chain_point(r, 0.2), sample_chain_point(r, 1.5), sample_chain_point(r, 3.0))
                    .value,
                -1.0, 1e-9);
  }
}

TEST(SampleChainPoint, CalibratedByCircle) {
  // p = 1: the whole boundary is one chain; increasing angles on the circle give +1.
  const HermitianModel m(1);
  const Chain c = chain_through(m, circle_point(0.0), circle_point(kPi));
  const double v = cartan_invariant(m, sample_chain_point(c, 0.3), sample_chain_point(c, 1.0),
                                    sample_chain_point(c, 2.0)).value;
  const double w = cartan_invariant(m, circle_point(0.3), circle_point(1.0), circle_point(2.0)).value;
  EXPECT_NEAR(v, 1.0, 1e-9);
  EXPECT_NEAR(w, 1.0, 1e-9);
}

TEST(KPlane, RankOracle) {
  Rng rng = make_rng(11);
  const HermitianModel m(2);
  std::vector<ProjPoint> generic = {random_boundary_point(2, rng), random_boundary_point(2, rng),
                                    random_boundary_point(2, rng)};
  const KPlane full = k_plane_through(m, generic);
  EXPECT_EQ(full.k, 2);
  EXPECT_TRUE(full.contains(random_boundary_point(2, rng)));

  const Chain c = chain_through(m, generic[0], generic[1]);
  std::vector<ProjPoint> cochain = {generic[0], generic[1], sample_chain_point(c, 0.7)};
  const KPlane line = k_plane_through(m, cochain);
  EXPECT_EQ(line.k, 1);
  for (int k = 0; k < 10; ++k) {
    const ProjPoint z = random_boundary_point(2, rng);
    EXPECT_EQ(line.contains(z), chain_contains(c, z));
  }
  // k = 1 with two points reduces to the chain
  std::vector<ProjPoint> two = {generic[0], generic[1]};
  EXPECT_EQ(k_plane_through(m, two).k, 1);
  EXPECT_TRUE(k_plane_through(m, two).contains(sample_chain_point(c, 2.2)));
  std::vector<ProjPoint> same = {generic[0], generic[0]};
  EXPECT_THROW(k_plane_through(m, same), DomainError);
}

TEST(Heisenberg, FibresAreChainsThroughXi) {
  Rng rng = make_rng(12);
  const HermitianModel m(2);
  for (int k = 0; k < 30; ++k) {
    const ProjPoint xi = random_boundary_point(2, rng);
    const Chain c = chain_through(m, xi, random_boundary_point(2, rng));
    const cplx z0 = heisenberg_projection(m, xi, sample_chain_point(c, 0.5));
    for (double t : {1.0, 2.0, 4.0}) {
      const ProjPoint z = sample_chain_point(c, t);
      if (same_point(z, xi, 1e-6)) continue;
      EXPECT_LT(std::abs(heisenberg_projection(m, xi, z) - z0), 1e-9 * (1.0 + std::abs(z0)));
    }
    const ProjPoint off = random_boundary_point(2, rng);
    EXPECT_GT(std::abs(heisenberg_projection(m, xi, off) - z0), 1e-6);
    // well defined on the projective class
    EXPECT_NEAR(std::abs(heisenberg_projection(m, xi, ProjPoint::from_lift(cplx(-3.0, 2.0) * off.lift())) -
                         heisenberg_projection(m, xi, off)),
                0.0, 1e-12);
  }
  const ProjPoint xi = random_boundary_point(2, rng);
  EXPECT_THROW(heisenberg_projection(m, xi, xi), DomainError);
  EXPECT_THROW(heisenberg_projection(HermitianModel(3), random_boundary_point(3, rng), random_boundary_point(3, rng)),
               DomainError);
}

TEST(Heisenberg, ChainNotThroughXiProjectsToCircle) {
  Rng rng = make_rng(13);
  const HermitianModel m(2);
  for (int k = 0; k < 10; ++k) {
    const ProjPoint xi = random_boundary_point(2, rng);
    const Chain c = chain_through(m, random_boundary_point(2, rng), random_boundary_point(2, rng));
    std::vector<cplx> img;
    for (int i = 0; i < 50; ++i) img.push_back(heisenberg_projection(m, xi, sample_chain_point(c, 2.0 * kPi * i / 50)));
    const CircleFit f = fit_circle(img);
    EXPECT_TRUE(std::isfinite(f.radius));
    EXPECT_LT(f.residual, 1e-7 * (1.0 + f.radius));
    // injective: distinct samples have distinct images
    for (int i = 1; i < 50; ++i) EXPECT_GT(std::abs(img[i] - img[0]), 1e-8);
  }
}

Isometry stabiliser_element(int which, double t) {
  Mat g = Mat::Identity(3, 3);
  if (which == 0) {  // boost in the (e0, e2) plane
    g(0, 0) = g(2, 2) = std::cosh(t);
    g(0, 2) = g(2, 0) = std::sinh(t);
  } else if (which == 1) {  // rotation of e1
    g(1, 1) = std::polar(1.0, t);
  } else {  // vertical Heisenberg translation
    g(0, 0) += cplx(0, t);
    g(0, 2) -= cplx(0, t);
    g(2, 0) += cplx(0, t);
    g(2, 2) -= cplx(0, t);
  }
  return Isometry(g);
}

TEST(Heisenberg, StabiliserActsAffinely) {
  Rng rng = make_rng(14);
  const HermitianModel m(2);
  const ProjPoint xi0 = ProjPoint::from_lift(v3(1, 0, 1));
  for (int k = 0; k < 10; ++k) {
    const Isometry h = random_isometry(2, 400 + k);
    const ProjPoint xi = apply(h, xi0);
    for (int which = 0; which < 3; ++which) {
      const Isometry g = h * stabiliser_element(which, 0.4 + 0.1 * k) * h.inverse();
      const AffineC w = heisenberg_affine(m, xi, g);
      for (int i = 0; i < 20; ++i) {
        const ProjPoint z = random_boundary_point(2, rng);
        const cplx lhs = heisenberg_projection(m, xi, apply(g, z));
        const cplx rhs = w(heisenberg_projection(m, xi, z));
        EXPECT_LT(std::abs(lhs - rhs), 1e-8 * (1.0 + std::abs(lhs)));
      }
    }
  }
  EXPECT_THROW(heisenberg_affine(m, xi0, random_isometry(2, 1)), DomainError);
}

}  // namespace
}  // namespace chaingeo
