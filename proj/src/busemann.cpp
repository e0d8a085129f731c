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


#include "chaingeo/busemann.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chaingeo/cartan.hpp"

namespace chaingeo {

std::vector<Vec> VisualMeasure::sample_ball(std::size_t n, std::uint64_t stream) const {
  Rng rng = make_rng(seed_, stream);
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(detail::random_unit_vector(p_, rng));
  return out;
}

std::vector<ProjPoint> VisualMeasure::sample(std::size_t n, std::uint64_t stream) const {
  std::vector<ProjPoint> out;
  out.reserve(n);
  for (const Vec& b : sample_ball(n, stream)) out.push_back(ProjPoint::from_ball(b));
  return out;
}

double busemann(const HermitianModel& model, const ProjPoint& xi, const ProjPoint& x,
                const ProjPoint& y) {
  model.check_dim(xi.lift());
  model.check_dim(x.lift());
  model.check_dim(y.lift());
  if (!xi.is_boundary()) throw DomainError("busemann: xi must be a boundary point");
  if (!x.is_interior() || !y.is_interior()) throw DomainError("busemann: x, y must be interior");
  // d = s log(4 delta) + o(1) as delta -> infinity, so the limit is
  // s log(|<X,xi>|^2 <Y,Y> / (|<Y,xi>|^2 <X,X>)); canonical lifts have <X,X> = -1.
  const double ax = std::abs(herm(x.lift(), xi.lift()));
  const double ay = std::abs(herm(y.lift(), xi.lift()));
  return 2.0 * model.metric_scale() * (std::log(ax) - std::log(ay));
}

double e_xi(const HermitianModel& model, const Entropy& entropy, const ProjPoint& xi,
            const ProjPoint& x) {
  return std::exp(-entropy.value * busemann(model, xi, x, ProjPoint::origin(model.p())));
}

double log_ball_volume(const HermitianModel& model, double r) {
  const double s = model.metric_scale();
  const int p = model.p();
  // Jacobi fields: curvature -1 along J(direction), -1/4 on the rest.
  // Divide out e^{p r/s} for range and add it back in the log.
  auto area = [&](double t) {
    const double u = t / s;
    return std::sinh(u) * std::pow(std::sinh(u / 2.0), 2 * p - 2) * std::exp(-p * (r / s));
  };
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(area, 0.0, r, 20, 1e-13);
  return std::log(v) + p * (r / s);
}

Entropy volume_entropy(const HermitianModel& model) {
  const double s = model.metric_scale();
  constexpr int kGrid = 41;
  Eigen::MatrixXd a(kGrid, 4);
  Eigen::VectorXd y(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    const double u = 5.0 + 10.0 * i / (kGrid - 1);
    const double r = u * s;
    a(i, 0) = r;
    a(i, 1) = 1.0;
    a(i, 2) = std::exp(-u);
    a(i, 3) = std::exp(-2.0 * u);
    y[i] = log_ball_volume(model, r);
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd res = a * coef - y;
  double worst = 0.0;
  for (int i = 0; i < kGrid; ++i) worst = std::max(worst, std::abs(res[i]) / std::abs(y[i]));
  if (!(worst <= 0.02) || !(coef[0] > 0.0))
    throw NumericalError("volume_entropy: growth fit residual exceeds 2%");
  return {coef[0], model.p(), s, worst};
}

McEstimate integrate_e_xi(const HermitianModel& model, const Entropy& entropy, const ProjPoint& x,
                          std::size_t n, std::uint64_t seed) {
  if (!x.is_interior()) throw DomainError("integrate_e_xi: x must be interior");
  const VisualMeasure nu(model.p(), seed);
  const ProjPoint o = ProjPoint::origin(model.p());
  double sum = 0.0;
  double sum2 = 0.0;
  for (const ProjPoint& xi : nu.sample(n, 0x0e)) {
    const double v = std::exp(-entropy.value * busemann(model, xi, x, o));
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / static_cast<double>(n);
  const double var = std::max(0.0, sum2 / static_cast<double>(n) - mean * mean);
  return {mean, std::sqrt(var / static_cast<double>(n - 1)), n, seed};
}

namespace {

// Bounded test functions of the ball coordinates b of a boundary point.
double test_function(int k, const Vec& b) {
  const Eigen::Index p = b.size();
  switch (k) {
    case 0: return 1.0;
    case 1: return 1.0 + b[0].real();
    case 2: return 1.0 + b[p - 1].imag();
    default: return std::norm(b[0]);
  }
}

constexpr int kTestFunctions = 4;

}  // namespace

MeasureTransformStat measure_transform_check(const HermitianModel& model, const Entropy& entropy,
                                             const Isometry& g, std::size_t n, std::uint64_t seed) {
  if (g.p() != model.p()) throw DimensionError("measure_transform_check: dimension mismatch");
  if (n < 2) throw DomainError("measure_transform_check: need at least 2 samples");
  const VisualMeasure nu(model.p(), seed);
  const ProjPoint o = ProjPoint::origin(model.p());
  const ProjPoint go = apply(g, o);
  std::vector<double> s_push(kTestFunctions, 0.0), s_w(kTestFunctions, 0.0),
      s_d(kTestFunctions, 0.0), s_d2(kTestFunctions, 0.0);
  for (const ProjPoint& xi : nu.sample(n, 0x7a)) {
    const Vec gb = apply(g, xi).ball();
    const Vec b = xi.ball();
    const double w = std::exp(-entropy.value * busemann(model, xi, go, o));
    for (int k = 0; k < kTestFunctions; ++k) {
      const double lhs = test_function(k, gb);
      const double rhs = test_function(k, b) * w;
      s_push[k] += lhs;
      s_w[k] += rhs;
      s_d[k] += lhs - rhs;
      s_d2[k] += (lhs - rhs) * (lhs - rhs);
    }
  }
  MeasureTransformStat out;
  out.n = n;
  out.seed = seed;
  const double dn = static_cast<double>(n);
  for (int k = 0; k < kTestFunctions; ++k) {
    const double md = s_d[k] / dn;
    const double var = std::max(0.0, s_d2[k] / dn - md * md);
    TransformTerm t{s_push[k] / dn, s_w[k] / dn, std::sqrt(var / (dn - 1.0))};
    out.max_relative_deviation =
        std::max(out.max_relative_deviation, std::abs(md) / std::max(1e-300, std::abs(t.pushed)));
    const double z = t.stderr_ > 0.0 ? std::abs(md) / t.stderr_ : (std::abs(md) > 1e-12 ? 1e300 : 0.0);
    out.max_z = std::max(out.max_z, z);
    out.terms.push_back(t);
  }
  return out;
}

}  // namespace chaingeo
