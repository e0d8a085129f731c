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


#include "chaingeo/toledo.hpp"

#include <cmath>

#include "chaingeo/bounded_forms.hpp"
#include "chaingeo/detail/parallel.hpp"

namespace chaingeo {

SurfaceGroupRep::SurfaceGroupRep(int genus, std::vector<Isometry> generators, double tol)
    : genus_(genus), generators_(std::move(generators)) {
  if (genus_ < 2) throw DomainError("SurfaceGroupRep: genus must be >= 2");
  if (static_cast<int>(generators_.size()) != 2 * genus_)
    throw DimensionError("SurfaceGroupRep: expected 2g generators");
  for (const auto& g : generators_) {
    if (g.p() != generators_.front().p()) throw DimensionError("SurfaceGroupRep: mixed dimensions");
  }
  if (!(relator_residual() < tol)) throw DomainError("SurfaceGroupRep: relator residual too large");
}

std::vector<Mat> SurfaceGroupRep::boundary_word() const {
  std::vector<Mat> word;
  for (int i = 0; i < genus_; ++i) {
    const Mat a = generators_[2 * i].normalized();
    const Mat b = generators_[2 * i + 1].normalized();
    word.push_back(a);
    word.push_back(b);
    word.push_back(a.inverse());
    word.push_back(b.inverse());
  }
  return word;
}

double SurfaceGroupRep::relator_residual() const {
  const int n = generators_.front().p() + 1;
  Mat prod = Mat::Identity(n, n);
  for (const Mat& m : boundary_word()) prod = prod * m;
  const cplx mu = prod.trace() / static_cast<double>(n);
  return (prod - mu * Mat::Identity(n, n)).norm() / prod.norm();
}

SurfaceGroupRep SurfaceGroupRep::conjugated() const {
  std::vector<Isometry> g;
  for (const auto& m : generators_) g.emplace_back(conjugate_matrix(m.matrix()), 1e-8);
  return SurfaceGroupRep(genus_, std::move(g));
}

SurfaceGroupRep SurfaceGroupRep::conjugate_by(const Isometry& h) const {
  std::vector<Isometry> g;
  const Isometry hi = h.inverse();
  for (const auto& m : generators_) g.push_back(h * m * hi);
  return SurfaceGroupRep(genus_, std::move(g));
}

SurfaceGroupRep SurfaceGroupRep::trivial(int genus, int p) {
  return SurfaceGroupRep(genus, std::vector<Isometry>(2 * genus, Isometry::identity(p)));
}

SurfaceGroupRep octagon_representation(int q) {
  const double s2 = std::sqrt(2.0);
  Mat t(2, 2);
  t << 1.0 + s2, std::sqrt(2.0 + 2.0 * s2), std::sqrt(2.0 + 2.0 * s2), 1.0 + s2;
  auto rot = [](double a) {
    Mat r = Mat::Zero(2, 2);
    r(0, 0) = std::polar(1.0, a / 2.0);
    r(1, 1) = std::polar(1.0, -a / 2.0);
    return r;
  };
  // Sides labelled clockwise; pair(s, s') carries side s onto side s'.
  auto side = [](int k) { return -k * kPi / 4.0; };
  auto pair = [&](int s, int sp) { return Isometry(rot(side(sp)) * t * rot(kPi - side(s)), 1e-10); };
  std::vector<Isometry> gens{pair(2, 0), pair(1, 3), pair(6, 4), pair(5, 7)};
  if (q > 1) {
    for (auto& g : gens) g = extend_standard(g, q);
  }
  return SurfaceGroupRep(2, std::move(gens));
}

double homogeneous_cocycle(const HermitianModel& model, const Isometry& g1, const Isometry& g2,
                           const Isometry& g3, const ProjPoint& x) {
  return triangle_area(model, apply(g1, x), apply(g2, x), apply(g3, x)).value;
}

ToledoResult toledo_surface_group(const HermitianModel& model, const SurfaceGroupRep& rep,
                                  const std::optional<ProjPoint>& basepoint, int threads) {
  if (rep.p() != model.p()) throw DimensionError("toledo_surface_group: dimension mismatch");
  const ProjPoint x = basepoint.value_or(ProjPoint::origin(model.p()));
  if (!x.is_interior()) throw DomainError("toledo_surface_group: basepoint must be interior");
  const std::vector<Mat> word = rep.boundary_word();
  std::vector<ProjPoint> vertex;
  Mat prefix = Mat::Identity(model.dim(), model.dim());
  vertex.push_back(x);
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    prefix = prefix * word[k];
    vertex.push_back(ProjPoint::from_lift(prefix * x.lift()));
  }
  const int n = static_cast<int>(word.size()) - 2;
  std::vector<TriangleArea> areas(n);
  detail::parallel_for(areas.size(), threads, [&](std::size_t k) {
    areas[k] = triangle_area(model, vertex[0], vertex[k + 1], vertex[k + 2]);
  });
  ToledoResult out;
  out.triangles = n;
  double err = 0.0;
  for (const auto& a : areas) {
    out.area_sum += a.value;
    err += a.error;
  }
  const double s = model.metric_scale();
  const double denom = 2.0 * kPi * (2.0 * rep.genus() - 2.0) * s * s;
  out.value = out.area_sum / denom;
  out.error_bound = err / denom + 1e-9;
  return out;
}

MilnorWood milnor_wood_check(const ToledoResult& result, int rk_source, int rk_target) {
  if (rk_source < 1 || rk_target < 1) throw DomainError("milnor_wood_check: ranks must be >= 1");
  const double bound = static_cast<double>(rk_target) / rk_source;
  const double margin = bound - std::abs(result.value);
  return {margin >= -result.error_bound, margin};
}

}  // namespace chaingeo
