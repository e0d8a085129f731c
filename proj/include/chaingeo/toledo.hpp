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

#include <optional>
#include <vector>

#include "chaingeo/hermitian.hpp"
#include "chaingeo/isometry.hpp"

namespace chaingeo {

/// Representation of the genus-g surface group <a_i, b_i | prod [a_i, b_i]>,
/// generators ordered a_1, b_1, ..., a_g, b_g.
class SurfaceGroupRep {
 public:
  /// Throws DomainError when the relator residual exceeds `tol`.
  SurfaceGroupRep(int genus, std::vector<Isometry> generators, double tol = 1e-8);

  int genus() const { return genus_; }
  int p() const { return generators_.front().p(); }
  const std::vector<Isometry>& generators() const { return generators_; }
  const Isometry& a(int i) const { return generators_[2 * i]; }
  const Isometry& b(int i) const { return generators_[2 * i + 1]; }

  /// || prod [a_i, b_i] - mu Id ||_F / ||prod||_F for the best scalar mu.
  double relator_residual() const;

  /// Boundary word a_1 b_1 a_1^-1 b_1^-1 ... as matrices.
  std::vector<Mat> boundary_word() const;

  SurfaceGroupRep conjugated() const;  ///< complex conjugate of every generator
  SurfaceGroupRep conjugate_by(const Isometry& h) const;

  static SurfaceGroupRep trivial(int genus, int p);

 private:
  int genus_;
  std::vector<Isometry> generators_;
};

/// Fuchsian genus-2 group of the regular octagon with angles pi/4,
/// embedded in PU(q,1) through the standard embedding.
SurfaceGroupRep octagon_representation(int q = 1);

struct ToledoResult {
  double value = 0.0;
  double error_bound = 0.0;
  int triangles = 0;
  double area_sum = 0.0;
};

/// Area of the geodesic triangle (g1 x, g2 x, g3 x).
double homogeneous_cocycle(const HermitianModel& model, const Isometry& g1, const Isometry& g2,
                           const Isometry& g3, const ProjPoint& x);

/// Sum of the cocycle over the 4g-2 triangles coning the fundamental polygon
/// from its first vertex, divided by 2 pi (2g - 2) s^2.
ToledoResult toledo_surface_group(const HermitianModel& model, const SurfaceGroupRep& rep,
                                  const std::optional<ProjPoint>& basepoint = std::nullopt,
                                  int threads = 1);

struct MilnorWood {
  bool ok = false;
  double margin = 0.0;  ///< rk'/rk - |i|, negative when violated
};

MilnorWood milnor_wood_check(const ToledoResult& result, int rk_source, int rk_target);

}  // namespace chaingeo
