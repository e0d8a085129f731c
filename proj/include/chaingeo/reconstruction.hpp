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
#include <string>
#include <utility>
#include <vector>

#include "chaingeo/bounded_forms.hpp"
#include "chaingeo/hermitian.hpp"
#include "chaingeo/isometry.hpp"

namespace chaingeo {

/// Finite sample (xi_i, eta_i) of a boundary map dH_C^p -> dH_C^q.
struct BoundarySampleMap {
  int p = 1;
  int q = 1;
  std::vector<std::pair<ProjPoint, ProjPoint>> pairs;

  /// Throws unless every point is a boundary point of the right dimension.
  void validate() const;
  std::size_t min_fit_samples() const;
};

/// Samples phi on `n` source points laid out in groups of `per_chain`
/// points on random chains, so that co-chain triples occur among samples.
BoundarySampleMap sample_boundary_map(const BoundaryMap& phi, std::size_t n, std::uint64_t seed,
                                      int per_chain = 4);

/// Same sources, targets randomly permuted.
BoundarySampleMap scramble_targets(const BoundarySampleMap& map, std::uint64_t seed);

/// Replaces a fraction of the targets by random boundary points; returns
/// the modified indices (sorted).
std::vector<std::size_t> corrupt_targets(BoundarySampleMap& map, double fraction,
                                         std::uint64_t seed);

inline constexpr double kCompatThreshold = 0.99;
inline constexpr double kRigidResidual = 1e-4;

struct CompatibilityReport {
  std::size_t co_chain_triples = 0;
  std::size_t co_chain_image = 0;        ///< of those, image triple on a chain
  std::size_t orientation_match = 0;     ///< of those, same Cartan sign as the source
  std::size_t non_chain_triples = 0;
  std::size_t non_chain_image = 0;       ///< of those, image triple not on a chain
  double co_chain_fraction = 0.0;
  double orientation_fraction = 0.0;
  double non_chain_fraction = 0.0;
  bool sufficient = false;  ///< enough triples of both kinds were found

  bool holomorphic_compatible() const;
  bool antiholomorphic_compatible() const;
};

CompatibilityReport chain_compatibility_check(const BoundarySampleMap& map, std::size_t n_triples,
                                              std::uint64_t seed, double tol = 1e-7);

struct FitOptions {
  bool antiholomorphic = false;  ///< fit eta ~ W conj(xi)
  bool require_compatible = true;
  std::size_t compat_triples = 500;
  std::uint64_t seed = 0;
  int max_iterations = 50;
};

struct EmbeddingFit {
  EmbeddingMap map;
  std::vector<double> residuals;  ///< per-sample projective distance
  double max_residual = 0.0;
  int iterations = 0;
  CompatibilityReport compatibility;
};

/// Recovers the isometric embedding W from samples: linear initialisation,
/// alternating phase alignment and least squares, then projection onto
/// {W : W^* J_q W = lambda J_p}. Throws VerificationError when the samples
/// are incompatible or the residual exceeds kRigidResidual.
EmbeddingFit fit_embedding(const BoundarySampleMap& map, const FitOptions& opts = {});

struct EmbeddingVerification {
  double fraction = 0.0;
  std::vector<std::size_t> mismatched;
  double isometry_residual = 0.0;
  std::string mode;
};

EmbeddingVerification verify_embedding(const EmbeddingMap& w, const BoundarySampleMap& map,
                                       double tol = 1e-6);

/// max projective distance between a(xi) and b(xi) over the given points.
double embedding_distance(const EmbeddingMap& a, const EmbeddingMap& b,
                          const std::vector<ProjPoint>& points);

}  // namespace chaingeo
