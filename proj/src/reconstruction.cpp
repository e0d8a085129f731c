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


#include "chaingeo/reconstruction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "chaingeo/cartan.hpp"

namespace chaingeo {

void BoundarySampleMap::validate() const {
  for (const auto& [xi, eta] : pairs) {
    if (xi.p() != p || eta.p() != q) throw DimensionError("BoundarySampleMap: dimension mismatch");
    if (!xi.is_boundary() || !eta.is_boundary())
      throw DomainError("BoundarySampleMap: all points must lie on the boundary");
  }
}

std::size_t BoundarySampleMap::min_fit_samples() const {
  return std::max<std::size_t>(20, static_cast<std::size_t>(4 * (p + 1) * (q + 1)));
}

BoundarySampleMap sample_boundary_map(const BoundaryMap& phi, std::size_t n, std::uint64_t seed,
                                      int per_chain) {
  if (per_chain < 1) throw DomainError("sample_boundary_map: per_chain must be >= 1");
  const HermitianModel model(phi.p());
  Rng rng = make_rng(seed, 0x5a);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  BoundarySampleMap out{phi.p(), phi.q(), {}};
  while (out.pairs.size() < n) {
    const std::size_t left = n - out.pairs.size();
    if (left < static_cast<std::size_t>(per_chain)) {
      const ProjPoint xi = random_boundary_point(phi.p(), rng);
      out.pairs.emplace_back(xi, phi.apply(xi));
      continue;
    }
    const ProjPoint a = random_boundary_point(phi.p(), rng);
    const ProjPoint b = random_boundary_point(phi.p(), rng);
    if (same_point(a, b, 1e-6)) continue;
    const Chain ch = chain_through(model, a, b);
    for (int k = 0; k < per_chain; ++k) {
      const ProjPoint xi = sample_chain_point(ch, angle(rng));
      out.pairs.emplace_back(xi, phi.apply(xi));
    }
  }
  out.validate();
  return out;
}

BoundarySampleMap scramble_targets(const BoundarySampleMap& map, std::uint64_t seed) {
  std::vector<std::size_t> perm(map.pairs.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng = make_rng(seed, 0x5c);
  std::shuffle(perm.begin(), perm.end(), rng);
  BoundarySampleMap out = map;
  for (std::size_t i = 0; i < perm.size(); ++i) out.pairs[i].second = map.pairs[perm[i]].second;
  return out;
}

std::vector<std::size_t> corrupt_targets(BoundarySampleMap& map, double fraction,
                                         std::uint64_t seed) {
  const auto n = map.pairs.size();
  const auto k = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng = make_rng(seed, 0x5d);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(std::min(k, n));
  std::sort(idx.begin(), idx.end());
  for (std::size_t i : idx) map.pairs[i].second = random_boundary_point(map.q, rng);
  return idx;
}

bool CompatibilityReport::holomorphic_compatible() const {
  return sufficient && co_chain_fraction >= kCompatThreshold &&
         orientation_fraction >= kCompatThreshold && non_chain_fraction >= kCompatThreshold;
}

bool CompatibilityReport::antiholomorphic_compatible() const {
  return sufficient && co_chain_fraction >= kCompatThreshold &&
         orientation_fraction <= 1.0 - kCompatThreshold && non_chain_fraction >= kCompatThreshold;
}

namespace {

bool on_common_chain(const HermitianModel& model, const ProjPoint& a, const ProjPoint& b,
                     const ProjPoint& c, double tol) {
  if (same_point(a, b, 1e-9) || same_point(a, c, 1e-9) || same_point(b, c, 1e-9)) return false;
  return chain_residual(chain_through(model, a, b), c.lift()) < tol;
}

}  // namespace

CompatibilityReport chain_compatibility_check(const BoundarySampleMap& map, std::size_t n_triples,
                                              std::uint64_t seed, double tol) {
  map.validate();
  const HermitianModel mp(map.p);
  const HermitianModel mq(map.q);
  const auto& s = map.pairs;
  const std::size_t n = s.size();
  CompatibilityReport r;
  if (n < 3) return r;

  // Exhaustive search for co-chain source triples. With unit lifts and
  // G = Z^* Z, the squared distance of z_k to span(z_i, z_j) is
  //   1 - |G_ik|^2 - |G_jk - G_ji G_ik|^2 / (1 - |G_ij|^2);
  // this screens all triples cheaply, survivors are confirmed directly.
  Mat z(mp.dim(), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) z.col(static_cast<Eigen::Index>(i)) = s[i].first.lift().normalized();
  const Mat g = z.adjoint() * z;
  auto coincide = [&](std::size_t a, std::size_t b) {
    return std::sqrt(std::max(0.0, 1.0 - std::norm(g(a, b)))) < 1e-9;
  };
  const double screen = 100.0 * tol * tol + 1e-13;
  // uniform reservoir of at most n_triples co-chain triples
  Rng rng = make_rng(seed, 0xcc);
  std::vector<std::array<std::size_t, 3>> co;
  std::size_t seen = 0;
  auto keep = [&](std::array<std::size_t, 3> t) {
    ++seen;
    if (co.size() < n_triples) {
      co.push_back(t);
      return;
    }
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, seen - 1)(rng);
    if (r < n_triples) co[r] = t;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coincide(i, j)) continue;
      const double nrm2 = 1.0 - std::norm(g(i, j));
      Mat q(mp.dim(), 2);
      bool have_q = false;
      for (std::size_t k = j + 1; k < n; ++k) {
        const cplx gik = g(i, k);
        const double r2 = 1.0 - std::norm(gik) - std::norm(g(j, k) - g(j, i) * gik) / nrm2;
        if (r2 > screen) continue;
        if (coincide(k, i) || coincide(k, j)) continue;
        if (map.p == 1) {
          keep({i, j, k});
          continue;
        }
        if (!have_q) {
          q.col(0) = z.col(static_cast<Eigen::Index>(i));
          const Vec b = z.col(static_cast<Eigen::Index>(j));
          q.col(1) = (b - q.col(0) * q.col(0).dot(b)).normalized();
          have_q = true;
        }
        const Vec zk = z.col(static_cast<Eigen::Index>(k));
        if ((zk - q * (q.adjoint() * zk)).norm() < tol) keep({i, j, k});
      }
    }
  }
  for (const auto& [i, j, k] : co) {
    ++r.co_chain_triples;
    if (!on_common_chain(mq, s[i].second, s[j].second, s[k].second, tol)) continue;
    ++r.co_chain_image;
    const double cp = cartan_invariant(mp, s[i].first, s[j].first, s[k].first).value;
    const double cq = cartan_invariant(mq, s[i].second, s[j].second, s[k].second).value;
    if (cp * cq > 0.0) ++r.orientation_match;
  }

  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  // for p = 1 the whole boundary is a chain
  const std::size_t attempts = map.p == 1 ? 0 : 20 * n_triples;
  for (std::size_t attempt = 0; attempt < attempts && r.non_chain_triples < n_triples;
       ++attempt) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (i == j || j == k || i == k) continue;
    if (same_point(s[i].first, s[j].first, 1e-9) || same_point(s[i].first, s[k].first, 1e-9) ||
        same_point(s[j].first, s[k].first, 1e-9))
      continue;
    if (on_common_chain(mp, s[i].first, s[j].first, s[k].first, tol)) continue;
    ++r.non_chain_triples;
    if (!on_common_chain(mq, s[i].second, s[j].second, s[k].second, tol)) ++r.non_chain_image;
  }

  auto frac = [](std::size_t a, std::size_t b) {
    return b == 0 ? 1.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  r.co_chain_fraction = frac(r.co_chain_image, r.co_chain_triples);
  r.orientation_fraction = frac(r.orientation_match, r.co_chain_triples);
  r.non_chain_fraction = frac(r.non_chain_image, r.non_chain_triples);
  r.sufficient = r.co_chain_triples >= 10 && (map.p == 1 || r.non_chain_triples >= 10);
  return r;
}

namespace {

double fit_objective(const Mat& w, const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = projective_distance(w * xs[i], ys[i]);
    s += d * d;
  }
  return s;
}

}  // namespace

EmbeddingFit fit_embedding(const BoundarySampleMap& map, const FitOptions& opts) {
  map.validate();
  if (map.q < map.p) throw DomainError("fit_embedding: need q >= p");
  if (map.pairs.size() < map.min_fit_samples())
    throw DomainError("fit_embedding: need at least " + std::to_string(map.min_fit_samples()) +
                      " samples");
  EmbeddingFit fit;
  if (opts.require_compatible) {
    fit.compatibility = chain_compatibility_check(map, opts.compat_triples, opts.seed);
    const CompatibilityReport& c = fit.compatibility;
    const bool ok = opts.antiholomorphic ? c.antiholomorphic_compatible() : c.holomorphic_compatible();
    if (!ok) {
      if (!opts.antiholomorphic && c.antiholomorphic_compatible())
        throw VerificationError(
            "fit_embedding: orientation-reversing boundary map; refit in antiholomorphic mode");
      throw VerificationError("fit_embedding: boundary map is not chain-compatible");
    }
  }
  const int p1 = map.p + 1;
  const int q1 = map.q + 1;
  std::vector<Vec> xs, ys;
  for (const auto& [xi, eta] : map.pairs) {
    Vec x = opts.antiholomorphic ? Vec(xi.lift().conjugate()) : xi.lift();
    xs.push_back(x / x.norm());
    ys.push_back(eta.lift() / eta.lift().norm());
  }
  const auto n = static_cast<Eigen::Index>(xs.size());

  // (I - y y^*) W x = 0 for every sample, linear in the entries of W.
  Mat a = Mat::Zero(n * q1, q1 * p1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Mat proj = Mat::Identity(q1, q1) - ys[i] * ys[i].adjoint();
    for (int r = 0; r < q1; ++r)
      for (int rp = 0; rp < q1; ++rp)
        for (int c = 0; c < p1; ++c) a(i * q1 + r, rp * p1 + c) = proj(r, rp) * xs[i][c];
  }
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinV);
  const Vec v = svd.matrixV().col(q1 * p1 - 1);
  Mat w(q1, p1);
  for (int r = 0; r < q1; ++r)
    for (int c = 0; c < p1; ++c) w(r, c) = v[r * p1 + c];

  Mat gram = Mat::Zero(p1, p1);
  for (const Vec& x : xs) gram += x * x.adjoint();
  const Mat gram_inv = gram.inverse();
  double obj = fit_objective(w, xs, ys);
  for (int it = 0; it < opts.max_iterations; ++it) {
    Mat rhs = Mat::Zero(q1, p1);
    for (Eigen::Index i = 0; i < n; ++i) {
      const cplx s = ys[i].dot(w * xs[i]);
      rhs += s * ys[i] * xs[i].adjoint();
    }
    Mat next = rhs * gram_inv;
    next /= next.norm();
    const double nobj = fit_objective(next, xs, ys);
    fit.iterations = it + 1;
    if (!(nobj < obj)) break;
    const bool done = obj - nobj <= 1e-15 * (1.0 + obj);
    w = next;
    obj = nobj;
    if (done) break;
  }

  const Mat jp = HermitianModel(map.p).form();
  const Mat jq = HermitianModel(map.q).form();
  const Mat m = w.adjoint() * jq * w;
  const double lambda = (jp * m).trace().real() / p1;
  if (!(lambda > 0.0)) throw VerificationError("fit_embedding: no rigid model (degenerate form)");
  const Mat k = jp * m / lambda;
  const Mat root = k.sqrt();
  w = w * root.inverse() / std::sqrt(lambda);

  fit.map = EmbeddingMap{w, 1.0, opts.antiholomorphic};
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = projective_distance(w * xs[i], ys[i]);
    fit.residuals.push_back(d);
    fit.max_residual = std::max(fit.max_residual, d);
  }
  if (!(fit.max_residual <= kRigidResidual))
    throw VerificationError("fit_embedding: no rigid model (residual " +
                            std::to_string(fit.max_residual) + ")");
  return fit;
}

EmbeddingVerification verify_embedding(const EmbeddingMap& w, const BoundarySampleMap& map,
                                       double tol) {
  map.validate();
  if (w.p() != map.p || w.q() != map.q) throw DimensionError("verify_embedding: dimension mismatch");
  EmbeddingVerification out;
  std::size_t good = 0;
  for (std::size_t i = 0; i < map.pairs.size(); ++i) {
    const double d = projective_distance(w.apply_lift(map.pairs[i].first.lift()),
                                         map.pairs[i].second.lift());
    if (d < tol) {
      ++good;
    } else {
      out.mismatched.push_back(i);
    }
  }
  out.fraction = map.pairs.empty() ? 0.0 : static_cast<double>(good) / map.pairs.size();
  out.isometry_residual = w.isometry_residual();
  out.mode = w.antiholomorphic ? "antiholomorphic" : "holomorphic";
  return out;
}

double embedding_distance(const EmbeddingMap& a, const EmbeddingMap& b,
                          const std::vector<ProjPoint>& points) {
  double worst = 0.0;
  for (const ProjPoint& x : points)
    worst = std::max(worst, projective_distance(a.apply_lift(x.lift()), b.apply_lift(x.lift())));
  return worst;
}

}  // namespace chaingeo
