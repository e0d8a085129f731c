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


#include "chaingeo/bounded_forms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "chaingeo/cartan.hpp"
#include "chaingeo/detail/parallel.hpp"

namespace chaingeo {

double BoundaryCocycle::operator()(std::span<const Vec> xi) const {
  if (static_cast<int>(xi.size()) != arity) throw DimensionError("BoundaryCocycle: arity mismatch");
  return eval(xi);
}

BoundaryCocycle constant_cocycle(int arity, double value) {
  return {arity, [value](std::span<const Vec>) { return value; }, std::abs(value), false};
}

BoundaryCocycle cartan_cocycle() {
  return {3,
          [](std::span<const Vec> xi) {
            const CartanValue c = cartan_invariant(xi[0], xi[1], xi[2]);
            return c.degenerate ? 0.0 : c.value;
          },
          1.0, true};
}

BoundaryCocycle coboundary(const BoundaryCocycle& c) {
  if (c.arity != 2) throw DimensionError("coboundary: expects a 2-point cocycle");
  auto f = c.eval;
  return {3,
          [f](std::span<const Vec> xi) {
            const std::array<Vec, 2> a{xi[1], xi[2]};
            const std::array<Vec, 2> b{xi[0], xi[2]};
            const std::array<Vec, 2> d{xi[0], xi[1]};
            return f(a) - f(b) + f(d);
          },
          3.0 * c.sup_norm_bound, c.alternating};
}

CocycleAudit audit_cocycle(const BoundaryCocycle& c, std::span<const std::vector<Vec>> tuples) {
  CocycleAudit out;
  for (const auto& t : tuples) {
    const double v = c(t);
    out.max_abs = std::max(out.max_abs, std::abs(v));
    if (c.alternating && t.size() >= 2) {
      std::vector<Vec> s = t;
      std::swap(s[0], s[1]);
      out.alternation_defect = std::max(out.alternation_defect, std::abs(v + c(s)));
    }
  }
  out.bounded = out.max_abs <= c.sup_norm_bound * (1.0 + 1e-12);
  return out;
}

BoundaryMap BoundaryMap::embedding(EmbeddingMap w) {
  BoundaryMap m(w.p(), w.q(), [w](const Vec& xi) { return w.apply_lift(xi); });
  m.embedding_ = std::move(w);
  return m;
}

BoundaryMap BoundaryMap::table(std::vector<std::pair<ProjPoint, ProjPoint>> samples) {
  if (samples.empty()) throw DomainError("BoundaryMap: empty sample table");
  const int p = samples.front().first.p();
  const int q = samples.front().second.p();
  for (const auto& [a, b] : samples) {
    if (a.p() != p || b.p() != q) throw DimensionError("BoundaryMap: inconsistent table");
  }
  auto shared = std::make_shared<const std::vector<std::pair<ProjPoint, ProjPoint>>>(std::move(samples));
  return BoundaryMap(p, q, [shared](const Vec& xi) {
    double best = std::numeric_limits<double>::infinity();
    const Vec* out = nullptr;
    for (const auto& [a, b] : *shared) {
      const double d = projective_distance(a.lift(), xi);
      if (d < best) {
        best = d;
        out = &b.lift();
      }
    }
    return *out;
  });
}

BoundaryMap BoundaryMap::function(int p, int q, std::function<Vec(const Vec&)> f) {
  if (p < 1 || q < 1) throw DomainError("BoundaryMap: dimensions must be >= 1");
  return BoundaryMap(p, q, std::move(f));
}

BoundaryMap BoundaryMap::constant(int p, const ProjPoint& value) {
  Vec v = value.lift();
  return BoundaryMap(p, value.p(), [v](const Vec&) { return v; });
}

Vec BoundaryMap::apply_lift(const Vec& xi) const {
  if (xi.size() != p_ + 1) throw DimensionError("BoundaryMap: dimension mismatch");
  Vec out = f_(xi);
  if (out.size() != q_ + 1) throw DimensionError("BoundaryMap: image has wrong dimension");
  return out;
}

ProjPoint BoundaryMap::apply(const ProjPoint& xi) const {
  return ProjPoint::from_lift(apply_lift(xi.lift()));
}

BoundaryCocycle pullback_cartan(const BoundaryMap& phi) {
  return {3,
          [phi](std::span<const Vec> xi) {
            const CartanValue c =
                cartan_invariant(phi.apply_lift(xi[0]), phi.apply_lift(xi[1]), phi.apply_lift(xi[2]));
            return c.degenerate ? 0.0 : c.value;
          },
          1.0, true};
}

bool FormEvaluation::within_bound(const HermitianModel& model, double h, double sup_norm) const {
  double bound = sup_norm;
  for (const auto& v : vectors) bound *= h * norm(model, v);
  return std::abs(value) <= bound + 3.0 * mc_stderr;
}

namespace {

struct BatchStats {
  double mean = 0.0;
  double stderr_ = 0.0;
};

BatchStats batch_stats(const std::vector<double>& v) {
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  if (v.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

// Transvection to x together with the pulled-back tangent vectors at the
// origin, truncated to their C^p part.
struct Frame {
  Mat t;
  std::vector<Vec> w;
};

Frame make_frame(const ProjPoint& x, std::span<const TangentVector> v) {
  const Isometry tx = transvection(x);
  const Isometry inv = tx.inverse();
  const int p = x.p();
  Frame f{tx.matrix(), {}};
  for (const auto& vi : v) {
    if (!same_point(vi.base, x, 1e-9)) throw DomainError("delta_form_eval: vector not based at x");
    const TangentVector at0 = tangent_from_lift(inv.matrix() * x.lift(), inv.matrix() * vi.components);
    f.w.push_back(at0.components.head(p));
  }
  return f;
}

double batch_mean(const Frame& f, const BoundaryCocycle& c, double coef, std::size_t n,
                  std::uint64_t seed) {
  const int arity = c.arity;
  const int p = static_cast<int>(f.t.rows()) - 1;
  const int nv = arity - 1;
  Rng rng = make_rng(seed, 0xdf);
  std::vector<Vec> xi(arity, Vec(p + 1));
  std::vector<Vec> ball(arity);
  Vec l(p + 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double sum = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    for (int k = 0; k < arity; ++k) {
      ball[k] = detail::random_unit_vector(p, rng);
      l.head(p) = ball[k];
      l[p] = 1.0;
      Vec y = f.t * l;
      y *= inv_sqrt2 / y[p];
      xi[k] = std::move(y);
    }
    const double cv = c.eval(xi);
    if (cv == 0.0) continue;
    // a(i, j) = h g_x(v_j, X_{xi_i}(x)).
    auto a = [&](int i, int j) { return coef * ball[i].dot(f.w[j]).real(); };
    double term = 0.0;
    switch (nv) {
      case 0: term = 1.0; break;
      case 1: term = a(1, 0); break;
      default: term = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0); break;
    }
    sum += cv * term;
  }
  return sum / static_cast<double>(n);
}

}  // namespace

FormEvaluation delta_form_eval(const HermitianModel& model, const Entropy& entropy,
                               const BoundaryCocycle& c, const ProjPoint& x,
                               std::span<const TangentVector> v, const McOptions& opts) {
  if (c.arity < 1 || c.arity > 3) throw DimensionError("delta_form_eval: degree must be 0, 1 or 2");
  if (static_cast<int>(v.size()) != c.arity - 1)
    throw DimensionError("delta_form_eval: arity does not match the number of vectors");
  if (!x.is_interior()) throw DomainError("delta_form_eval: x must be interior");
  model.check_dim(x.lift());
  if (opts.batches < 1 || opts.n < static_cast<std::size_t>(opts.batches))
    throw DomainError("delta_form_eval: need at least one sample per batch");
  const Frame frame = make_frame(x, v);
  const double coef = entropy.value * 2.0 * model.metric_scale();
  const std::size_t per = opts.n / static_cast<std::size_t>(opts.batches);
  std::vector<double> means(opts.batches);
  detail::parallel_for(means.size(), opts.threads, [&](std::size_t b) {
    means[b] = batch_mean(frame, c, coef, per, derive_seed(opts.seed, b));
  });
  const BatchStats st = batch_stats(means);
  FormEvaluation out{x, std::vector<TangentVector>(v.begin(), v.end()), st.mean, st.stderr_,
                     per * means.size(), opts.seed, means};
  return out;
}

FormEvaluation pullback_kappa_form(const HermitianModel& model, const Entropy& entropy,
                                   const BoundaryMap& phi, const ProjPoint& x,
                                   const TangentVector& u, const TangentVector& v,
                                   const McOptions& opts) {
  if (phi.p() != model.p()) throw DimensionError("pullback_kappa_form: map source mismatch");
  const std::array<TangentVector, 2> vs{u, v};
  return delta_form_eval(model, entropy, pullback_cartan(phi), x, vs, opts);
}

namespace {

TangentVector moved(const TangentVector& dir, double t, const TangentVector& w) {
  return tangent_from_lift(dir.base.lift() + t * dir.components, w.components);
}

FdDerivative richardson(const std::function<double(double)>& d, double step) {
  const double d1 = d(step);
  const double d2 = d(2.0 * step);
  return {(4.0 * d1 - d2) / 3.0, std::abs(d1 - d2) / 3.0};
}

void check_common_base(const TangentVector& a, const TangentVector& b) {
  if (!same_point(a.base, b.base, 1e-9))
    throw DomainError("exterior_derivative_fd: vectors must share a base point");
}

}  // namespace

FdDerivative exterior_derivative_fd(const TwoFormField& omega, const TangentVector& u,
                                    const TangentVector& v, const TangentVector& w, double step) {
  check_common_base(u, v);
  check_common_base(u, w);
  if (!(step > 0.0)) throw DomainError("exterior_derivative_fd: step must be positive");
  auto partial = [&](const TangentVector& dir, const TangentVector& a, const TangentVector& b,
                     double h) {
    return (omega(moved(dir, h, a), moved(dir, h, b)) - omega(moved(dir, -h, a), moved(dir, -h, b))) /
           (2.0 * h);
  };
  return richardson(
      [&](double h) { return partial(u, v, w, h) - partial(v, u, w, h) + partial(w, u, v, h); },
      step);
}

FdDerivative exterior_derivative_fd(const OneFormField& alpha, const TangentVector& u,
                                    const TangentVector& v, double step) {
  check_common_base(u, v);
  if (!(step > 0.0)) throw DomainError("exterior_derivative_fd: step must be positive");
  auto partial = [&](const TangentVector& dir, const TangentVector& a, double h) {
    return (alpha(moved(dir, h, a)) - alpha(moved(dir, -h, a))) / (2.0 * h);
  };
  return richardson([&](double h) { return partial(u, v, h) - partial(v, u, h); }, step);
}

namespace {

McOptions batch_options(const McOptions& opts, std::size_t b) {
  return {opts.n / static_cast<std::size_t>(opts.batches), derive_seed(opts.seed, 0xb000 + b), 1, 1};
}

}  // namespace

ClosednessReport closedness_check(const HermitianModel& model, const Entropy& entropy,
                                  const BoundaryCocycle& c, const TangentVector& u,
                                  const TangentVector& v, const TangentVector& w,
                                  const McOptions& opts, double step) {
  if (c.arity != 3) throw DimensionError("closedness_check: expects a 3-point cocycle");
  if (opts.batches < 2) throw DomainError("closedness_check: need at least two batches");
  std::vector<double> vals(opts.batches);
  std::vector<double> errs(opts.batches);
  detail::parallel_for(vals.size(), opts.threads, [&](std::size_t b) {
    const McOptions ob = batch_options(opts, b);
    TwoFormField field = [&](const TangentVector& a, const TangentVector& bb) {
      const std::array<TangentVector, 2> vs{a, bb};
      return delta_form_eval(model, entropy, c, a.base, vs, ob).value;
    };
    const FdDerivative d = exterior_derivative_fd(field, u, v, w, step);
    vals[b] = d.value;
    errs[b] = d.fd_error;
  });
  const BatchStats st = batch_stats(vals);
  ClosednessReport out;
  out.value = st.mean;
  out.mc_stderr = st.stderr_;
  out.fd_error = *std::max_element(errs.begin(), errs.end());
  const double h = entropy.value;
  const double band = h * h * h * c.sup_norm_bound * norm(model, u) * norm(model, v) * norm(model, w);
  out.noise_warning = st.stderr_ > 0.1 * band;
  out.n = (opts.n / static_cast<std::size_t>(opts.batches)) * vals.size();
  out.seed = opts.seed;
  return out;
}

CommutationReport commutation_check(const HermitianModel& model, const Entropy& entropy,
                                    const BoundaryCocycle& c1, const TangentVector& u,
                                    const TangentVector& v, const McOptions& opts, double step) {
  if (c1.arity != 2) throw DimensionError("commutation_check: expects a 2-point cocycle");
  if (opts.batches < 2) throw DomainError("commutation_check: need at least two batches");
  const BoundaryCocycle dc = coboundary(c1);
  std::vector<double> lhs(opts.batches), rhs(opts.batches), diff(opts.batches), errs(opts.batches);
  detail::parallel_for(lhs.size(), opts.threads, [&](std::size_t b) {
    const McOptions ob = batch_options(opts, b);
    const std::array<TangentVector, 2> uv{u, v};
    lhs[b] = delta_form_eval(model, entropy, dc, u.base, uv, ob).value;
    OneFormField alpha = [&](const TangentVector& a) {
      const std::array<TangentVector, 1> vs{a};
      return delta_form_eval(model, entropy, c1, a.base, vs, ob).value;
    };
    const FdDerivative d = exterior_derivative_fd(alpha, u, v, step);
    rhs[b] = d.value;
    errs[b] = d.fd_error;
    diff[b] = lhs[b] - rhs[b];
  });
  CommutationReport out;
  out.lhs = batch_stats(lhs).mean;
  out.rhs = batch_stats(rhs).mean;
  out.stderr_ = batch_stats(diff).stderr_;
  out.fd_error = *std::max_element(errs.begin(), errs.end());
  return out;
}

Isometry extend_standard(const Isometry& g, int q) {
  const EmbeddingMap w = standard_embedding(g.p(), q);
  const Mat jp = HermitianModel(g.p()).form();
  const Mat jq = HermitianModel(q).form();
  const Mat proj = w.w * jp * w.w.adjoint() * jq;
  const Mat m = w.w * g.normalized() * jp * w.w.adjoint() * jq + (Mat::Identity(q + 1, q + 1) - proj);
  return Isometry(m, 1e-8);
}

ChainFormulaReport chain_formula_check(const HermitianModel& source, const HermitianModel& target,
                                       std::span<const std::pair<Isometry, Isometry>> generators,
                                       const BoundaryMap& phi, double declared_i,
                                       std::size_t triples, std::uint64_t seed) {
  if (phi.p() != source.p() || phi.q() != target.p())
    throw DimensionError("chain_formula_check: map dimensions do not match the models");
  Rng rng = make_rng(seed, 0xcf);
  ChainFormulaReport out;
  for (const auto& [a, b] : generators) {
    if (a.p() != source.p() || b.p() != target.p())
      throw DimensionError("chain_formula_check: generator dimension mismatch");
    for (int k = 0; k < 20; ++k) {
      const ProjPoint xi = random_boundary_point(source.p(), rng);
      const Vec lhs = phi.apply_lift(a.matrix() * xi.lift());
      const Vec rhs = b.matrix() * phi.apply_lift(xi.lift());
      out.equivariance_defect = std::max(out.equivariance_defect, projective_distance(lhs, rhs));
    }
  }
  if (out.equivariance_defect > 1e-8)
    throw DomainError("chain_formula_check: boundary map is not equivariant");
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  while (out.triples < triples) {
    const ProjPoint xi = random_boundary_point(source.p(), rng);
    const ProjPoint eta = random_boundary_point(source.p(), rng);
    if (same_point(xi, eta, 1e-6)) continue;
    const Chain ch = chain_through(source, xi, eta);
    std::array<double, 3> t{angle(rng), angle(rng), angle(rng)};
    bool distinct = true;
    for (int i = 0; i < 3; ++i) {
      const double d = std::abs(std::remainder(t[i] - t[(i + 1) % 3], 2.0 * kPi));
      distinct = distinct && d > 1e-3;
    }
    if (!distinct) continue;
    std::array<Vec, 3> src;
    std::array<Vec, 3> img;
    for (int i = 0; i < 3; ++i) {
      src[i] = sample_chain_point(ch, t[i]).lift();
      img[i] = phi.apply_lift(src[i]);
    }
    const double cp = cartan_invariant(src[0], src[1], src[2]).value;
    const CartanValue cq = cartan_invariant(img[0], img[1], img[2]);
    out.residual = std::max(out.residual, std::abs((cq.degenerate ? 0.0 : cq.value) - declared_i * cp));
    ++out.triples;
  }
  return out;
}

}  // namespace chaingeo
