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


#include "chaingeo/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>

#include "chaingeo/bounded_forms.hpp"
#include "chaingeo/busemann.hpp"
#include "chaingeo/cartan.hpp"
#include "chaingeo/finite_models.hpp"
#include "chaingeo/projective.hpp"
#include "chaingeo/reconstruction.hpp"
#include "chaingeo/toledo.hpp"

namespace chaingeo {

namespace {

CheckResult below(const std::string& suite, const std::string& name, double value, double tol,
                  std::string detail = "") {
  return {suite, name, value < tol, value, tol, std::move(detail)};
}

std::vector<CheckResult> cartan_suite(const VerifyOptions& o) {
  const std::string s = "cartan";
  std::vector<CheckResult> out;
  const HermitianModel m(2);
  Rng rng = make_rng(o.seed, 0x101);
  double cocycle = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::array<ProjPoint, 4> x{random_boundary_point(2, rng), random_boundary_point(2, rng),
                               random_boundary_point(2, rng), random_boundary_point(2, rng)};
    auto c = [&](int a, int b, int d) { return cartan_invariant(m, x[a], x[b], x[d]).value; };
    cocycle = std::max(cocycle, std::abs(c(1, 2, 3) - c(0, 2, 3) + c(0, 1, 3) - c(0, 1, 2)));
  }
  out.push_back(below(s, "cocycle_identity", cocycle, 1e-9));
  double inv = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Isometry g = random_isometry(2, derive_seed(o.seed, 0x1000 + i));
    std::array<ProjPoint, 3> x{random_boundary_point(2, rng), random_boundary_point(2, rng),
                               random_boundary_point(2, rng)};
    const double c0 = cartan_invariant(m, x[0], x[1], x[2]).value;
    const double c1 = cartan_invariant(m, apply(g, x[0]), apply(g, x[1]), apply(g, x[2])).value;
    inv = std::max(inv, std::abs(c0 - c1));
  }
  out.push_back(below(s, "invariance", inv, 1e-9));
  double extremal = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Chain ch = chain_through(m, random_boundary_point(2, rng), random_boundary_point(2, rng));
    const double c = cartan_invariant(m, sample_chain_point(ch, 0.3), sample_chain_point(ch, 2.0),
                                      sample_chain_point(ch, 4.5))
                         .value;
    extremal = std::max(extremal, 1.0 - std::abs(c));
  }
  out.push_back(below(s, "chain_extremality", extremal, 1e-7));
  double area = 0.0;
  for (int i = 0; i < 5; ++i) {
    std::array<ProjPoint, 3> x{random_boundary_point(2, rng), random_boundary_point(2, rng),
                               random_boundary_point(2, rng)};
    const double a = triangle_area(m, x[0], x[1], x[2]).value;
    area = std::max(area, std::abs(a / kPi - cartan_invariant(m, x[0], x[1], x[2]).value));
  }
  out.push_back(below(s, "area_matches_cartan", area, 1e-4));
  return out;
}

std::vector<CheckResult> busemann_suite(const VerifyOptions& o) {
  const std::string s = "busemann";
  std::vector<CheckResult> out;
  const HermitianModel m(2);
  const Entropy h = volume_entropy(m);
  out.push_back(below(s, "volume_entropy", std::abs(h.value - 2.0) / 2.0, 1e-3));
  Rng rng = make_rng(o.seed, 0x202);
  double worst_z = 0.0;
  for (int i = 0; i < 3; ++i) {
    const ProjPoint x = random_interior_point(2, rng, 1.5);
    const McEstimate e = integrate_e_xi(m, h, x, o.n, derive_seed(o.seed, 0x2000 + i));
    worst_z = std::max(worst_z, std::abs(e.estimate - 1.0) / e.stderr_);
  }
  out.push_back(below(s, "poisson_kernel_mass", worst_z, 3.0, "z-score"));
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    const Isometry g = random_isometry(2, derive_seed(o.seed, 0x2100 + i), 0.5);
    worst = std::max(worst, measure_transform_check(m, h, g, o.n, derive_seed(o.seed, 0x2200 + i)).max_z);
  }
  out.push_back(below(s, "measure_transform", worst, 3.0, "z-score"));
  return out;
}

std::vector<CheckResult> forms_suite(const VerifyOptions& o) {
  const std::string s = "forms";
  std::vector<CheckResult> out;
  const HermitianModel m(2);
  const Entropy h = volume_entropy(m);
  Rng rng = make_rng(o.seed, 0x303);
  const ProjPoint x = random_interior_point(2, rng, 1.0);
  auto unit = [&](const ProjPoint& b) {
    Vec w(3);
    for (int k = 0; k < 3; ++k) w[k] = cplx(std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng));
    TangentVector t = tangent_at(b, w);
    t.components /= norm(m, t);
    return t;
  };
  const TangentVector u = unit(x);
  const TangentVector v = unit(x);
  const McOptions mc{o.n, o.seed, 20, o.threads};
  const std::array<TangentVector, 2> uv{u, v};
  const std::array<TangentVector, 2> vu{v, u};
  const FormEvaluation c1 = delta_form_eval(m, h, constant_cocycle(3, 1.0), x, uv, mc);
  out.push_back(below(s, "constant_cocycle_vanishes", std::abs(c1.value) / c1.mc_stderr, 3.0, "z-score"));
  const FormEvaluation a = delta_form_eval(m, h, cartan_cocycle(), x, uv, mc);
  const FormEvaluation b = delta_form_eval(m, h, cartan_cocycle(), x, vu, mc);
  out.push_back(below(s, "antisymmetry", std::abs(a.value + b.value), 1e-12));
  out.push_back({s, "norm_bound", a.within_bound(m, h.value, 1.0), std::abs(a.value), h.value * h.value, ""});
  const HermitianModel mq(3);
  std::vector<std::pair<Isometry, Isometry>> gens;
  for (int i = 0; i < 3; ++i) {
    const Isometry g = random_isometry(2, derive_seed(o.seed, 0x3000 + i));
    gens.emplace_back(g, extend_standard(g, 3));
  }
  const BoundaryMap phi = BoundaryMap::embedding(standard_embedding(2, 3));
  out.push_back(below(s, "chain_formula_standard",
                      chain_formula_check(m, mq, gens, phi, 1.0, 1000, o.seed).residual, 1e-8));
  return out;
}

std::vector<CheckResult> toledo_suite(const VerifyOptions& o) {
  const std::string s = "toledo";
  std::vector<CheckResult> out;
  const HermitianModel m(1);
  const SurfaceGroupRep rep = octagon_representation(1);
  const ToledoResult r = toledo_surface_group(m, rep, std::nullopt, o.threads);
  out.push_back(below(s, "octagon_maximal", std::abs(r.value - 1.0), 1e-3));
  const ToledoResult rc = toledo_surface_group(m, rep.conjugated(), std::nullopt, o.threads);
  out.push_back(below(s, "conjugate_minimal", std::abs(rc.value + 1.0), 1e-3));
  const ToledoResult rt = toledo_surface_group(m, SurfaceGroupRep::trivial(2, 1), std::nullopt, o.threads);
  out.push_back(below(s, "trivial_zero", std::abs(rt.value), 1e-12));
  const MilnorWood mw = milnor_wood_check(r, 1, 1);
  out.push_back({s, "milnor_wood", mw.ok, mw.margin, r.error_bound, "margin"});
  return out;
}

std::vector<CheckResult> projective_suite(const VerifyOptions& o) {
  const std::string s = "projective";
  std::vector<CheckResult> out;
  Rng rng = make_rng(o.seed, 0x404);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 7);
  auto rq = [&] { return Rational(num(rng), den(rng)); };
  int exact = 0;
  int tried = 0;
  while (tried < 100) {
    using G = GaussianRational;
    const G a(rq(), rq());
    const G dir(rq(), rq());
    const G dir2(rq(), rq());
    const Line<G> d{a, dir};
    const Line<G> dp{a, dir2};
    const G b = a + G(rq()) * dir;
    const G c = a + G(rq()) * dir;
    const G mpt(rq(), rq());
    try {
      const QuadConfig<G> cfg{d, dp, a, b, c, mpt};
      const QuadResult<G> res = complete_quadrilateral(cfg);
      ++tried;
      if (cross_ratio(a, b, c, res.d) == G(-1)) ++exact;
    } catch (const DomainError&) {
      continue;
    }
  }
  out.push_back({s, "quadrilateral_exact", exact == tried, static_cast<double>(tried - exact), 0.0,
                 "non-harmonic results"});
  std::vector<std::pair<cplx, cplx>> samples;
  std::normal_distribution<double> g(0.0, 1.0);
  const cplx lambda(1.5, -0.7), c(0.2, 2.0);
  for (int i = 0; i < 50; ++i) {
    const cplx z(g(rng), g(rng));
    samples.emplace_back(z, lambda * z + c);
  }
  const AffineFit f = fit_affine(samples);
  out.push_back(below(s, "affine_recovery", std::abs(f.lambda - lambda) + std::abs(f.c - c), 1e-10));
  return out;
}

std::vector<CheckResult> reconstruction_suite(const VerifyOptions& o) {
  const std::string s = "reconstruction";
  std::vector<CheckResult> out;
  double worst = 0.0;
  bool rejected = true;
  for (int i = 0; i < 3; ++i) {
    const Isometry g = random_isometry(3, derive_seed(o.seed, 0x5000 + i));
    EmbeddingMap truth = standard_embedding(2, 3);
    truth.w = g.matrix() * truth.w;
    const BoundarySampleMap sm = sample_boundary_map(BoundaryMap::embedding(truth), 200, derive_seed(o.seed, i));
    const EmbeddingFit fit = fit_embedding(sm, {.seed = o.seed});
    Rng rng = make_rng(o.seed, 0x5100 + i);
    std::vector<ProjPoint> held;
    for (int k = 0; k < 100; ++k) held.push_back(random_boundary_point(2, rng));
    worst = std::max(worst, embedding_distance(fit.map, truth, held));
    try {
      fit_embedding(scramble_targets(sm, o.seed + i), {.seed = o.seed});
      rejected = false;
    } catch (const VerificationError&) {
    }
  }
  out.push_back(below(s, "planted_recovery", worst, 1e-6));
  out.push_back({s, "scrambled_rejected", rejected, rejected ? 0.0 : 1.0, 0.0, ""});
  return out;
}

std::vector<CheckResult> finite_suite(const VerifyOptions& o) {
  const std::string s = "finite";
  std::vector<CheckResult> out;
  for (const std::string name : {"S3", "S4"}) {
    const FiniteGroupModel model = preset_model(name);
    std::vector<Rational> w;
    Rational total = 0;
    for (int x = 0; x < model.n_hq(); ++x) {
      w.push_back(Rational(x + 1));
      total += x + 1;
    }
    for (auto& v : w) v /= total;
    const WeightedQuotient wq(model, w);
    bool ok = true;
    std::string detail;
    try {
      const Psi psi = psi_kernel(model, bruhat_beta(model), wq);
      const FiberedComplex cx(model, wq, 4);
      for (int n = 1; n <= 3 && ok; ++n) {
        for (int t = 0; t < 10 && ok; ++t) {
          const RFunction f = random_rational_function(cx.space(n).size(), derive_seed(o.seed, 100 * n + t));
          const RFunction lhs_a = cx.h(n, psi, cx.d(n, f));
          const RFunction lhs_b = cx.d(n - 1, cx.h(n - 1, psi, f));
          for (std::size_t k = 0; k < f.size(); ++k) ok = ok && lhs_a[k] + lhs_b[k] == f[k];
        }
      }
      for (int n = 0; n <= 3; ++n) {
        std::size_t expect = static_cast<std::size_t>(model.n_gh());
        for (int k = 0; k < n; ++k) expect *= static_cast<std::size_t>(model.n_hq());
        ok = ok && cx.space(n).size() == expect;
      }
    } catch (const VerificationError& e) {
      ok = false;
      detail = e.what();
    }
    out.push_back({s, "homotopy_identity_" + name, ok, ok ? 0.0 : 1.0, 0.0, detail});
  }
  return out;
}

using Suite = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s{
      {"busemann", busemann_suite},     {"cartan", cartan_suite},
      {"finite", finite_suite},         {"forms", forms_suite},
      {"projective", projective_suite}, {"reconstruction", reconstruction_suite},
      {"toledo", toledo_suite}};
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : suites()) out.push_back(k);
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& [k, fn] : suites()) {
      auto r = fn(opts);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  const auto it = suites().find(name);
  if (it == suites().end()) throw DomainError("unknown suite '" + name + "'");
  return it->second(opts);
}

}  // namespace chaingeo
