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


// chaingeo command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chaingeo/bounded_forms.hpp"
#include "chaingeo/busemann.hpp"
#include "chaingeo/cartan.hpp"
#include "chaingeo/finite_models.hpp"
#include "chaingeo/io.hpp"
#include "chaingeo/projective.hpp"
#include "chaingeo/reconstruction.hpp"
#include "chaingeo/toledo.hpp"
#include "chaingeo/verify.hpp"

namespace cg = chaingeo;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct Global {
  std::uint64_t seed = 0;
  std::size_t n = 200000;
  int threads = 1;
  std::optional<double> tolerance;
  std::string format = "json";
  std::string output;
};

// Raised by a subcommand whose checks ran but did not pass.
struct Failed {
  json report;
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CHAINGEO_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw cg::DomainError("CHAINGEO_SEED must be a non-negative integer");
    }
  }
  return 0;
}

void emit(const Global& g, const json& j, const std::string& csv = "") {
  std::ostringstream os;
  if (g.format == "csv" && !csv.empty()) {
    os << csv;
  } else {
    os << j.dump(2) << '\n';
  }
  if (g.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(g.output);
    if (!out) throw cg::DomainError("cannot write '" + g.output + "'");
    out << os.str();
  }
}

json cartan_cmd(const Global& g, int p, const std::string& path, std::string& csv) {
  const cg::HermitianModel model(p);
  const json in = cg::io::load_file(path);
  std::vector<std::array<cg::ProjPoint, 3>> triples;
  if (in.is_object() && in.contains("triples")) {
    for (const auto& t : in.at("triples")) {
      if (t.size() != 3) throw cg::DomainError("each triple needs three points");
      triples.push_back({cg::io::point_from_json(t[0]), cg::io::point_from_json(t[1]),
                         cg::io::point_from_json(t[2])});
    }
  } else {
    const auto pts = cg::io::points_from_json(in);
    if (pts.size() % 3 != 0) throw cg::DomainError("point count must be a multiple of 3");
    for (std::size_t i = 0; i < pts.size(); i += 3) triples.push_back({pts[i], pts[i + 1], pts[i + 2]});
  }
  json values = json::array();
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    const cg::CartanValue c = cg::cartan_invariant(model, t[0], t[1], t[2]);
    values.push_back({{"index", i}, {"c", c.value}, {"degenerate", c.degenerate}});
    rows.push_back({static_cast<double>(i), c.value, c.degenerate ? 1.0 : 0.0});
  }
  std::ostringstream os;
  cg::io::write_csv(os, {"index", "c", "degenerate"}, rows);
  csv = os.str();
  return {{"command", "cartan"}, {"model", cg::io::to_json(model)}, {"values", values},
          {"seed", g.seed}, {"N", triples.size()}, {"tolerance", 1e-12}};
}

json chain_cmd(const Global& g, int p, const std::string& path, int samples, std::string& csv) {
  const cg::HermitianModel model(p);
  const auto pts = cg::io::points_from_json(cg::io::load_file(path));
  if (pts.size() < 2) throw cg::DomainError("chain needs at least two boundary points");
  const cg::Chain ch = cg::chain_through(model, pts[0], pts[1]);
  const double tol = g.tolerance.value_or(1e-9);
  json members = json::array();
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const double r = cg::chain_residual(ch, pts[i].lift());
    members.push_back({{"index", i}, {"residual", r}, {"on_chain", r < tol}});
  }
  json sampled = json::array();
  std::vector<std::vector<double>> rows;
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * cg::kPi * k / samples;
    const cg::ProjPoint x = cg::sample_chain_point(ch, t);
    sampled.push_back(cg::io::to_json(x));
    std::vector<double> row{t};
    const cg::Vec b = x.ball();
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      row.push_back(b[i].real());
      row.push_back(b[i].imag());
    }
    rows.push_back(row);
  }
  std::vector<std::string> header{"t"};
  for (int i = 0; i < p; ++i) {
    header.push_back("re" + std::to_string(i));
    header.push_back("im" + std::to_string(i));
  }
  std::ostringstream os;
  cg::io::write_csv(os, header, rows);
  csv = os.str();
  return {{"command", "chain"},
          {"model", cg::io::to_json(model)},
          {"positive", cg::io::to_json(ch.positive())},
          {"negative", cg::io::to_json(ch.negative())},
          {"membership", members},
          {"samples", sampled},
          {"seed", g.seed},
          {"N", samples},
          {"tolerance", tol}};
}

json toledo_cmd(const Global& g, const std::string& rep_path, const std::string& preset,
                std::optional<int> target, bool conjugate, bool emit_rep) {
  std::optional<cg::SurfaceGroupRep> rep;
  int target_q = 1;
  if (!preset.empty()) {
    if (preset != "octagon") throw cg::DomainError("unknown preset '" + preset + "'");
    rep = cg::octagon_representation(1);
  } else {
    const json in = cg::io::load_file(rep_path);
    rep = cg::io::rep_from_json(in);
    target_q = in.value("target_q", rep->p());
  }
  if (target) target_q = *target;
  if (target_q < 1) throw cg::DomainError("target_q must be >= 1");
  if (rep->p() < target_q) {
    if (rep->p() != 1) throw cg::DomainError("only PU(1,1) representations can be extended");
    std::vector<cg::Isometry> gens;
    for (const auto& a : rep->generators()) gens.push_back(cg::extend_standard(a, target_q));
    rep = cg::SurfaceGroupRep(rep->genus(), std::move(gens));
  } else if (rep->p() != target_q) {
    throw cg::DimensionError("representation dimension exceeds the target");
  }
  if (conjugate) rep = rep->conjugated();
  if (emit_rep) return cg::io::to_json(*rep);
  const cg::HermitianModel model(target_q);
  const cg::ToledoResult r = cg::toledo_surface_group(model, *rep, std::nullopt, g.threads);
  const cg::MilnorWood mw = cg::milnor_wood_check(r, 1, 1);
  return {{"command", "toledo"},
          {"genus", rep->genus()},
          {"target_q", target_q},
          {"i_rho", r.value},
          {"err", r.error_bound},
          {"triangles", r.triangles},
          {"relator_residual", rep->relator_residual()},
          {"mw_ok", mw.ok},
          {"mw_margin", mw.margin},
          {"seed", g.seed},
          {"N", r.triangles},
          {"tolerance", r.error_bound}};
}

cg::BoundaryMap map_from_json(const json& j) {
  if (j.contains("w")) return cg::BoundaryMap::embedding(cg::io::embedding_from_json(j));
  const cg::BoundarySampleMap s = cg::io::sample_map_from_json(j);
  return cg::BoundaryMap::table(s.pairs);
}

json delta_form_cmd(const Global& g, const std::string& path, int batches) {
  const json in = cg::io::load_file(path);
  const cg::HermitianModel model = cg::io::model_from_json(in.at("model"));
  const cg::Entropy h = cg::volume_entropy(model);
  const cg::ProjPoint x = cg::io::point_from_json(in.at("x"));
  if (!x.is_interior()) throw cg::DomainError("x must be an interior point");
  std::vector<cg::TangentVector> v;
  // size p: velocity in ball coordinates; size p+1: vector in the lift space
  const cg::Vec z = x.ball();
  cg::Vec base(z.size() + 1);
  base << z, 1.0;
  for (const auto& c : in.value("vectors", json::array())) {
    const cg::Vec w = cg::io::vec_from_json(c);
    if (w.size() == z.size()) {
      cg::Vec dl = cg::Vec::Zero(z.size() + 1);
      dl.head(z.size()) = w;
      v.push_back(cg::tangent_from_lift(base, dl));
    } else {
      v.push_back(cg::tangent_at(x, w));
    }
  }
  const std::string kind = in.value("cocycle", std::string("cartan"));
  cg::BoundaryCocycle c;
  if (kind == "cartan") {
    c = cg::cartan_cocycle();
  } else if (kind == "constant") {
    c = cg::constant_cocycle(static_cast<int>(v.size()) + 1, in.value("value", 1.0));
  } else if (kind == "pullback") {
    c = cg::pullback_cartan(map_from_json(in.at("map")));
  } else {
    throw cg::DomainError("cocycle must be cartan, constant or pullback");
  }
  const cg::McOptions mc{g.n, g.seed, batches, g.threads};
  const cg::FormEvaluation e = cg::delta_form_eval(model, h, c, x, v, mc);
  const bool ok = e.within_bound(model, h.value, c.sup_norm_bound);
  return {{"command", "delta-form"},
          {"model", cg::io::to_json(model)},
          {"entropy", h.value},
          {"cocycle", kind},
          {"value", e.value},
          {"stderr", e.mc_stderr},
          {"within_bound", ok},
          {"seed", e.seed},
          {"N", e.n},
          {"tolerance", 3.0 * e.mc_stderr}};
}

json reconstruct_cmd(const Global& g, const std::string& path, bool anti) {
  const cg::BoundarySampleMap m = cg::io::sample_map_from_json(cg::io::load_file(path));
  const double tol = g.tolerance.value_or(1e-6);
  cg::EmbeddingFit fit;
  try {
    fit = cg::fit_embedding(m, {.antiholomorphic = anti, .seed = g.seed});
  } catch (const cg::VerificationError& e) {
    const cg::CompatibilityReport c = cg::chain_compatibility_check(m, 500, g.seed);
    throw Failed{{{"command", "reconstruct"},
                  {"status", "failed"},
                  {"error", e.what()},
                  {"co_chain_fraction", c.co_chain_fraction},
                  {"orientation_fraction", c.orientation_fraction},
                  {"non_chain_fraction", c.non_chain_fraction},
                  {"seed", g.seed},
                  {"N", m.pairs.size()},
                  {"tolerance", tol}}};
  }
  const cg::EmbeddingVerification v = cg::verify_embedding(fit.map, m, tol);
  const auto& c = fit.compatibility;
  return {{"command", "reconstruct"},
          {"status", "ok"},
          {"embedding", cg::io::to_json(fit.map)},
          {"mode", v.mode},
          {"fraction", v.fraction},
          {"mismatched", v.mismatched},
          {"isometry_residual", v.isometry_residual},
          {"max_residual", fit.max_residual},
          {"residuals", fit.residuals},
          {"compatibility",
           {{"co_chain_triples", c.co_chain_triples},
            {"co_chain_fraction", c.co_chain_fraction},
            {"orientation_fraction", c.orientation_fraction},
            {"non_chain_triples", c.non_chain_triples},
            {"non_chain_fraction", c.non_chain_fraction}}},
          {"seed", g.seed},
          {"N", m.pairs.size()},
          {"tolerance", tol}};
}

json finite_model_cmd(const Global& g, const std::string& path, const std::string& preset,
                      const std::string& weights, int max_n, int trials) {
  const cg::FiniteGroupModel model =
      preset.empty() ? cg::io::group_model_from_json(cg::io::load_file(path)) : cg::preset_model(preset);
  std::vector<cg::Rational> w;
  if (!weights.empty()) {
    std::stringstream ss(weights);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(cg::io::rational_from_json(json(tok)));
  }
  const cg::WeightedQuotient wq = w.empty() ? cg::WeightedQuotient::uniform(model)
                                            : cg::WeightedQuotient(model, w);
  json verdicts = json::array();
  bool all = true;
  auto verdict = [&](const std::string& name, bool ok, const std::string& detail = "") {
    verdicts.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
    all = all && ok;
  };
  std::optional<cg::Psi> psi;
  try {
    psi = cg::psi_kernel(model, cg::bruhat_beta(model), wq);
    verdict("psi_properties", true);
  } catch (const cg::VerificationError& e) {
    verdict("psi_properties", false, e.what());
  }
  const cg::FiberedComplex cx(model, wq, max_n + 1);
  json counts = json::array();
  for (int n = 0; n <= max_n; ++n) {
    std::size_t expect = static_cast<std::size_t>(model.n_gh());
    for (int k = 0; k < n; ++k) expect *= static_cast<std::size_t>(model.n_hq());
    counts.push_back({{"n", n}, {"tuples", cx.space(n).size()}, {"expected", expect}});
    verdict("fibered_count_n" + std::to_string(n), cx.space(n).size() == expect);
  }
  if (psi) {
    for (int n = 1; n <= max_n; ++n) {
      bool ok = true;
      for (int t = 0; t < trials && ok; ++t) {
        const cg::RFunction f =
            cg::random_rational_function(cx.space(n).size(), cg::derive_seed(g.seed, 1000 * n + t));
        const cg::RFunction a = cx.h(n, *psi, cx.d(n, f));
        const cg::RFunction b = cx.d(n - 1, cx.h(n - 1, *psi, f));
        for (std::size_t k = 0; k < f.size(); ++k) ok = ok && a[k] + b[k] == f[k];
      }
      verdict("homotopy_identity_n" + std::to_string(n), ok);
    }
  }
  json out{{"command", "finite-model"},
           {"model", model.name()},
           {"order", model.group().order()},
           {"G/H", model.n_gh()},
           {"H/Q", model.n_hq()},
           {"fibered_products", counts},
           {"verdicts", verdicts},
           {"seed", g.seed},
           {"N", trials},
           {"tolerance", 0}};
  if (!all) throw Failed{out};
  return out;
}

json verify_cmd(const Global& g, const std::string& suite) {
  const cg::VerifyOptions opts{g.seed, g.n, g.threads};
  const auto results = cg::run_suite(suite, opts);
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"suite", r.suite},
                   {"check", r.name},
                   {"passed", r.passed},
                   {"value", r.value},
                   {"tolerance", r.tolerance},
                   {"detail", r.detail}});
    all = all && r.passed;
  }
  json out{{"command", "verify"}, {"suite", suite}, {"passed", all}, {"results", arr},
           {"seed", g.seed}, {"N", g.n}};
  if (!all) throw Failed{out};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex hyperbolic geometry, bounded cohomology and rigidity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  try {
    g.seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  app.add_option("--seed", g.seed, "random seed (default $CHAINGEO_SEED or 0)");
  app.add_option("-N,--samples", g.n, "Monte-Carlo sample count");
  app.add_option("--threads", g.threads, "maximum worker threads")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", g.tolerance, "tolerance override");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", g.output, "write output to a file");

  int p = 1;
  std::string points;
  auto* cartan = app.add_subcommand("cartan", "Cartan invariants of boundary triples");
  cartan->add_option("--p", p, "complex dimension")->required();
  cartan->add_option("--points", points, "JSON file of points or triples")->required();

  int chain_samples = 0;
  auto* chain = app.add_subcommand("chain", "chain through two boundary points");
  chain->add_option("--p", p, "complex dimension")->required();
  chain->add_option("--points", points, "JSON file; first two points span the chain")->required();
  chain->add_option("--sample", chain_samples, "number of chain points to emit");

  std::string rep_path, preset;
  std::optional<int> target_q;
  bool conjugate = false, emit_rep = false;
  auto* toledo = app.add_subcommand("toledo", "Toledo invariant of a surface group representation");
  auto* rep_opt = toledo->add_option("--rep", rep_path, "representation JSON");
  auto* preset_opt = toledo->add_option("--preset", preset, "built-in representation (octagon)");
  rep_opt->excludes(preset_opt);
  toledo->add_option("--target-q", target_q, "target PU(q,1) (default: the file's target_q, else 1)");
  toledo->add_flag("--conjugate", conjugate, "post-compose with complex conjugation");
  toledo->add_flag("--emit-rep", emit_rep, "print the representation instead");

  std::string input;
  int batches = 20;
  auto* delta = app.add_subcommand("delta-form", "evaluate delta_infinity of a boundary cocycle");
  delta->add_option("--input", input, "JSON with model, x, vectors, cocycle")->required();
  delta->add_option("--batches", batches, "batch count for the standard error");

  bool anti = false;
  auto* recon = app.add_subcommand("reconstruct", "fit an isometric embedding to boundary samples");
  recon->add_option("--input", input, "sample map JSON")->required();
  recon->add_flag("--antiholomorphic", anti, "fit eta ~ W conj(xi)");

  std::string model_path, weights;
  int max_n = 3, trials = 20;
  auto* finite = app.add_subcommand("finite-model", "exact checks on a finite group model");
  auto* mopt = finite->add_option("--model", model_path, "group model JSON");
  auto* popt = finite->add_option("--preset", preset, "S3, S4 or D4");
  mopt->excludes(popt);
  finite->add_option("--weights", weights, "comma-separated rational weights on H/Q");
  finite->add_option("--max-n", max_n, "highest degree checked");
  finite->add_option("--trials", trials, "random functions per degree");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", suite, "suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    json out;
    std::string csv;
    if (*cartan) {
      out = cartan_cmd(g, p, points, csv);
    } else if (*chain) {
      out = chain_cmd(g, p, points, chain_samples, csv);
    } else if (*toledo) {
      if (rep_path.empty() && preset.empty()) throw cg::DomainError("toledo needs --rep or --preset");
      out = toledo_cmd(g, rep_path, preset, target_q, conjugate, emit_rep);
    } else if (*delta) {
      out = delta_form_cmd(g, input, batches);
    } else if (*recon) {
      out = reconstruct_cmd(g, input, anti);
    } else if (*finite) {
      if (model_path.empty() && preset.empty()) throw cg::DomainError("finite-model needs --model or --preset");
      out = finite_model_cmd(g, model_path, preset, weights, max_n, trials);
    } else if (*verify) {
      out = verify_cmd(g, suite);
    }
    emit(g, out, csv);
    return kExitOk;
  } catch (const Failed& f) {
    emit(g, f.report);
    return kExitFailed;
  } catch (const cg::VerificationError& e) {
    emit(g, {{"status", "failed"}, {"error", e.what()}, {"seed", g.seed}});
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
