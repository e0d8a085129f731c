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


#include "chaingeo/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace chaingeo::io {

json to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v[i].real(), v[i].imag()});
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("expected a non-empty array of [re, im] pairs");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (e.is_number()) {
      v[static_cast<Eigen::Index>(i)] = cplx(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      v[static_cast<Eigen::Index>(i)] = cplx(e[0].get<double>(), e[1].get<double>());
    } else {
      throw DomainError("expected [re, im] pair");
    }
  }
  return v;
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(to_json(Vec(m.row(r).transpose())));
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("expected a matrix (array of rows)");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const Vec first = vec_from_json(j[0]);
  Mat m(rows, first.size());
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Vec row = vec_from_json(j[static_cast<std::size_t>(r)]);
    if (row.size() != first.size()) throw DomainError("ragged matrix");
    m.row(r) = row.transpose();
  }
  return m;
}

json to_json(const ProjPoint& x) {
  return {{"lift", to_json(x.lift())}, {"kind", x.is_boundary() ? "boundary" : "interior"}};
}

ProjPoint point_from_json(const json& j) {
  if (j.is_object()) {
    if (j.contains("ball")) return ProjPoint::from_ball(vec_from_json(j.at("ball")));
    if (j.contains("lift")) return ProjPoint::from_lift(vec_from_json(j.at("lift")));
    throw DomainError("point needs a 'lift' or 'ball' field");
  }
  return ProjPoint::from_lift(vec_from_json(j));
}

std::vector<ProjPoint> points_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("points") ? j.at("points") : j;
  if (!arr.is_array()) throw DomainError("expected an array of points");
  std::vector<ProjPoint> out;
  for (const auto& e : arr) out.push_back(point_from_json(e));
  return out;
}

HermitianModel model_from_json(const json& j) {
  return HermitianModel(j.at("p").get<int>(), j.value("metric_scale", 1.0));
}

json to_json(const HermitianModel& m) { return {{"p", m.p()}, {"metric_scale", m.metric_scale()}}; }

json to_json(const McEstimate& e) {
  return {{"estimate", e.estimate}, {"stderr", e.stderr_}, {"N", e.n}, {"seed", e.seed}};
}

SurfaceGroupRep rep_from_json(const json& j) {
  std::vector<Isometry> gens;
  for (const auto& m : j.at("generators")) gens.emplace_back(mat_from_json(m), 1e-8);
  return SurfaceGroupRep(j.at("genus").get<int>(), std::move(gens));
}

json to_json(const SurfaceGroupRep& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators()) gens.push_back(to_json(g.matrix()));
  return {{"genus", rep.genus()}, {"generators", gens}};
}

BoundarySampleMap sample_map_from_json(const json& j) {
  BoundarySampleMap m;
  m.p = j.at("p").get<int>();
  m.q = j.at("q").get<int>();
  for (const auto& e : j.at("pairs"))
    m.pairs.emplace_back(point_from_json(e.at("xi")), point_from_json(e.at("eta")));
  m.validate();
  return m;
}

json to_json(const BoundarySampleMap& m) {
  json pairs = json::array();
  for (const auto& [xi, eta] : m.pairs) pairs.push_back({{"xi", to_json(xi)}, {"eta", to_json(eta)}});
  return {{"p", m.p}, {"q", m.q}, {"pairs", pairs}};
}

json to_json(const EmbeddingMap& w) {
  return {{"w", to_json(w.w)}, {"lambda", w.lambda}, {"antiholomorphic", w.antiholomorphic}};
}

EmbeddingMap embedding_from_json(const json& j) {
  return {mat_from_json(j.at("w")), j.value("lambda", 1.0), j.value("antiholomorphic", false)};
}

namespace {

std::vector<int> index_list(const json& j) {
  std::vector<int> out;
  for (const auto& e : j) out.push_back(e.get<int>());
  return out;
}

std::vector<int> generated(const FiniteGroup& g, const json& perms) {
  std::vector<int> idx;
  for (const auto& p : perms) idx.push_back(g.index_of(p.get<std::vector<int>>()));
  return g.generate(idx);
}

}  // namespace

FiniteGroupModel group_model_from_json(const json& j) {
  if (j.contains("preset")) return preset_model(j.at("preset").get<std::string>());
  if (j.contains("table")) {
    FiniteGroup g = FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>());
    std::optional<std::vector<int>> l;
    if (j.contains("L")) l = index_list(j.at("L"));
    return FiniteGroupModel(std::move(g), index_list(j.at("H")), index_list(j.at("Q")), l,
                            j.value("name", std::string("table")));
  }
  if (j.contains("permutations")) {
    FiniteGroup g =
        FiniteGroup::from_permutations(j.at("permutations").get<std::vector<std::vector<int>>>());
    auto h = generated(g, j.at("H"));
    auto q = generated(g, j.at("Q"));
    std::optional<std::vector<int>> l;
    if (j.contains("L")) l = generated(g, j.at("L"));
    return FiniteGroupModel(std::move(g), h, q, l, j.value("name", std::string("permutations")));
  }
  throw DomainError("group model needs 'preset', 'table' or 'permutations'");
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw DomainError("malformed rational '" + j.get<std::string>() + "'");
    }
  }
  throw DomainError("rationals must be integers or strings \"num/den\"");
}

json to_json(const Rational& r) { return r.str(); }

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  std::ostringstream cell;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      cell.str("");
      cell << std::setprecision(17) << r[i];
      os << (i ? "," : "") << cell.str();
    }
    os << '\n';
  }
}

}  // namespace chaingeo::io
