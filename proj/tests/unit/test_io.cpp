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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chaingeo/cartan.hpp"
#include "chaingeo/io.hpp"
#include "chaingeo/random.hpp"

namespace chaingeo {
namespace {

using io::json;

// through text, as the CLI sees it
json reparse(const json& j) { return json::parse(j.dump()); }

TEST(Json, VectorsAndMatricesRoundTripBitExact) {
  Rng rng = make_rng(1, 0);
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(4);
  for (auto& c : v) c = cplx(g(rng), g(rng)) * 1e5;
  const Vec back = io::vec_from_json(reparse(io::to_json(v)));
  for (Eigen::Index i = 0; i < v.size(); ++i) EXPECT_EQ(back[i], v[i]);
  const Mat m = random_isometry(2, 3).matrix();
  EXPECT_EQ(io::mat_from_json(reparse(io::to_json(m))), m);
  // real entries are accepted as numbers
  EXPECT_EQ(io::vec_from_json(json::parse("[1, [0, 2]]")), (Vec(2) << cplx(1, 0), cplx(0, 2)).finished());
  EXPECT_THROW(io::vec_from_json(json::parse("[]")), DomainError);
  EXPECT_THROW(io::vec_from_json(json::parse("[[1, 2, 3]]")), DomainError);
  EXPECT_THROW(io::mat_from_json(json::parse("[[1, 2], [3]]")), DomainError);
}

TEST(Json, PointsAcceptThreeForms) {
  Rng rng = make_rng(2, 0);
  const ProjPoint b = random_boundary_point(2, rng);
  const ProjPoint x = random_interior_point(2, rng, 0.8);
  for (const ProjPoint& pt : {b, x}) {
    const json j = reparse(io::to_json(pt));
    EXPECT_EQ(j.at("kind"), pt.is_boundary() ? "boundary" : "interior");
    const ProjPoint q = io::point_from_json(j);
    EXPECT_EQ(q.is_boundary(), pt.is_boundary());
    EXPECT_LT((q.lift() - pt.lift()).norm(), 1e-15);
    EXPECT_LT((io::point_from_json(j.at("lift")).lift() - pt.lift()).norm(), 1e-15);
    EXPECT_LT((io::point_from_json(json{{"ball", io::to_json(pt.ball())}}).ball() - pt.ball()).norm(), 1e-14);
  }
  EXPECT_THROW(io::point_from_json(json::parse("{\"z\": [1]}")), DomainError);
  const auto pts = io::points_from_json(json::parse(R"({"points": [{"ball": [[1,0]]}, [[0,0],[1,0]]]})"));
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_TRUE(pts[0].is_boundary());
  EXPECT_TRUE(pts[1].is_interior());
  EXPECT_THROW(io::points_from_json(json::parse("{\"points\": 3}")), DomainError);
}

TEST(Json, ModelsRepsMapsAndEstimates) {
  const HermitianModel m(3, 0.25);
  const HermitianModel m2 = io::model_from_json(reparse(io::to_json(m)));
  EXPECT_EQ(m2.p(), 3);
  EXPECT_EQ(m2.metric_scale(), 0.25);
  EXPECT_EQ(io::model_from_json(json::parse("{\"p\": 2}")).metric_scale(), 1.0);

  const SurfaceGroupRep rep = octagon_representation(2);
  const SurfaceGroupRep rep2 = io::rep_from_json(reparse(io::to_json(rep)));
  EXPECT_EQ(rep2.genus(), 2);
  ASSERT_EQ(rep2.generators().size(), rep.generators().size());
  for (std::size_t i = 0; i < rep.generators().size(); ++i)
    EXPECT_EQ(rep2.generators()[i].matrix(), rep.generators()[i].matrix());

  EmbeddingMap w = standard_embedding(2, 3);
  w.w = random_isometry(3, 5, 0.5).matrix() * w.w;
  w.lambda = 1.5;
  const EmbeddingMap w2 = io::embedding_from_json(reparse(io::to_json(w)));
  EXPECT_EQ(w2.w, w.w);
  EXPECT_EQ(w2.lambda, 1.5);
  EXPECT_FALSE(w2.antiholomorphic);

  const BoundarySampleMap s = sample_boundary_map(BoundaryMap::embedding(w), 30, 6);
  const BoundarySampleMap s2 = io::sample_map_from_json(reparse(io::to_json(s)));
  EXPECT_EQ(s2.p, 2);
  EXPECT_EQ(s2.q, 3);
  ASSERT_EQ(s2.pairs.size(), 30u);
  for (std::size_t i = 0; i < 30; ++i) {
    EXPECT_LT((s2.pairs[i].first.lift() - s.pairs[i].first.lift()).norm(), 1e-15);
    EXPECT_LT((s2.pairs[i].second.lift() - s.pairs[i].second.lift()).norm(), 1e-15);
  }
  json bad = io::to_json(s);
  bad["q"] = 1;
  EXPECT_ANY_THROW(io::sample_map_from_json(bad));

  const json e = io::to_json(McEstimate{0.5, 0.01, 1000, 9});
  EXPECT_EQ(e.at("estimate"), 0.5);
  EXPECT_EQ(e.at("stderr"), 0.01);
  EXPECT_EQ(e.at("N"), 1000);
  EXPECT_EQ(e.at("seed"), 9);
}

TEST(Json, GroupModels) {
  const FiniteGroupModel a = io::group_model_from_json(json::parse("{\"preset\": \"S4\"}"));
  EXPECT_EQ(a.group().order(), 24);
  const FiniteGroupModel b = io::group_model_from_json(
      json::parse(R"({"permutations": [[1,0,2],[1,2,0]], "H": [[1,0,2]], "Q": [], "L": [[1,2,0]]})"));
  EXPECT_EQ(b.group().order(), 6);
  EXPECT_EQ(b.n_gh(), 3);
  EXPECT_EQ(b.n_hq(), 2);
  EXPECT_EQ(b.l()->size(), 3u);
  const FiniteGroupModel c = io::group_model_from_json(
      json::parse(R"({"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]], "H": [0,1], "Q": [0]})"));
  EXPECT_EQ(c.n_gh(), 2);
  EXPECT_EQ(c.n_hq(), 2);
  EXPECT_THROW(io::group_model_from_json(json::parse("{}")), DomainError);
  EXPECT_THROW(io::group_model_from_json(
                   json::parse(R"({"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]], "H": [0,2], "Q": [1]})")),
               DomainError);
}

TEST(Json, Rationals) {
  EXPECT_EQ(io::rational_from_json(json("-6/4")), Rational(-3, 2));
  EXPECT_EQ(io::rational_from_json(json(7)), Rational(7));
  EXPECT_EQ(io::to_json(Rational(-3, 2)), json("-3/2"));
  const Rational big("123456789012345678901234567890/7");
  EXPECT_EQ(io::rational_from_json(io::to_json(big)), big);
  EXPECT_THROW(io::rational_from_json(json("one half")), DomainError);
  EXPECT_THROW(io::rational_from_json(json(0.5)), DomainError);
}

TEST(Files, LoadAndCsv) {
  EXPECT_THROW(io::load_file("/nonexistent/x.json"), DomainError);
  const std::string path = testing::TempDir() + "chaingeo_bad.json";
  std::ofstream(path) << "{\"p\": ";
  EXPECT_THROW(io::load_file(path), DomainError);
  std::ofstream(path) << "{\"p\": 2}";
  EXPECT_EQ(io::load_file(path).at("p"), 2);
  std::remove(path.c_str());

  std::ostringstream os;
  const std::vector<std::vector<double>> rows{{0.1, -2.0}, {1e-300, 3.0}, {1.0 / 3.0, -0.0}};
  io::write_csv(os, {"a", "b"}, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "a,b");
  for (const auto& r : rows) {
    ASSERT_TRUE(std::getline(in, line));
    const auto comma = line.find(',');
    EXPECT_EQ(std::stod(line.substr(0, comma)), r[0]);
    EXPECT_EQ(std::stod(line.substr(comma + 1)), r[1]);
  }
  EXPECT_FALSE(std::getline(in, line));
}

}  // namespace
}  // namespace chaingeo
