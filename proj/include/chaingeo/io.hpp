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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "chaingeo/bounded_forms.hpp"
#include "chaingeo/busemann.hpp"
#include "chaingeo/finite_models.hpp"
#include "chaingeo/hermitian.hpp"
#include "chaingeo/isometry.hpp"
#include "chaingeo/reconstruction.hpp"
#include "chaingeo/toledo.hpp"

namespace chaingeo::io {

using json = nlohmann::json;

/// Complex vectors are arrays of [re, im] pairs.
json to_json(const Vec& v);
Vec vec_from_json(const json& j);

/// Matrices are arrays of rows.
json to_json(const Mat& m);
Mat mat_from_json(const json& j);

/// {"lift": [...], "kind": "interior" | "boundary"}. Reading also accepts
/// {"ball": [...]} and a bare lift array.
json to_json(const ProjPoint& x);
ProjPoint point_from_json(const json& j);
std::vector<ProjPoint> points_from_json(const json& j);

/// {"p": int, "metric_scale": real}
HermitianModel model_from_json(const json& j);
json to_json(const HermitianModel& m);

/// {estimate, stderr, N, seed}
json to_json(const McEstimate& e);

/// {"genus": g, "generators": [matrices]}
SurfaceGroupRep rep_from_json(const json& j);
json to_json(const SurfaceGroupRep& rep);

/// {"p", "q", "pairs": [{"xi": point, "eta": point}, ...]}
BoundarySampleMap sample_map_from_json(const json& j);
json to_json(const BoundarySampleMap& m);

json to_json(const EmbeddingMap& w);
EmbeddingMap embedding_from_json(const json& j);

/// {"preset": "S3"} or {"table": [[...]]} / {"permutations": [[...]]} with
/// "H", "Q", optional "L" as element-index lists (table) or generator
/// permutation lists (permutations).
FiniteGroupModel group_model_from_json(const json& j);

/// Rationals are written as strings "num/den".
Rational rational_from_json(const json& j);
json to_json(const Rational& r);

json load_file(const std::string& path);

/// Comma-separated rows with a header line.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace chaingeo::io
