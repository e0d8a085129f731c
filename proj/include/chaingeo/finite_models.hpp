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
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace chaingeo {

using Rational = boost::multiprecision::mpq_rational;
using RFunction = std::vector<Rational>;

inline constexpr int kMaxGroupOrder = 10000;

/// Finite group on elements 0..N-1 given by its multiplication table.
class FiniteGroup {
 public:
  /// table[a][b] = a*b. Validates closure, identity, inverses and
  /// associativity (exhaustive when N^3 <= 1e8, sampled otherwise).
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  /// Closure of permutations of {0..d-1} (image lists). Elements are sorted
  /// lexicographically, so the identity is element 0.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators);

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }

  /// Index of a permutation element (groups built from permutations only).
  int index_of(const std::vector<int>& perm) const;
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

  /// Sorted element set of the subgroup generated by `gens`.
  std::vector<int> generate(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& s) const;

 private:
  int n_ = 0;
  int e_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> perms_;
  std::map<std::vector<int>, int> perm_index_;
};

/// G with subgroups Q <= H <= G and an optional subgroup L, plus the coset
/// spaces G/Q, G/H, H/Q (left cosets).
class FiniteGroupModel {
 public:
  FiniteGroupModel(FiniteGroup g, std::vector<int> h, std::vector<int> q,
                   std::optional<std::vector<int>> l = std::nullopt, std::string name = "");

  const FiniteGroup& group() const { return g_; }
  const std::vector<int>& h() const { return h_; }
  const std::vector<int>& q() const { return q_; }
  const std::optional<std::vector<int>>& l() const { return l_; }
  const std::string& name() const { return name_; }

  int n_gq() const { return static_cast<int>(gq_rep_.size()); }
  int n_gh() const { return static_cast<int>(gh_rep_.size()); }
  int n_hq() const { return static_cast<int>(hq_rep_.size()); }

  int gq_of(int g) const { return gq_of_[g]; }
  int gh_of(int g) const { return gh_of_[g]; }
  /// H/Q coset of h (h must lie in H).
  int hq_of(int h) const;
  int gq_rep(int x) const { return gq_rep_[x]; }
  int gh_rep(int y) const { return gh_rep_[y]; }
  int hq_rep(int x) const { return hq_rep_[x]; }

  int act_gq(int g, int x) const { return gq_of_[g_.mul(g, gq_rep_[x])]; }
  int act_gh(int g, int y) const { return gh_of_[g_.mul(g, gh_rep_[y])]; }
  /// h . x on H/Q for h in H.
  int act_hq(int h, int x) const { return hq_of(g_.mul(h, hq_rep_[x])); }
  /// G/Q -> G/H.
  int project(int x) const { return gh_of_[gq_rep_[x]]; }
  /// g.(hQ) as a point of G/Q.
  int embed(int g, int x_hq) const { return gq_of_[g_.mul(g, hq_rep_[x_hq])]; }

 private:
  FiniteGroup g_;
  std::vector<int> h_, q_;
  std::optional<std::vector<int>> l_;
  std::string name_;
  std::vector<int> gq_of_, gh_of_, gq_rep_, gh_rep_, hq_rep_;
  std::vector<int> hq_index_;  ///< element -> H/Q coset, -1 off H
};

/// Named presets: "S3" (H = <(12)>, Q = e, L = A3), "S4" (H = Stab(4) ~ S3,
/// Q = <(12)>, L = A4), "D4" (H = <r^2, s>, Q = <s>, L = <r>).
FiniteGroupModel preset_model(const std::string& name);

/// Positive weights on H/Q summing to 1 (the measure nu).
class WeightedQuotient {
 public:
  WeightedQuotient(const FiniteGroupModel& model, std::vector<Rational> w);
  static WeightedQuotient uniform(const FiniteGroupModel& model);

  const std::vector<Rational>& w() const { return w_; }
  const Rational& w(int x) const { return w_[x]; }
  /// lambda_y(x) = w(y x) / w(x), y in H.
  Rational lambda(int y, int x) const;

 private:
  const FiniteGroupModel* model_;
  std::vector<Rational> w_;
};

/// A point of (G/Q)^n_f: base in G/H and x_1..x_n in G/Q over it.
struct FiberedPoint {
  int base = 0;
  std::vector<int> xs;
};

struct FiberedSpace {
  int n = 0;
  std::vector<FiberedPoint> points;
  RFunction nu;  ///< pushforward of uniform x w^n under q_n

  int index_of(const FiberedPoint& t) const;
  std::size_t size() const { return points.size(); }

  std::unordered_map<std::uint64_t, int> index_;
  std::uint64_t key(const FiberedPoint& t) const;
  int radix = 1;
};

FiberedSpace fibered_product(const FiniteGroupModel& model, const WeightedQuotient& w, int n);

/// beta: G -> Q with beta >= 0 and sum_{h in H} beta(g h) = 1 for every g.
struct Beta {
  RFunction values;
};

Beta bruhat_beta(const FiniteGroupModel& model);
/// Validates a custom beta; throws VerificationError on failure.
Beta bruhat_beta(const FiniteGroupModel& model, RFunction values);

/// psi(g, x) = sum_{h in H} beta(g h) lambda_{h^-1}(x), stored row-major in (g, x).
struct Psi {
  int n_hq = 0;
  RFunction values;
  const Rational& operator()(int g, int x) const {
    return values[static_cast<std::size_t>(g) * n_hq + x];
  }
};

/// Builds psi and checks (1) psi(g h^-1, h x) lambda_h(x) = psi(g, x),
/// (2) sum_x psi(g, x) w(x) = 1, (3) psi > 0 exhaustively; throws
/// VerificationError naming the failing property.
Psi psi_kernel(const FiniteGroupModel& model, const Beta& beta, const WeightedQuotient& w);

/// The complex of functions on (G/Q)^n_f, n = 0..max_n, together with the
/// picture G x (H/Q)^n used by the homotopy operators.
class FiberedComplex {
 public:
  FiberedComplex(const FiniteGroupModel& model, const WeightedQuotient& w, int max_n);

  const FiniteGroupModel& model() const { return *model_; }
  int max_n() const { return static_cast<int>(spaces_.size()) - 1; }
  const FiberedSpace& space(int n) const { return spaces_.at(n); }

  /// Index in space n-1 of t with its i-th coordinate (1-based) removed.
  int face(int n, int i, int t) const;
  /// g . t in space n.
  int act(int n, int g, int t) const;

  /// d: functions on space n -> functions on space n+1.
  RFunction d(int n, const RFunction& f) const;

  /// Marginal of nu_{n+1} under the i-th face map.
  RFunction push_face(int n_plus_1, int i) const;

  /// Functions on G x (H/Q)^n, index g * |H/Q|^n + mixed radix of x.
  std::size_t picture_size(int n) const;
  RFunction pullback(int n, const RFunction& f) const;
  /// Inverse of pullback on H-invariant functions; throws VerificationError otherwise.
  RFunction descend(int n, const RFunction& F) const;
  RFunction picture_d(int n, const RFunction& F) const;
  /// h_n F(g, x_1..x_n) = sum_x psi(g, x) F(g, x, x_1..x_n) w(x).
  RFunction picture_h(int n, const Psi& psi, const RFunction& F) const;
  /// h_n on functions of space n+1, landing in space n.
  RFunction h(int n, const Psi& psi, const RFunction& f) const;

  bool is_invariant(int n, const std::vector<int>& subgroup, const RFunction& f) const;
  /// (tau f)(t) = average over L\G of f(g t); throws DomainError unless f is L-invariant.
  RFunction transfer(int n, const RFunction& f) const;

 private:
  const FiniteGroupModel* model_;
  const WeightedQuotient* w_;
  std::vector<FiberedSpace> spaces_;
  std::vector<int> pow_hq_;
};

Rational sup_norm(const RFunction& f);

/// Random rational function with entries num/den, |num| <= 20, 1 <= den <= 9.
RFunction random_rational_function(std::size_t size, std::uint64_t seed);

}  // namespace chaingeo
