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


#include "chaingeo/finite_models.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "chaingeo/common.hpp"
#include "chaingeo/random.hpp"

namespace chaingeo {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const auto n = static_cast<int>(table.size());
  if (n < 1 || n > kMaxGroupOrder) throw DomainError("FiniteGroup: order must be in [1, 10000]");
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) throw DomainError("FiniteGroup: table is not square");
    for (int b = 0; b < n; ++b) {
      const int c = table[a][b];
      if (c < 0 || c >= n) throw DomainError("FiniteGroup: table entry out of range");
      g.table_[static_cast<std::size_t>(a) * n + b] = c;
    }
  }
  g.e_ = -1;
  for (int e = 0; e < n && g.e_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) g.e_ = e;
  }
  if (g.e_ < 0) throw DomainError("FiniteGroup: no identity element");
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.e_ && g.mul(b, a) == g.e_) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] < 0) throw DomainError("FiniteGroup: element without inverse");
  }
  auto assoc = [&](int a, int b, int c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (static_cast<double>(n) * n * n <= 1e8) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw DomainError("FiniteGroup: table is not associative");
  } else {
    Rng rng = make_rng(0xa55, static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 1000000; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw DomainError("FiniteGroup: table is not associative");
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) throw DomainError("FiniteGroup: need at least one generator");
  const auto d = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != d) throw DomainError("FiniteGroup: generators act on different sets");
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < d; ++i)
      if (s[i] != static_cast<int>(i)) throw DomainError("FiniteGroup: generator is not a permutation");
  }
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  std::vector<int> id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> todo{id};
  while (!todo.empty()) {
    const std::vector<int> x = todo.front();
    todo.pop_front();
    for (const auto& s : generators) {
      std::vector<int> y = compose(s, x);
      if (seen.insert(y).second) {
        if (static_cast<int>(seen.size()) > kMaxGroupOrder)
          throw DomainError("FiniteGroup: group order exceeds 10000");
        todo.push_back(std::move(y));
      }
    }
  }
  FiniteGroup g;
  g.perms_.assign(seen.begin(), seen.end());
  g.n_ = static_cast<int>(g.perms_.size());
  for (int i = 0; i < g.n_; ++i) g.perm_index_[g.perms_[i]] = i;
  g.e_ = g.perm_index_.at(id);
  g.table_.resize(static_cast<std::size_t>(g.n_) * g.n_);
  g.inv_.resize(g.n_);
  for (int a = 0; a < g.n_; ++a) {
    for (int b = 0; b < g.n_; ++b)
      g.table_[static_cast<std::size_t>(a) * g.n_ + b] = g.perm_index_.at(compose(g.perms_[a], g.perms_[b]));
    std::vector<int> inv(d);
    for (std::size_t i = 0; i < d; ++i) inv[g.perms_[a][i]] = static_cast<int>(i);
    g.inv_[a] = g.perm_index_.at(inv);
  }
  return g;
}

int FiniteGroup::index_of(const std::vector<int>& perm) const {
  const auto it = perm_index_.find(perm);
  if (it == perm_index_.end()) throw DomainError("FiniteGroup: permutation not in the group");
  return it->second;
}

std::vector<int> FiniteGroup::generate(const std::vector<int>& gens) const {
  std::set<int> seen{e_};
  std::deque<int> todo{e_};
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop_front();
    for (int s : gens) {
      if (s < 0 || s >= n_) throw DomainError("FiniteGroup: generator index out of range");
      const int y = mul(s, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& s) const {
  if (s.empty()) return false;
  std::vector<char> in(n_, 0);
  for (int x : s) {
    if (x < 0 || x >= n_) return false;
    in[x] = 1;
  }
  if (!in[e_]) return false;
  for (int a : s) {
    if (!in[inv(a)]) return false;
    for (int b : s)
      if (!in[mul(a, b)]) return false;
  }
  return true;
}

namespace {

// Left cosets g S: coset index per element and a representative per coset.
void left_cosets(const FiniteGroup& g, const std::vector<int>& s, std::vector<int>& of,
                 std::vector<int>& rep) {
  of.assign(g.order(), -1);
  rep.clear();
  for (int a = 0; a < g.order(); ++a) {
    if (of[a] >= 0) continue;
    const int idx = static_cast<int>(rep.size());
    rep.push_back(a);
    for (int x : s) of[g.mul(a, x)] = idx;
  }
}

}  // namespace

FiniteGroupModel::FiniteGroupModel(FiniteGroup g, std::vector<int> h, std::vector<int> q,
                                   std::optional<std::vector<int>> l, std::string name)
    : g_(std::move(g)), h_(std::move(h)), q_(std::move(q)), l_(std::move(l)), name_(std::move(name)) {
  std::sort(h_.begin(), h_.end());
  std::sort(q_.begin(), q_.end());
  if (!g_.is_subgroup(h_)) throw DomainError("FiniteGroupModel: H is not a subgroup");
  if (!g_.is_subgroup(q_)) throw DomainError("FiniteGroupModel: Q is not a subgroup");
  if (!std::includes(h_.begin(), h_.end(), q_.begin(), q_.end()))
    throw DomainError("FiniteGroupModel: Q must be contained in H");
  if (l_) {
    std::sort(l_->begin(), l_->end());
    if (!g_.is_subgroup(*l_)) throw DomainError("FiniteGroupModel: L is not a subgroup");
  }
  left_cosets(g_, q_, gq_of_, gq_rep_);
  left_cosets(g_, h_, gh_of_, gh_rep_);
  hq_index_.assign(g_.order(), -1);
  for (int a : h_) {
    if (hq_index_[a] >= 0) continue;
    const int idx = static_cast<int>(hq_rep_.size());
    hq_rep_.push_back(a);
    for (int x : q_) hq_index_[g_.mul(a, x)] = idx;
  }
}

int FiniteGroupModel::hq_of(int h) const {
  const int x = hq_index_.at(h);
  if (x < 0) throw DomainError("FiniteGroupModel: element is not in H");
  return x;
}

FiniteGroupModel preset_model(const std::string& name) {
  auto sub = [](const FiniteGroup& g, const std::vector<std::vector<int>>& perms) {
    std::vector<int> idx;
    for (const auto& p : perms) idx.push_back(g.index_of(p));
    return g.generate(idx);
  };
  if (name == "S3") {
    FiniteGroup g = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
    auto h = sub(g, {{1, 0, 2}});
    auto q = sub(g, {});
    auto l = sub(g, {{1, 2, 0}});
    return FiniteGroupModel(std::move(g), h, q, l, name);
  }
  if (name == "S4") {
    FiniteGroup g = FiniteGroup::from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}});
    auto h = sub(g, {{1, 0, 2, 3}, {1, 2, 0, 3}});
    auto q = sub(g, {{1, 0, 2, 3}});
    auto l = sub(g, {{1, 2, 0, 3}, {0, 2, 3, 1}});
    return FiniteGroupModel(std::move(g), h, q, l, name);
  }
  if (name == "D4") {
    FiniteGroup g = FiniteGroup::from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}});
    auto h = sub(g, {{2, 3, 0, 1}, {0, 3, 2, 1}});
    auto q = sub(g, {{0, 3, 2, 1}});
    auto l = sub(g, {{1, 2, 3, 0}});
    return FiniteGroupModel(std::move(g), h, q, l, name);
  }
  throw DomainError("preset_model: unknown preset '" + name + "'");
}

WeightedQuotient::WeightedQuotient(const FiniteGroupModel& model, std::vector<Rational> w)
    : model_(&model), w_(std::move(w)) {
  if (static_cast<int>(w_.size()) != model.n_hq())
    throw DimensionError("WeightedQuotient: one weight per coset of H/Q required");
  Rational total = 0;
  for (const auto& x : w_) {
    if (!(x > 0)) throw DomainError("WeightedQuotient: weights must be positive");
    total += x;
  }
  if (total != 1) throw DomainError("WeightedQuotient: weights must sum to 1");
}

WeightedQuotient WeightedQuotient::uniform(const FiniteGroupModel& model) {
  return WeightedQuotient(model, std::vector<Rational>(model.n_hq(), Rational(1, model.n_hq())));
}

Rational WeightedQuotient::lambda(int y, int x) const {
  return w_[model_->act_hq(y, x)] / w_[x];
}

std::uint64_t FiberedSpace::key(const FiberedPoint& t) const {
  std::uint64_t k = static_cast<std::uint64_t>(t.base);
  for (int x : t.xs) k = k * static_cast<std::uint64_t>(radix) + static_cast<std::uint64_t>(x);
  return k;
}

int FiberedSpace::index_of(const FiberedPoint& t) const {
  const auto it = index_.find(key(t));
  if (it == index_.end()) throw DomainError("FiberedSpace: point not in the fibered product");
  return it->second;
}

namespace {

// Mixed-radix digits x_1..x_n of k with x_1 least significant.
void digits(std::size_t k, int radix, int n, std::vector<int>& out) {
  out.resize(n);
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<int>(k % radix);
    k /= radix;
  }
}

}  // namespace

FiberedSpace fibered_product(const FiniteGroupModel& model, const WeightedQuotient& w, int n) {
  if (n < 0) throw DomainError("fibered_product: n must be >= 0");
  FiberedSpace s;
  s.n = n;
  s.radix = model.n_gq();
  const int r = model.n_hq();
  std::size_t combos = 1;
  for (int i = 0; i < n; ++i) combos *= static_cast<std::size_t>(r);
  const Rational unit(1, model.group().order());
  std::vector<int> xh;
  for (int g = 0; g < model.group().order(); ++g) {
    for (std::size_t k = 0; k < combos; ++k) {
      digits(k, r, n, xh);
      FiberedPoint t{model.gh_of(g), {}};
      Rational mass = unit;
      for (int i = 0; i < n; ++i) {
        t.xs.push_back(model.embed(g, xh[i]));
        mass *= w.w(xh[i]);
      }
      const std::uint64_t key = s.key(t);
      auto it = s.index_.find(key);
      if (it == s.index_.end()) {
        it = s.index_.emplace(key, static_cast<int>(s.points.size())).first;
        s.points.push_back(std::move(t));
        s.nu.push_back(0);
      }
      s.nu[it->second] += mass;
    }
  }
  return s;
}

Beta bruhat_beta(const FiniteGroupModel& model) {
  return Beta{RFunction(model.group().order(), Rational(1, static_cast<int>(model.h().size())))};
}

Beta bruhat_beta(const FiniteGroupModel& model, RFunction values) {
  const FiniteGroup& g = model.group();
  if (static_cast<int>(values.size()) != g.order()) throw DimensionError("bruhat_beta: size mismatch");
  for (const auto& v : values)
    if (v < 0) throw VerificationError("bruhat_beta: beta must be non-negative");
  for (int a = 0; a < g.order(); ++a) {
    Rational s = 0;
    for (int h : model.h()) s += values[g.mul(a, h)];
    if (s != 1) throw VerificationError("bruhat_beta: sum over H of beta(g h) must be 1");
  }
  return Beta{std::move(values)};
}

Psi psi_kernel(const FiniteGroupModel& model, const Beta& beta, const WeightedQuotient& w) {
  const FiniteGroup& g = model.group();
  const int r = model.n_hq();
  Psi psi{r, RFunction(static_cast<std::size_t>(g.order()) * r, Rational(0))};
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < r; ++x) {
      Rational s = 0;
      for (int h : model.h()) s += beta.values[g.mul(a, h)] * w.lambda(g.inv(h), x);
      psi.values[static_cast<std::size_t>(a) * r + x] = s;
    }
  for (int a = 0; a < g.order(); ++a) {
    Rational total = 0;
    for (int x = 0; x < r; ++x) {
      if (!(psi(a, x) > 0)) throw VerificationError("psi_kernel: property (3) psi > 0 fails");
      total += psi(a, x) * w.w(x);
      for (int h : model.h()) {
        if (psi(g.mul(a, g.inv(h)), model.act_hq(h, x)) * w.lambda(h, x) != psi(a, x))
          throw VerificationError("psi_kernel: property (1) equivariance fails");
      }
    }
    if (total != 1) throw VerificationError("psi_kernel: property (2) normalisation fails");
  }
  return psi;
}

FiberedComplex::FiberedComplex(const FiniteGroupModel& model, const WeightedQuotient& w, int max_n)
    : model_(&model), w_(&w) {
  if (max_n < 0) throw DomainError("FiberedComplex: max_n must be >= 0");
  for (int n = 0; n <= max_n; ++n) spaces_.push_back(fibered_product(model, w, n));
  pow_hq_.push_back(1);
  for (int n = 1; n <= max_n; ++n) pow_hq_.push_back(pow_hq_.back() * model.n_hq());
}

int FiberedComplex::face(int n, int i, int t) const {
  if (n < 1 || i < 1 || i > n) throw DomainError("FiberedComplex: invalid face");
  FiberedPoint p = space(n).points.at(t);
  p.xs.erase(p.xs.begin() + (i - 1));
  return space(n - 1).index_of(p);
}

int FiberedComplex::act(int n, int g, int t) const {
  const FiberedPoint& p = space(n).points.at(t);
  FiberedPoint out{model_->act_gh(g, p.base), {}};
  for (int x : p.xs) out.xs.push_back(model_->act_gq(g, x));
  return space(n).index_of(out);
}

RFunction FiberedComplex::d(int n, const RFunction& f) const {
  if (f.size() != space(n).size()) throw DimensionError("d: function does not match the space");
  const FiberedSpace& up = space(n + 1);
  RFunction out(up.size(), Rational(0));
  for (std::size_t t = 0; t < up.size(); ++t) {
    for (int i = 1; i <= n + 1; ++i) {
      const Rational& v = f[face(n + 1, i, static_cast<int>(t))];
      if (i % 2 == 1) {
        out[t] += v;
      } else {
        out[t] -= v;
      }
    }
  }
  return out;
}

RFunction FiberedComplex::push_face(int n_plus_1, int i) const {
  const FiberedSpace& up = space(n_plus_1);
  RFunction out(space(n_plus_1 - 1).size(), Rational(0));
  for (std::size_t t = 0; t < up.size(); ++t) out[face(n_plus_1, i, static_cast<int>(t))] += up.nu[t];
  return out;
}

std::size_t FiberedComplex::picture_size(int n) const {
  return static_cast<std::size_t>(model_->group().order()) * pow_hq_.at(n);
}

RFunction FiberedComplex::pullback(int n, const RFunction& f) const {
  if (f.size() != space(n).size()) throw DimensionError("pullback: function does not match the space");
  const int r = model_->n_hq();
  RFunction out(picture_size(n));
  std::vector<int> xh;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const int g = static_cast<int>(k / pow_hq_[n]);
    digits(k % pow_hq_[n], r, n, xh);
    FiberedPoint t{model_->gh_of(g), {}};
    for (int x : xh) t.xs.push_back(model_->embed(g, x));
    out[k] = f[space(n).index_of(t)];
  }
  return out;
}

RFunction FiberedComplex::descend(int n, const RFunction& F) const {
  if (F.size() != picture_size(n)) throw DimensionError("descend: size mismatch");
  const int r = model_->n_hq();
  RFunction out(space(n).size());
  std::vector<char> set(out.size(), 0);
  std::vector<int> xh;
  for (std::size_t k = 0; k < F.size(); ++k) {
    const int g = static_cast<int>(k / pow_hq_[n]);
    digits(k % pow_hq_[n], r, n, xh);
    FiberedPoint t{model_->gh_of(g), {}};
    for (int x : xh) t.xs.push_back(model_->embed(g, x));
    const int idx = space(n).index_of(t);
    if (!set[idx]) {
      out[idx] = F[k];
      set[idx] = 1;
    } else if (out[idx] != F[k]) {
      throw VerificationError("descend: function is not H-invariant");
    }
  }
  return out;
}

RFunction FiberedComplex::picture_d(int n, const RFunction& F) const {
  if (F.size() != picture_size(n)) throw DimensionError("picture_d: size mismatch");
  const int r = model_->n_hq();
  RFunction out(picture_size(n + 1), Rational(0));
  std::vector<int> xh;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t g = k / pow_hq_[n + 1];
    digits(k % pow_hq_[n + 1], r, n + 1, xh);
    for (int i = 0; i <= n; ++i) {
      std::size_t idx = 0;
      for (int j = n; j >= 0; --j) {
        if (j == i) continue;
        idx = idx * r + xh[j];
      }
      const Rational& v = F[g * pow_hq_[n] + idx];
      if (i % 2 == 0) {
        out[k] += v;
      } else {
        out[k] -= v;
      }
    }
  }
  return out;
}

RFunction FiberedComplex::picture_h(int n, const Psi& psi, const RFunction& F) const {
  if (F.size() != picture_size(n + 1)) throw DimensionError("picture_h: size mismatch");
  const int r = model_->n_hq();
  RFunction out(picture_size(n), Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto g = static_cast<int>(k / pow_hq_[n]);
    const std::size_t rest = k % pow_hq_[n];
    Rational s = 0;
    for (int x = 0; x < r; ++x)
      s += psi(g, x) * F[static_cast<std::size_t>(g) * pow_hq_[n + 1] + x + r * rest] * w_->w(x);
    out[k] = s;
  }
  return out;
}

RFunction FiberedComplex::h(int n, const Psi& psi, const RFunction& f) const {
  return descend(n, picture_h(n, psi, pullback(n + 1, f)));
}

bool FiberedComplex::is_invariant(int n, const std::vector<int>& subgroup, const RFunction& f) const {
  for (int g : subgroup)
    for (std::size_t t = 0; t < f.size(); ++t)
      if (f[act(n, g, static_cast<int>(t))] != f[t]) return false;
  return true;
}

RFunction FiberedComplex::transfer(int n, const RFunction& f) const {
  const FiniteGroup& g = model_->group();
  std::vector<int> l;
  if (model_->l()) {
    l = *model_->l();
  } else {
    for (int a = 0; a < g.order(); ++a) l.push_back(a);
  }
  if (!is_invariant(n, l, f)) throw DomainError("transfer: function is not L-invariant");
  // Right cosets L g.
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset[a] >= 0) continue;
    for (int x : l) coset[g.mul(x, a)] = static_cast<int>(reps.size());
    reps.push_back(a);
  }
  const Rational scale(1, static_cast<int>(reps.size()));
  RFunction out(f.size(), Rational(0));
  for (std::size_t t = 0; t < f.size(); ++t) {
    Rational s = 0;
    for (int a : reps) s += f[act(n, a, static_cast<int>(t))];
    out[t] = s * scale;
  }
  return out;
}

Rational sup_norm(const RFunction& f) {
  Rational m = 0;
  for (const auto& x : f) m = std::max(m, Rational(abs(x)));
  return m;
}

RFunction random_rational_function(std::size_t size, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0xf1);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  RFunction f(size);
  for (auto& x : f) x = Rational(num(rng), den(rng));
  return f;
}

}  // namespace chaingeo
