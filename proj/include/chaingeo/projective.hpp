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

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "chaingeo/common.hpp"

namespace chaingeo {

using Rational = boost::multiprecision::mpq_rational;

/// Exact complex number with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw DomainError("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  cplx to_complex() const { return {re.convert_to<double>(), im.convert_to<double>()}; }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

/// Arithmetic shared by the floating and exact backends.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<cplx> {
  using Real = double;
  static Real cross(const cplx& a, const cplx& b) { return a.real() * b.imag() - a.imag() * b.real(); }
  static bool is_zero(const Real& x, const Real& scale) { return std::abs(x) <= 1e-12 * scale; }
  static Real scale(const cplx& a, const cplx& b) { return std::abs(a) * std::abs(b) + 1e-300; }
  static bool same(const cplx& a, const cplx& b) {
    return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b));
  }
};

template <>
struct ScalarTraits<GaussianRational> {
  using Real = Rational;
  static Real cross(const GaussianRational& a, const GaussianRational& b) {
    return a.re * b.im - a.im * b.re;
  }
  static bool is_zero(const Real& x, const Real&) { return x == 0; }
  static Real scale(const GaussianRational&, const GaussianRational&) { return 1; }
  static bool same(const GaussianRational& a, const GaussianRational& b) { return a == b; }
};

/// Non-generic configuration detected at construction step m_step.
class ConstructionError : public DomainError {
 public:
  ConstructionError(int step, const std::string& what)
      : DomainError("m" + std::to_string(step) + ": " + what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// Real affine line {point + t direction} in C.
template <class T>
struct Line {
  T point;
  T direction;

  static Line through(const T& a, const T& b, int step = 0) {
    if (ScalarTraits<T>::same(a, b)) throw ConstructionError(step, "line through coincident points");
    return {a, b - a};
  }

  bool contains(const T& z) const {
    using Tr = ScalarTraits<T>;
    const T d = z - point;
    return Tr::is_zero(Tr::cross(direction, d), Tr::scale(direction, d));
  }
};

template <class T>
T intersect(const Line<T>& l1, const Line<T>& l2, int step = 0) {
  using Tr = ScalarTraits<T>;
  const auto den = Tr::cross(l1.direction, l2.direction);
  if (Tr::is_zero(den, Tr::scale(l1.direction, l2.direction)))
    throw ConstructionError(step, "parallel lines");
  const auto s = Tr::cross(l2.point - l1.point, l2.direction) / den;
  return l1.point + T(s) * l1.direction;
}

template <class T>
T cross_ratio(const T& a, const T& b, const T& c, const T& d) {
  using Tr = ScalarTraits<T>;
  if (Tr::same(a, b) || Tr::same(a, c) || Tr::same(a, d) || Tr::same(b, c) || Tr::same(b, d) ||
      Tr::same(c, d))
    throw DomainError("cross_ratio: points must be pairwise distinct");
  return ((c - a) / (c - b)) * ((d - b) / (d - a));
}

template <class T>
struct Harmonic {
  T value{};
  bool at_infinity = false;
};

/// D with [A, B, C, D] = -1; at_infinity when C is the midpoint of AB.
template <class T>
Harmonic<T> harmonic_conjugate(const T& a, const T& b, const T& c) {
  using Tr = ScalarTraits<T>;
  if (Tr::same(a, b) || Tr::same(a, c) || Tr::same(b, c))
    throw DomainError("harmonic_conjugate: points must be distinct");
  if (!Line<T>::through(a, b).contains(c))
    throw DomainError("harmonic_conjugate: points must be collinear");
  const T k = (c - a) / (c - b);
  const T kp1 = k + T(1);
  if (Tr::same(kp1, T(0))) return {T(0), true};
  return {(a + k * b) / kp1, false};
}

template <class T>
struct QuadConfig {
  Line<T> d;
  Line<T> d_prime;
  T a, b, c, m;

  void validate() const {
    using Tr = ScalarTraits<T>;
    if (Tr::same(a, b) || Tr::same(a, c) || Tr::same(b, c))
      throw DomainError("QuadConfig: A, B, C must be distinct");
    if (!d.contains(a) || !d.contains(b) || !d.contains(c))
      throw DomainError("QuadConfig: A, B, C must lie on d");
    if (!d_prime.contains(a)) throw DomainError("QuadConfig: A must lie on d'");
    if (Tr::is_zero(Tr::cross(d.direction, d_prime.direction), Tr::scale(d.direction, d_prime.direction)))
      throw DomainError("QuadConfig: d' must differ from d");
    if (d.contains(m) || d_prime.contains(m)) throw DomainError("QuadConfig: M must lie off d and d'");
  }
};

/// Intermediate points of the construction and the result D.
template <class T>
struct QuadResult {
  T p, q, n, d;
};

template <class T>
QuadResult<T> complete_quadrilateral(const QuadConfig<T>& cfg) {
  cfg.validate();
  const Line<T> cm = Line<T>::through(cfg.c, cfg.m, 1);
  const T p = intersect(cm, cfg.d_prime, 2);
  const Line<T> pb = Line<T>::through(p, cfg.b, 3);
  const T q = intersect(pb, Line<T>::through(cfg.a, cfg.m, 4), 4);
  const T n = intersect(Line<T>::through(cfg.b, cfg.m, 5), cfg.d_prime, 5);
  const Line<T> nq = Line<T>::through(n, q, 6);
  const T d = intersect(nq, cfg.d, 7);
  return {p, q, n, d};
}

/// center + r^2 / conj(z - center).
cplx inversion(cplx center, double radius, cplx z);

struct CircleFit {
  cplx center;
  double radius = 0.0;
  double residual = 0.0;  ///< max | |z - center| - radius |
};

/// Algebraic (Kasa) circle fit; a line fit yields radius = inf.
CircleFit fit_circle(const std::vector<cplx>& z);

enum class AffineMode { Holomorphic, Antiholomorphic, RealAffine };

std::string to_string(AffineMode m);

struct AffineFit {
  cplx lambda;  ///< g(z) ~ lambda z + c  (or lambda conj(z) + c when anti)
  cplx c;
  double residual = 0.0;       ///< rms residual of the reported mode
  double residual_holo = 0.0;  ///< rms of the C-affine fit
  double residual_anti = 0.0;  ///< rms of the conj-affine fit
  double residual_real = 0.0;  ///< rms of the R-affine fit alpha z + beta conj(z) + c
  cplx alpha, beta, c_real;
  AffineMode mode = AffineMode::Holomorphic;
  int orientation = 1;  ///< cyclic-order orientation on circles: sign(|alpha|^2 - |beta|^2)
  double condition = 0.0;
};

/// Least-squares affine fits of g from samples (z, g(z)); the mode is the
/// complex-affine or anti-affine fit with the smaller residual unless only
/// the real-affine fit explains the data to `tol`.
AffineFit fit_affine(const std::vector<std::pair<cplx, cplx>>& samples, double tol = 1e-9);

struct OrderCheck {
  bool preserving = true;
  std::optional<std::array<std::size_t, 3>> witness;
  std::size_t triples_checked = 0;
};

/// Samples (xi, f(xi)) on the unit circle. Triples with a repeated source or
/// image are skipped; otherwise cyclic orientations must agree.
OrderCheck weakly_order_preserving_check(const std::vector<std::pair<cplx, cplx>>& samples,
                                         double tol = 1e-12);

}  // namespace chaingeo
