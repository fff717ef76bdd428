// Copyright 2026 The mapenum Authors.
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

/****
     Truncated univariate power series.

     A Series<R> holds the coefficients of degrees 0..order and every
     operation is performed modulo z^(order+1). Binary operations on
     operands of different orders silently truncate to the smaller order;
     the result's order() is the record of that.

     Two coefficient rings are used: Rational (exact ground truth) and
     double (large orders). Coefficients of counting series grow like
     rho^-n, so a double series may carry a rescaling factor s and store
     a_n * s^n instead of a_n. Substituting z -> s z is a ring homomorphism,
     so sums, products, inverses, exp/log and composition work unchanged on
     the stored values as long as all operands share the same s. Only the
     derivative and the true-coefficient accessors need to know about it.
****/

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mapenum/constraint.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/rational.hpp"

namespace mapenum {

namespace detail {

template <typename R>
inline bool is_zero(const R& x) {
  if constexpr (std::is_floating_point_v<R>) {
    return x == R(0);
  } else {
    return sgn(x) == 0;
  }
}

template <typename R>
inline R from_int(long n) {
  return R(n);
}

}  // namespace detail

template <typename R>
class Series {
 public:
  /// Zero series of the given order.
  explicit Series(std::size_t order, R scale = R(1))
      : coeffs_(order + 1, R(0)), scale_(std::move(scale)) {}

  /// `stored` holds a_n * scale^n; it must not be empty.
  explicit Series(std::vector<R> stored, R scale = R(1))
      : coeffs_(std::move(stored)), scale_(std::move(scale)) {
    if (coeffs_.empty()) coeffs_.push_back(R(0));
  }

  static Series constant(R c, std::size_t order, R scale = R(1)) {
    Series s(order, std::move(scale));
    s.coeffs_[0] = std::move(c);
    return s;
  }

  /// The series z.
  static Series variable(std::size_t order, R scale = R(1)) {
    Series s(order, scale);
    if (order >= 1) s.coeffs_[1] = scale;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const R& scale() const noexcept { return scale_; }

  /// Stored coefficient (equal to the true coefficient when scale is 1).
  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  R& operator[](std::size_t n) { return coeffs_.at(n); }

  std::span<const R> coefficients() const noexcept { return coeffs_; }

  Series truncate(std::size_t order) const {
    Series out(*this);
    out.coeffs_.resize(std::min(order, this->order()) + 1);
    return out;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return detail::is_zero(c); });
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.scale_ == b.scale_ && a.coeffs_ == b.coeffs_;
  }

  Series& operator+=(const Series& rhs) {
    check_scale(rhs);
    coeffs_.resize(std::min(order(), rhs.order()) + 1);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
  }

  Series& operator-=(const Series& rhs) {
    check_scale(rhs);
    coeffs_.resize(std::min(order(), rhs.order()) + 1);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
  }

  Series& operator*=(const R& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const R& c) { return a *= c; }
  friend Series operator*(const R& c, Series a) { return a *= c; }
  friend Series operator-(Series a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }

  void check_scale(const Series& other) const {
    if (!(scale_ == other.scale_)) throw ScaleMismatch();
  }

 private:
  std::vector<R> coeffs_;
  R scale_;
};

using TruncatedSeries = Series<Rational>;
using FloatSeries = Series<double>;

/// Cauchy product modulo z^(min order + 1). Zero coefficients of the left
/// operand are skipped, which makes products with sparse e_P cheap.
template <typename R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
  a.check_scale(b);
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<R> out(order + 1, R(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (detail::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return Series<R>(std::move(out), a.scale());
}

template <typename R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
  return mul(a, b);
}

template <typename R>
Series<R> mul_inverse(const Series<R>& f) {
  if (detail::is_zero(f[0])) throw NonInvertibleSeries();
  const std::size_t order = f.order();
  std::vector<R> g(order + 1, R(0));
  const R inv0 = R(1) / f[0];
  g[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    R acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (!detail::is_zero(f[k])) acc += f[k] * g[n - k];
    }
    g[n] = -acc * inv0;
  }
  return Series<R>(std::move(g), f.scale());
}

template <typename R>
Series<R> power(const Series<R>& f, std::uint64_t exponent) {
  Series<R> result = Series<R>::constant(R(1), f.order(), f.scale());
  Series<R> base = f;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

/// f(g(z)). The outer series is read through its true coefficients, so it
/// must be unscaled; the result takes g's scale. Only the first
/// min(order f, order g) + 1 coefficients of f contribute.
template <typename R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
  if (!detail::is_zero(g[0])) throw CompositionRequiresZeroConstant();
  if (!(f.scale() == R(1))) throw ScaleMismatch();
  const std::size_t order = std::min(f.order(), g.order());
  const Series<R> inner = g.truncate(order);
  // Horner from the top coefficient down.
  Series<R> acc = Series<R>::constant(f[order], order, g.scale());
  for (std::size_t i = order; i-- > 0;) {
    acc = mul(acc, inner);
    acc[0] += f[i];
  }
  return acc;
}

template <typename R>
Series<R> derivative(const Series<R>& f) {
  if (f.order() == 0) throw Error("derivative of an order-0 series is not determined");
  std::vector<R> out(f.order());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = f[n + 1] * detail::from_int<R>(static_cast<long>(n + 1)) / f.scale();
  }
  return Series<R>(std::move(out), f.scale());
}

/// exp(g) for g(0) = 0, via n h_n = sum_k k g_k h_{n-k}.
template <typename R>
Series<R> exp_series(const Series<R>& g) {
  if (!detail::is_zero(g[0])) throw CompositionRequiresZeroConstant();
  const std::size_t order = g.order();
  std::vector<R> h(order + 1, R(0));
  h[0] = R(1);
  for (std::size_t n = 1; n <= order; ++n) {
    R acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (!detail::is_zero(g[k])) acc += detail::from_int<R>(static_cast<long>(k)) * g[k] * h[n - k];
    }
    h[n] = acc / detail::from_int<R>(static_cast<long>(n));
  }
  return Series<R>(std::move(h), g.scale());
}

/// ln(f) for f(0) = 1, via f' = f g'.
template <typename R>
Series<R> log_series(const Series<R>& f) {
  if (detail::is_zero(f[0])) throw NonInvertibleSeries();
  if (!(f[0] == R(1))) throw Error("ln needs constant term 1 to stay in the coefficient ring");
  const std::size_t order = f.order();
  std::vector<R> g(order + 1, R(0));
  for (std::size_t n = 1; n <= order; ++n) {
    R acc(0);
    for (std::size_t k = 1; k < n; ++k) {
      if (!detail::is_zero(g[k])) acc += detail::from_int<R>(static_cast<long>(k)) * g[k] * f[n - k];
    }
    g[n] = f[n] - acc / detail::from_int<R>(static_cast<long>(n));
  }
  return Series<R>(std::move(g), f.scale());
}

/// Stored coefficients of e_P(s z) up to `order`.
template <typename R>
Series<R> e_series(const PreimageConstraint& p, std::size_t order, R scale = R(1)) {
  std::vector<R> out(order + 1, R(0));
  R term(1);  // s^n / n!
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) term = term * scale / detail::from_int<R>(static_cast<long>(n));
    if (p.contains(n)) out[n] = term;
  }
  return Series<R>(std::move(out), std::move(scale));
}

/// e_P(g(z)) for g(0) = 0. For all of Z>=0 this is exp(g); for a finite P
/// the polynomial e_P is composed directly.
template <typename R>
Series<R> exp_compose(const PreimageConstraint& p, const Series<R>& g) {
  if (!detail::is_zero(g[0])) throw CompositionRequiresZeroConstant();
  if (p.is_all()) return exp_series(g);
  if (p.empty()) return Series<R>(g.order(), g.scale());
  const std::size_t degree = std::min<std::size_t>(p.max_element(), g.order());
  const Series<R> outer = e_series<R>(p, degree);
  Series<R> acc = Series<R>::constant(outer[degree], g.order(), g.scale());
  for (std::size_t i = degree; i-- > 0;) {
    acc = mul(acc, g);
    acc[0] += outer[i];
  }
  return acc;
}

/// The unique sigma with sigma(0) = 0 and sigma = z e_P(sigma), computed
/// coefficientwise as [z^n] sigma = (1/n) [z^(n-1)] e_P(z)^n. Successive
/// powers are built by one multiplication each, so the cost is
/// O(order^2 |P|) for finite P.
template <typename R>
Series<R> lagrange_invert(const PreimageConstraint& p, std::size_t order, R scale = R(1)) {
  if (!p.contains(0)) throw NonInvertibleEpsilon();
  Series<R> sigma(order, scale);
  if (order == 0) return sigma;
  // With E(w) = e_P(s w): s^n [z^(n-1)] e_P^n / n = (s / n) [w^(n-1)] E^n.
  const Series<R> e = e_series<R>(p, order - 1, scale);
  Series<R> pw = e;
  for (std::size_t n = 1; n <= order; ++n) {
    sigma[n] = scale * pw[n - 1] / detail::from_int<R>(static_cast<long>(n));
    if (n < order) pw = mul(e, pw);
  }
  return sigma;
}

/// True coefficient a_n of a rescaled double series; may overflow to inf.
inline double true_coefficient(const FloatSeries& f, std::size_t n) {
  if (f[n] == 0.0) return 0.0;
  const double log_mag = std::log(std::fabs(f[n])) - static_cast<double>(n) * std::log(f.scale());
  return std::copysign(std::exp(log_mag), f[n]);
}

/// Evaluates the truncated series at z = x by Horner on the stored
/// coefficients, i.e. sum a_n x^n.
inline double evaluate(const FloatSeries& f, double x) {
  const double ratio = x / f.scale();
  double acc = 0.0;
  for (std::size_t i = f.order() + 1; i-- > 0;) acc = acc * ratio + f[i];
  return acc;
}

inline FloatSeries to_float(const TruncatedSeries& f) {
  if (!(f.scale() == 1)) throw ScaleMismatch();
  std::vector<double> out;
  out.reserve(f.order() + 1);
  for (const auto& c : f.coefficients()) out.push_back(c.get_d());
  return FloatSeries(std::move(out));
}

}  // namespace mapenum
