#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sharp/dense.hpp"
#include "sharp/errors.hpp"
#include "sharp/gauss_rational.hpp"

namespace sharp {

namespace detail {

inline GaussRational zero_like(const GaussRational&) { return {}; }
template <typename Scalar>
Mat<Scalar> zero_like(const Mat<Scalar>& m) {
  return Mat<Scalar>::Zero(m.rows(), m.cols());
}

inline GaussRational one_like(const GaussRational&) { return GaussRational(1); }
template <typename Scalar>
Mat<Scalar> one_like(const Mat<Scalar>& m) {
  return Mat<Scalar>::Identity(m.rows(), m.cols());
}

inline bool coeff_vanishes(const GaussRational& c) { return c.is_zero(); }
template <typename Scalar>
bool coeff_vanishes(const Mat<Scalar>& m) {
  return is_zero_matrix(m);
}

inline GaussRational invert(const GaussRational& c) {
  if (c.is_zero()) throw PreconditionError("series constant term is not invertible");
  return GaussRational(1) / c;
}
template <typename Scalar>
Mat<Scalar> invert(const Mat<Scalar>& m) {
  return exact_inverse(m);
}

}  // namespace detail

/// Power series in t truncated after t^order, exact coefficients.
/// Coeff is either a scalar or a square matrix.
template <typename Coeff>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DimensionError("a truncated series needs at least one coefficient");
  }

  /// c + 0*t + ... + 0*t^order
  static TruncatedSeries constant(const Coeff& c, int order) {
    std::vector<Coeff> v(order + 1, detail::zero_like(c));
    v[0] = c;
    return TruncatedSeries(std::move(v));
  }

  /// c*t
  static TruncatedSeries linear(const Coeff& c, int order) {
    std::vector<Coeff> v(order + 1, detail::zero_like(c));
    if (order >= 1) v[1] = c;
    return TruncatedSeries(std::move(v));
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& operator[](int k) const { return coeffs_.at(k); }
  Coeff& operator[](int k) { return coeffs_.at(k); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Coeff zero_coeff() const { return detail::zero_like(coeffs_.front()); }
  Coeff one_coeff() const { return detail::one_like(coeffs_.front()); }

  TruncatedSeries truncated(int order) const {
    std::vector<Coeff> v(order + 1, zero_coeff());
    for (int k = 0; k <= std::min(order, this->order()); ++k) v[k] = coeffs_[k];
    return TruncatedSeries(std::move(v));
  }

  /// d/dt; the result has order one less (order 0 maps to the zero constant).
  TruncatedSeries derivative() const {
    if (order() == 0) return constant(zero_coeff(), 0);
    std::vector<Coeff> v;
    for (int k = 1; k <= order(); ++k) v.push_back(coeffs_[k] * GaussRational(k));
    return TruncatedSeries(std::move(v));
  }

  bool is_zero() const {
    for (const Coeff& c : coeffs_)
      if (!detail::coeff_vanishes(c)) return false;
    return true;
  }

  /// Every coefficient of the given t-parity (0 even, 1 odd) other than those vanishing.
  bool has_parity(int parity) const {
    for (int k = 0; k <= order(); ++k)
      if (k % 2 != parity && !detail::coeff_vanishes(coeffs_[k])) return false;
    return true;
  }

  template <typename Scalar>
  TruncatedSeries scaled(const Scalar& s) const {
    std::vector<Coeff> v;
    for (const Coeff& c : coeffs_) v.push_back(c * s);
    return TruncatedSeries(std::move(v));
  }

  TruncatedSeries operator-() const { return scaled(GaussRational(-1)); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Coeff> v;
    for (int k = 0; k <= order; ++k) v.push_back(a[k] + b[k]);
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Coeff> v;
    for (int k = 0; k <= order; ++k) v.push_back(a[k] - b[k]);
    return TruncatedSeries(std::move(v));
  }

  /// Cauchy product, factor order preserved (matrix coefficients do not commute).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Coeff> v(order + 1, a.zero_coeff());
    for (int i = 0; i <= order; ++i) {
      if (detail::coeff_vanishes(a[i])) continue;
      for (int j = 0; i + j <= order; ++j) {
        if (detail::coeff_vanishes(b[j])) continue;
        v[i + j] += a[i] * b[j];
      }
    }
    return TruncatedSeries(std::move(v));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) return false;
    for (int k = 0; k <= a.order(); ++k)
      if (!(a[k] == b[k])) return false;
    return true;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

 private:
  std::vector<Coeff> coeffs_;
};

using ScalarSeries = TruncatedSeries<GaussRational>;
using MatrixSeries = TruncatedSeries<GMatrix>;

/// Multiplicative inverse; requires an invertible constant term.
template <typename Coeff>
TruncatedSeries<Coeff> inverse(const TruncatedSeries<Coeff>& s) {
  const Coeff inv0 = detail::invert(s[0]);
  std::vector<Coeff> v(s.order() + 1, s.zero_coeff());
  v[0] = inv0;
  for (int k = 1; k <= s.order(); ++k) {
    Coeff acc = s.zero_coeff();
    for (int j = 1; j <= k; ++j) acc += s[j] * v[k - j];
    v[k] = -(inv0 * acc);
  }
  return TruncatedSeries<Coeff>(std::move(v));
}

/// sum_k coeffs[k] * x^k for x with vanishing constant term.
template <typename Coeff>
TruncatedSeries<Coeff> compose(const std::vector<Rational>& coeffs, const TruncatedSeries<Coeff>& x) {
  if (!detail::coeff_vanishes(x[0])) throw PreconditionError("composition needs a series without constant term");
  const int order = x.order();
  auto result = TruncatedSeries<Coeff>::constant(x.zero_coeff(), order);
  auto power = TruncatedSeries<Coeff>::constant(x.one_coeff(), order);
  for (int k = 0; k <= order && k < static_cast<int>(coeffs.size()); ++k) {
    if (sgn(coeffs[k]) != 0) result = result + power.scaled(GaussRational(coeffs[k]));
    power = power * x;
  }
  return result;
}

/// Taylor coefficients of the elementary functions used below, up to order.
std::vector<Rational> exp_taylor(int order);
std::vector<Rational> sin_taylor(int order);
std::vector<Rational> cos_taylor(int order);
std::vector<Rational> sinh_taylor(int order);
std::vector<Rational> cosh_taylor(int order);
std::vector<Rational> atan_taylor(int order);
/// log(1 + y) = sum (-1)^{k+1} y^k / k
std::vector<Rational> log1p_taylor(int order);
/// (1 + y)^r = sum binom(r, k) y^k
std::vector<Rational> binomial_taylor(const Rational& r, int order);

template <typename Coeff>
TruncatedSeries<Coeff> exp(const TruncatedSeries<Coeff>& x) {
  return compose(exp_taylor(x.order()), x);
}
template <typename Coeff>
TruncatedSeries<Coeff> sin(const TruncatedSeries<Coeff>& x) {
  return compose(sin_taylor(x.order()), x);
}
template <typename Coeff>
TruncatedSeries<Coeff> cos(const TruncatedSeries<Coeff>& x) {
  return compose(cos_taylor(x.order()), x);
}
template <typename Coeff>
TruncatedSeries<Coeff> sinh(const TruncatedSeries<Coeff>& x) {
  return compose(sinh_taylor(x.order()), x);
}
template <typename Coeff>
TruncatedSeries<Coeff> cosh(const TruncatedSeries<Coeff>& x) {
  return compose(cosh_taylor(x.order()), x);
}
/// sin(x) cos(x)^{-1}; the factors commute, both being series in x.
template <typename Coeff>
TruncatedSeries<Coeff> tan(const TruncatedSeries<Coeff>& x) {
  return sin(x) * inverse(cos(x));
}
template <typename Coeff>
TruncatedSeries<Coeff> tanh(const TruncatedSeries<Coeff>& x) {
  return sinh(x) * inverse(cosh(x));
}
template <typename Coeff>
TruncatedSeries<Coeff> atan(const TruncatedSeries<Coeff>& x) {
  return compose(atan_taylor(x.order()), x);
}

/// Principal logarithm of a series whose constant term is the identity.
template <typename Coeff>
TruncatedSeries<Coeff> log(const TruncatedSeries<Coeff>& x) {
  if (!(x[0] == x.one_coeff())) throw PreconditionError("log needs constant term 1");
  auto y = x - TruncatedSeries<Coeff>::constant(x.one_coeff(), x.order());
  return compose(log1p_taylor(x.order()), y);
}

/// s^r for a scalar series with s(0) = 1, on the binomial branch.
ScalarSeries pow(const ScalarSeries& s, const Rational& r);

ScalarSeries trace(const MatrixSeries& m);
MatrixSeries transpose(const MatrixSeries& m);

/// Determinant over the truncated series ring.
ScalarSeries determinant(const MatrixSeries& m);

/// Left/right multiplication by a constant matrix.
MatrixSeries operator*(const GMatrix& c, const MatrixSeries& s);
MatrixSeries operator*(const MatrixSeries& s, const GMatrix& c);

}  // namespace sharp
