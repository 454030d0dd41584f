#include "sharp/series.hpp"

namespace sharp {

namespace {

Rational factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace

std::vector<Rational> exp_taylor(int order) {
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back(Rational(1) / factorial(k));
  return c;
}

std::vector<Rational> sin_taylor(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 1; k <= order; k += 2) c[k] = Rational(((k / 2) % 2 == 0) ? 1 : -1) / factorial(k);
  return c;
}

std::vector<Rational> cos_taylor(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 0; k <= order; k += 2) c[k] = Rational(((k / 2) % 2 == 0) ? 1 : -1) / factorial(k);
  return c;
}

std::vector<Rational> sinh_taylor(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 1; k <= order; k += 2) c[k] = Rational(1) / factorial(k);
  return c;
}

std::vector<Rational> cosh_taylor(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 0; k <= order; k += 2) c[k] = Rational(1) / factorial(k);
  return c;
}

std::vector<Rational> atan_taylor(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 1; k <= order; k += 2) c[k] = ratio(((k / 2) % 2 == 0) ? 1 : -1, k);
  for (auto& v : c) v.canonicalize();
  return c;
}

std::vector<Rational> log1p_taylor(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int k = 1; k <= order; ++k) {
    c[k] = ratio(k % 2 == 1 ? 1 : -1, k);
    c[k].canonicalize();
  }
  return c;
}

std::vector<Rational> binomial_taylor(const Rational& r, int order) {
  std::vector<Rational> c;
  Rational term = 1;
  for (int k = 0; k <= order; ++k) {
    c.push_back(term);
    term = term * (r - k) / (k + 1);
  }
  return c;
}

ScalarSeries pow(const ScalarSeries& s, const Rational& r) {
  if (!s[0].is_one()) throw PreconditionError("binomial power needs constant term 1");
  auto y = s - ScalarSeries::constant(GaussRational(1), s.order());
  return compose(binomial_taylor(r, s.order()), y);
}

ScalarSeries trace(const MatrixSeries& m) {
  std::vector<GaussRational> v;
  for (const auto& c : m.coefficients()) v.push_back(c.trace());
  return ScalarSeries(std::move(v));
}

MatrixSeries transpose(const MatrixSeries& m) {
  std::vector<GMatrix> v;
  for (const auto& c : m.coefficients()) v.push_back(c.transpose());
  return MatrixSeries(std::move(v));
}

namespace {

using Grid = std::vector<std::vector<ScalarSeries>>;

// Elimination with pivots that have a nonzero constant term; a block without
// such a pivot is expanded along its first column.
ScalarSeries det_of_grid(Grid g, int order) {
  const std::size_t n = g.size();
  if (n == 0) return ScalarSeries::constant(GaussRational(1), order);
  std::size_t pivot = 0;
  while (pivot < n && g[pivot][0][0].is_zero()) ++pivot;
  if (pivot == n) {
    auto total = ScalarSeries::constant(GaussRational(0), order);
    for (std::size_t r = 0; r < n; ++r) {
      if (g[r][0].is_zero()) continue;
      Grid minor;
      for (std::size_t rr = 0; rr < n; ++rr) {
        if (rr == r) continue;
        minor.emplace_back(g[rr].begin() + 1, g[rr].end());
      }
      auto term = g[r][0] * det_of_grid(std::move(minor), order);
      total = (r % 2 == 0) ? total + term : total - term;
    }
    return total;
  }
  ScalarSeries sign = ScalarSeries::constant(GaussRational(1), order);
  if (pivot != 0) {
    std::swap(g[pivot], g[0]);
    sign = -sign;
  }
  const ScalarSeries inv = inverse(g[0][0]);
  Grid rest;
  for (std::size_t r = 1; r < n; ++r) {
    const ScalarSeries factor = g[r][0] * inv;
    std::vector<ScalarSeries> row;
    for (std::size_t c = 1; c < n; ++c) row.push_back(g[r][c] - factor * g[0][c]);
    rest.push_back(std::move(row));
  }
  return sign * g[0][0] * det_of_grid(std::move(rest), order);
}

}  // namespace

ScalarSeries determinant(const MatrixSeries& m) {
  const Eigen::Index n = m[0].rows();
  if (m[0].cols() != n) throw DimensionError("determinant of a non-square matrix series");
  Grid g(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      std::vector<GaussRational> v;
      for (const auto& c : m.coefficients()) v.push_back(c(i, j));
      g[i].emplace_back(std::move(v));
    }
  return det_of_grid(std::move(g), m.order());
}

MatrixSeries operator*(const GMatrix& c, const MatrixSeries& s) {
  std::vector<GMatrix> v;
  for (const auto& x : s.coefficients()) v.push_back(c * x);
  return MatrixSeries(std::move(v));
}

MatrixSeries operator*(const MatrixSeries& s, const GMatrix& c) {
  std::vector<GMatrix> v;
  for (const auto& x : s.coefficients()) v.push_back(x * c);
  return MatrixSeries(std::move(v));
}

}  // namespace sharp
