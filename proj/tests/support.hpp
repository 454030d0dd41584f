#pragma once

// Hand-rolled random generators shared by the property tests.

#include <random>

#include "sharp/quad_exp.hpp"
#include "sharp/star_product.hpp"

namespace sharp::testing {

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// p/q with |p| <= num_max, 1 <= q <= den_max.
  Rational rational(int num_max = 5, int den_max = 4) { return ratio(integer(-num_max, num_max), integer(1, den_max)); }

  GaussRational gauss(bool complex = true) {
    if (complex && coin(0.3)) return {rational(), rational()};
    return GaussRational(rational());
  }

  MuScalar mu_scalar(int lo = -1, int hi = 1) {
    MuScalar m;
    const int terms = integer(1, 2);
    for (int t = 0; t < terms; ++t) m.add_term(integer(lo, hi), gauss());
    return m;
  }

  Monomial monomial(std::size_t nvars, int degree) {
    Monomial m(nvars);
    for (int k = 0; k < degree; ++k) ++m[static_cast<std::size_t>(integer(0, static_cast<int>(nvars) - 1))];
    return m;
  }

  /// Up to `terms` monomials of total degree <= max_degree.
  HomPoly poly(std::size_t nvars, int max_degree, int terms = 4, bool with_mu = true) {
    HomPoly p(nvars);
    const int count = integer(1, terms);
    for (int t = 0; t < count; ++t)
      p.add_term(monomial(nvars, integer(0, max_degree)), with_mu ? mu_scalar() : MuScalar(gauss()));
    return p;
  }

  HomPoly homogeneous(std::size_t nvars, int degree, int terms = 3) {
    HomPoly p(nvars);
    for (int t = 0; t < terms; ++t) p.add_term(monomial(nvars, degree), MuScalar(gauss(false)));
    return p;
  }

  RatPoly rat_homogeneous(std::size_t nvars, int degree, int terms = 3) {
    RatPoly p(nvars);
    for (int t = 0; t < terms; ++t) p.add_term(monomial(nvars, degree), rational());
    return p;
  }

  GMatrix matrix(Eigen::Index n, bool complex = false) {
    GMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = gauss(complex);
    return m;
  }

  GMatrix skew(Eigen::Index n, bool complex = false) {
    GMatrix m = GMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        m(i, j) = gauss(complex);
        m(j, i) = -m(i, j);
      }
    return m;
  }

  GMatrix symmetric(Eigen::Index n, bool complex = false) {
    GMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) {
        m(i, j) = gauss(complex);
        m(j, i) = m(i, j);
      }
    return m;
  }

  /// Random matrix with 1 + m invertible.
  GMatrix admissible(Eigen::Index n) {
    for (;;) {
      GMatrix m = matrix(n);
      if (is_invertible(GMatrix(GMatrix::Identity(n, n) + m))) return m;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace sharp::testing
