#pragma once

#include <optional>
#include <vector>

#include "sharp/polynomial.hpp"

namespace sharp {

/// An element of S = Q[z0..zn]; the ambient ring is fixed by nvars().
using GradedPoly = RatPoly;

/// Degree-d homogeneous component S_d of p.
GradedPoly graded_piece(const GradedPoly& p, int d);

/// dim H^0(CP^n, O(m)): zero for m < 0, otherwise binomial(n + m, n).
mpz_class h0_dimension(int n, long m);

/// g / f if f divides g exactly in S, otherwise nullopt.
std::optional<GradedPoly> exact_quotient(const GradedPoly& g, const GradedPoly& f);

/// p scaled so its LexGreater-leading coefficient is 1; zero stays zero.
GradedPoly monic(const GradedPoly& p);

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
GradedPoly gcd(const GradedPoly& a, const GradedPoly& b);

/// g / f^m in the localisation S_f, kept in normal form: g / f^m is stored as
/// numerator / denominator with the common factor gcd(g, f^m) removed and the
/// denominator monic. The base f is stored monic, and power() is the least k
/// with denominator | f^k.
class LocalFraction {
 public:
  /// Throws PreconditionError for a zero or inhomogeneous base, or when the
  /// numerator is not homogeneous of degree m deg f.
  LocalFraction(GradedPoly numerator, GradedPoly base, int power);

  const GradedPoly& numerator() const { return numerator_; }
  const GradedPoly& denominator() const { return denominator_; }
  const GradedPoly& base() const { return base_; }
  int power() const { return power_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Cross-multiplication test; S is a domain so no saturation is needed.
  friend bool operator==(const LocalFraction& a, const LocalFraction& b);
  friend bool operator!=(const LocalFraction& a, const LocalFraction& b) { return !(a == b); }

  /// Product in S_(f1 f2) (or S_(f) when the bases agree).
  friend LocalFraction operator*(const LocalFraction& a, const LocalFraction& b);

 private:
  LocalFraction() = default;
  // bound: a k known to satisfy denominator | base^k.
  void normalize(int bound);

  GradedPoly numerator_;
  GradedPoly denominator_;
  GradedPoly base_;
  int power_ = 0;
};

/// g / f^m as an element of the degree-0 ring S_(f).
LocalFraction localize(const GradedPoly& g, const GradedPoly& f, int m);

/// The image of a homogeneous a in S_d on the standard charts D+(z_i),
/// trivialised by z_i^d: charts[i] = a / z_i^d in S_(z_i).
struct ChartFamily {
  int degree = 0;
  std::vector<LocalFraction> charts;
};

ChartFamily alpha(const GradedPoly& a);

/// charts[i] * (z_i / z_j)^d == charts[j] in S_(z_i z_j).
bool chart_compatibility(const ChartFamily& family, std::size_t i, std::size_t j);
bool chart_compatibility(const GradedPoly& a, std::size_t i, std::size_t j);

/// Component-wise equality of two families.
bool operator==(const ChartFamily& a, const ChartFamily& b);

}  // namespace sharp
