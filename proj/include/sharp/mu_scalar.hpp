#pragma once

#include <map>
#include <string>

#include "sharp/gauss_rational.hpp"

namespace sharp {

/// Laurent polynomial in the deformation parameter mu with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
class MuScalar {
 public:
  using TermMap = std::map<int, GaussRational>;

  MuScalar() = default;
  MuScalar(int v) : MuScalar(GaussRational(v)) {}
  MuScalar(const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
  }

  /// c * mu^k
  static MuScalar term(const GaussRational& c, int k) {
    MuScalar m;
    if (!c.is_zero()) m.terms_.emplace(k, c);
    return m;
  }
  static MuScalar mu(int k = 1) { return term(GaussRational(1), k); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  /// Coefficient of mu^k (zero if absent).
  GaussRational coefficient(int k) const;
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int k, const GaussRational& c);

  /// Substitutes mu = value. Throws PreconditionError for a pole at zero.
  GaussRational evaluate(const GaussRational& value) const;

  MuScalar operator-() const;
  MuScalar& operator+=(const MuScalar& o);
  MuScalar& operator-=(const MuScalar& o);
  MuScalar& operator*=(const GaussRational& c);

  friend MuScalar operator+(MuScalar a, const MuScalar& b) { return a += b; }
  friend MuScalar operator-(MuScalar a, const MuScalar& b) { return a -= b; }
  friend MuScalar operator*(const MuScalar& a, const MuScalar& b);
  friend MuScalar operator*(MuScalar a, const GaussRational& c) { return a *= c; }
  friend MuScalar operator*(const GaussRational& c, MuScalar a) { return a *= c; }

  friend bool operator==(const MuScalar& a, const MuScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MuScalar& a, const MuScalar& b) { return !(a == b); }

 private:
  TermMap terms_;
};

inline bool is_zero(const MuScalar& m) { return m.is_zero(); }

std::string to_string(const MuScalar& m);

}  // namespace sharp
