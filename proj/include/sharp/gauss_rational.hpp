#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sharp {

using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// num/den in lowest terms.
inline Rational ratio(long num, long den) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

/// "p" or "p/q", lowest terms, sign on the numerator.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

/// Exact complex rational re + im*i.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int v) : re_(v) {}
  GaussRational(long v) : re_(v) {}
  GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussRational operator-() const { return {-re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

/// Integer power; negative exponents invert (throws PreconditionError on 0).
GaussRational pow(const GaussRational& base, long exponent);

/// "3/4", "-i", "2i", "1/2+1/3i", "1-i".
std::string to_string(const GaussRational& z);

/// Inverse of to_string. Throws std::invalid_argument.
GaussRational parse_gauss_rational(std::string_view s);

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

// Eigen's generic kernels look these up by ADL.
inline GaussRational conj(const GaussRational& z) { return z.conj(); }
inline GaussRational real(const GaussRational& z) { return GaussRational(z.real()); }
inline GaussRational imag(const GaussRational& z) { return GaussRational(z.imag()); }
inline GaussRational abs2(const GaussRational& z) { return GaussRational(z.norm2()); }

}  // namespace sharp

namespace Eigen {

// Treated as a "real" field by Eigen: only ring operations are ever used and
// conjugation is never requested by the exact kernels.
template <>
struct NumTraits<sharp::GaussRational> : GenericNumTraits<sharp::GaussRational> {
  using Real = sharp::GaussRational;
  using NonInteger = sharp::GaussRational;
  using Literal = sharp::GaussRational;
  using Nested = sharp::GaussRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  // Exact values print in full; these only silence Eigen's stream precision logic.
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
