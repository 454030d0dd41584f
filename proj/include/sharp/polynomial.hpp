#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sharp/errors.hpp"
#include "sharp/gauss_rational.hpp"
#include "sharp/mu_scalar.hpp"

namespace sharp {

/// Exponent vector of z_0^{e_0} ... z_n^{e_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.exps_.at(index) = 1;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<int> exps_;
};

/// Lexicographic order with z0 > z1 > ...; larger monomials sort first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents() > b.exponents(); }
};

namespace detail {
template <typename C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

/// Sparse polynomial in nvars commuting variables over the ring Coeff.
template <typename Coeff>
class Polynomial {
 public:
  using Coefficient = Coeff;
  using TermMap = std::map<Monomial, Coeff, LexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Coeff& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DimensionError("variable index out of range");
    Polynomial p(nvars);
    p.add_term(Monomial::unit(nvars, index), Coeff(1));
    return p;
  }

  static Polynomial monomial(const Monomial& m, const Coeff& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  int min_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return d;
  }

  /// The zero polynomial counts as homogeneous of every degree.
  bool is_homogeneous() const { return degree() == min_degree(); }

  /// Largest exponent of each variable over all terms.
  std::vector<int> max_exponents() const {
    std::vector<int> caps(nvars_, 0);
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) caps[i] = std::max(caps[i], m[i]);
    return caps;
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (m.size() != nvars_) throw DimensionError("monomial length does not match nvars");
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  template <typename Scalar>
  Polynomial scaled(const Scalar& s) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      Coeff v = c * s;
      if (!detail::coeff_is_zero(v)) r.terms_.emplace_hint(r.terms_.end(), m, std::move(v));
    }
    return r;
  }

  /// Applies fn to every coefficient, dropping results that vanish.
  template <typename Fn>
  auto map_coefficients(Fn&& fn) const {
    using Out = std::decay_t<decltype(fn(std::declval<const Coeff&>()))>;
    Polynomial<Out> r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_same(const Polynomial& o) const {
    if (o.nvars_ != nvars_)
      throw DimensionError("polynomials live in rings with " + std::to_string(nvars_) + " and " +
                           std::to_string(o.nvars_) + " variables");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Germs and global sections: polynomials in z with mu-Laurent coefficients.
using HomPoly = Polynomial<MuScalar>;
/// Elements of S = Q[z0..zn].
using RatPoly = Polynomial<Rational>;

template <typename Coeff>
Polynomial<Coeff> add(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  return p + q;
}

template <typename Coeff>
Polynomial<Coeff> mul(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  return p * q;
}

/// Formal partial derivative with respect to variable `index`.
template <typename Coeff>
Polynomial<Coeff> partial(const Polynomial<Coeff>& p, std::size_t index) {
  if (index >= p.nvars()) throw DimensionError("partial: variable index out of range");
  Polynomial<Coeff> r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[index] == 0) continue;
    Monomial dm = m;
    dm[index] -= 1;
    r.add_term(dm, c * Coeff(Rational(m[index])));
  }
  return r;
}

/// Mixed partial derivative d^{orders[0]}/dz0 ... d^{orders[n]}/dzn.
template <typename Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p, const std::vector<int>& orders) {
  if (orders.size() != p.nvars()) throw DimensionError("derivative: multi-index length mismatch");
  Polynomial<Coeff> r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    mpz_class factor = 1;
    bool vanishes = false;
    Monomial dm = m;
    for (std::size_t i = 0; i < orders.size() && !vanishes; ++i) {
      if (m[i] < orders[i]) {
        vanishes = true;
        break;
      }
      for (int j = 0; j < orders[i]; ++j) factor *= m[i] - j;
      dm[i] -= orders[i];
    }
    if (!vanishes) r.add_term(dm, c * Coeff(Rational(factor)));
  }
  return r;
}

/// Splits p by total z-degree.
template <typename Coeff>
std::map<int, Polynomial<Coeff>> homogeneous_components(const Polynomial<Coeff>& p) {
  std::map<int, Polynomial<Coeff>> out;
  for (const auto& [m, c] : p.terms()) {
    auto it = out.try_emplace(m.degree(), p.nvars()).first;
    it->second.add_term(m, c);
  }
  return out;
}

/// Every monomial of total degree d in nvars variables, in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

/// Embeds a rational polynomial as a HomPoly (mu^0 coefficients).
HomPoly to_hom_poly(const RatPoly& p);

/// Variable display names: z0..z{n-1} unless overridden.
std::vector<std::string> default_var_names(std::size_t nvars);

/// Canonical text form: terms in LexGreater order, within one monomial by
/// descending mu-power; e.g. "z0*z1 + (1/2)*mu".
std::string render(const HomPoly& p, const std::vector<std::string>& names);
std::string render(const HomPoly& p);
std::string render(const RatPoly& p);

}  // namespace sharp
