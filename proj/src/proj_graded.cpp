#include "sharp/proj_graded.hpp"

#include <stdexcept>

namespace sharp {

GradedPoly graded_piece(const GradedPoly& p, int d) {
  GradedPoly r(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

mpz_class h0_dimension(int n, long m) {
  if (n < 0) throw PreconditionError("projective dimension must be non-negative");
  if (m < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n + m), static_cast<unsigned long>(n));
  return r;
}

std::optional<GradedPoly> exact_quotient(const GradedPoly& g, const GradedPoly& f) {
  if (f.nvars() != g.nvars()) throw DimensionError("exact_quotient: ring mismatch");
  if (f.is_zero()) throw PreconditionError("division by the zero polynomial");
  // One divisor is a Groebner basis of its ideal, so the remainder is zero iff f | g.
  const auto& [lead_mono, lead_coeff] = *f.terms().begin();
  GradedPoly rest = g;
  GradedPoly quotient(g.nvars());
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().begin();
    if (!lead_mono.divides(m)) return std::nullopt;
    const Rational factor = c / lead_coeff;
    const GradedPoly step = GradedPoly::monomial(m / lead_mono, factor);
    quotient += step;
    rest -= step * f;
  }
  return quotient;
}

namespace {

GradedPoly power_of(const GradedPoly& f, int m) {
  GradedPoly r = GradedPoly::constant(f.nvars(), Rational(1));
  for (int k = 0; k < m; ++k) r *= f;
  return r;
}

GradedPoly divide(const GradedPoly& g, const GradedPoly& f) {
  auto q = exact_quotient(g, f);
  if (!q) throw std::logic_error("gcd: inexact division");
  return std::move(*q);
}

int degree_in(const GradedPoly& p, std::size_t v) {
  int d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[v]);
  return d;
}

// p = sum_k coeffs[k] z_v^k with coeffs free of z_v.
std::vector<GradedPoly> split(const GradedPoly& p, std::size_t v) {
  std::vector<GradedPoly> coeffs(static_cast<std::size_t>(degree_in(p, v) + 1), GradedPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[v] = 0;
    coeffs[static_cast<std::size_t>(m[v])].add_term(rest, c);
  }
  return coeffs;
}

GradedPoly leading_in(const GradedPoly& p, std::size_t v) { return split(p, v).back(); }

GradedPoly content_in(const GradedPoly& p, std::size_t v) {
  GradedPoly c(p.nvars());
  for (const GradedPoly& k : split(p, v)) {
    if (k.is_zero()) continue;
    c = gcd(c, k);
    if (c.degree() == 0) break;
  }
  return c;
}

// Sparse pseudo-remainder of a by b as polynomials in z_v.
GradedPoly pseudo_remainder(GradedPoly a, const GradedPoly& b, std::size_t v) {
  const int db = degree_in(b, v);
  const GradedPoly lb = leading_in(b, v);
  while (!a.is_zero() && degree_in(a, v) >= db) {
    Monomial shift(a.nvars());
    shift[v] = degree_in(a, v) - db;
    a = a * lb - leading_in(a, v) * b * GradedPoly::monomial(shift, Rational(1));
  }
  return a;
}

}  // namespace

GradedPoly monic(const GradedPoly& p) {
  if (p.is_zero()) return p;
  const Rational lead = p.terms().begin()->second;
  return lead == 1 ? p : p.scaled(Rational(1 / lead));
}

GradedPoly gcd(const GradedPoly& a, const GradedPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("gcd: ring mismatch");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  const std::size_t n = a.nvars();
  if (a.degree() == 0 || b.degree() == 0) return GradedPoly::constant(n, Rational(1));

  std::size_t v = n;
  for (const GradedPoly* p : {&a, &b})
    for (const auto& [m, c] : p->terms())
      for (std::size_t i = 0; i < v; ++i)
        if (m[i] > 0) {
          v = i;
          break;
        }

  // Coefficients in z_v involve only later variables, so the recursion shrinks.
  const GradedPoly ca = content_in(a, v), cb = content_in(b, v);
  const GradedPoly content = gcd(ca, cb);
  GradedPoly x = divide(a, ca), y = divide(b, cb);
  if (degree_in(x, v) < degree_in(y, v)) std::swap(x, y);
  while (degree_in(y, v) > 0) {
    const GradedPoly r = pseudo_remainder(x, y, v);
    x = std::move(y);
    if (r.is_zero()) {
      y = GradedPoly(n);
      break;
    }
    y = monic(divide(r, content_in(r, v)));
  }
  // y == 0: x is the primitive gcd; otherwise y is a unit and the primitive parts are coprime.
  const GradedPoly primitive = y.is_zero() ? x : GradedPoly::constant(n, Rational(1));
  return monic(content * primitive);
}

LocalFraction::LocalFraction(GradedPoly numerator, GradedPoly base, int power)
    : numerator_(std::move(numerator)), base_(std::move(base)), power_(power) {
  if (numerator_.nvars() != base_.nvars()) throw DimensionError("fraction: ring mismatch");
  if (base_.is_zero()) throw PreconditionError("cannot localise at zero");
  if (!base_.is_homogeneous()) throw PreconditionError("localisation base must be homogeneous");
  if (power_ < 0) throw PreconditionError("negative denominator power");
  if (!numerator_.is_zero()) {
    const int expected = power_ * base_.degree();
    if (!numerator_.is_homogeneous() || numerator_.degree() != expected)
      throw PreconditionError("numerator must be homogeneous of degree " + std::to_string(expected) +
                              " for a degree-0 fraction");
  }
  denominator_ = power_of(base_, power_);
  normalize(power_);
}

void LocalFraction::normalize(int bound) {
  base_ = monic(base_);
  const std::size_t n = base_.nvars();
  if (numerator_.is_zero()) {
    denominator_ = GradedPoly::constant(n, Rational(1));
    power_ = 0;
    return;
  }
  const GradedPoly common = gcd(numerator_, denominator_);
  numerator_ = divide(numerator_, common);
  denominator_ = divide(denominator_, common);
  const Rational lead = denominator_.terms().begin()->second;
  denominator_ = denominator_.scaled(Rational(1 / lead));
  numerator_ = numerator_.scaled(Rational(1 / lead));

  GradedPoly fk = GradedPoly::constant(n, Rational(1));
  for (power_ = 0; power_ < bound; ++power_, fk *= base_)
    if (exact_quotient(fk, denominator_)) break;
}

bool operator==(const LocalFraction& a, const LocalFraction& b) {
  if (a.numerator_.nvars() != b.numerator_.nvars()) return false;
  if (a.denominator_ == b.denominator_) return a.numerator_ == b.numerator_;
  return a.numerator_ * b.denominator_ == b.numerator_ * a.denominator_;
}

LocalFraction operator*(const LocalFraction& a, const LocalFraction& b) {
  if (a.numerator_.nvars() != b.numerator_.nvars()) throw DimensionError("fraction: ring mismatch");
  LocalFraction r;
  r.numerator_ = a.numerator_ * b.numerator_;
  r.denominator_ = a.denominator_ * b.denominator_;
  const bool same = a.base_ == b.base_;
  r.base_ = same ? a.base_ : a.base_ * b.base_;
  // d1 | f1^k1 and d2 | f2^k2, so d1 d2 | (f1 f2)^max(k1, k2).
  r.normalize(same ? a.power_ + b.power_ : std::max(a.power_, b.power_));
  return r;
}

LocalFraction localize(const GradedPoly& g, const GradedPoly& f, int m) { return LocalFraction(g, f, m); }

ChartFamily alpha(const GradedPoly& a) {
  if (!a.is_homogeneous()) throw PreconditionError("alpha needs a homogeneous element");
  ChartFamily family;
  family.degree = a.is_zero() ? 0 : a.degree();
  for (std::size_t i = 0; i < a.nvars(); ++i)
    family.charts.emplace_back(a, GradedPoly::variable(a.nvars(), i), family.degree);
  return family;
}

bool chart_compatibility(const ChartFamily& family, std::size_t i, std::size_t j) {
  if (i >= family.charts.size() || j >= family.charts.size()) throw DimensionError("chart index out of range");
  const LocalFraction& ri = family.charts[i];
  const LocalFraction& rj = family.charts[j];
  const std::size_t n = ri.numerator().nvars();
  const GradedPoly zi_d = power_of(GradedPoly::variable(n, i), family.degree);
  const GradedPoly zj_d = power_of(GradedPoly::variable(n, j), family.degree);
  // g_i z_i^d / (h_i z_j^d) == g_j / h_j
  return ri.numerator() * zi_d * rj.denominator() == rj.numerator() * ri.denominator() * zj_d;
}

bool chart_compatibility(const GradedPoly& a, std::size_t i, std::size_t j) {
  return chart_compatibility(alpha(a), i, j);
}

bool operator==(const ChartFamily& a, const ChartFamily& b) {
  if (a.degree != b.degree || a.charts.size() != b.charts.size()) return false;
  for (std::size_t i = 0; i < a.charts.size(); ++i)
    if (a.charts[i] != b.charts[i]) return false;
  return true;
}

}  // namespace sharp
