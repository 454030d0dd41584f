#include "sharp/gauss_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "sharp/errors.hpp"

namespace sharp {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string text(s);
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) throw std::invalid_argument("bad rational literal '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != '/') throw std::invalid_argument("bad rational literal '" + text + "'");
    ++pos;
    const std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size())
      throw std::invalid_argument("bad rational literal '" + text + "'");
  }
  if (text[0] == '+') text.erase(0, 1);
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

GaussRational pow(const GaussRational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw PreconditionError("negative power of zero");
    return GaussRational(1) / pow(base, -exponent);
  }
  GaussRational result(1);
  GaussRational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string to_string(const GaussRational& z) {
  if (z.is_real()) return to_string(z.real());
  std::string im;
  const Rational mag = abs(z.imag());
  if (mag != 1) im = to_string(mag);
  im += 'i';
  if (sgn(z.real()) == 0) return (sgn(z.imag()) < 0 ? "-" : "") + im;
  return to_string(z.real()) + (sgn(z.imag()) < 0 ? "-" : "+") + im;
}

GaussRational parse_gauss_rational(std::string_view s) {
  std::string text;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.back() != 'i') return GaussRational(parse_rational(text));

  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "0" : text.substr(0, split);
  std::string im_part = split == std::string::npos ? text : text.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {parse_rational(re_part), parse_rational(im_part)};
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

}  // namespace sharp
