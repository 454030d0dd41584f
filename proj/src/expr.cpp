#include "sharp/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace sharp {

Expr Expr::literal(GaussRational v) {
  Expr e;
  e.kind = Kind::Literal;
  e.value = std::move(v);
  return e;
}

Expr Expr::variable(std::string name) {
  Expr e;
  e.kind = Kind::Variable;
  e.name = std::move(name);
  return e;
}

Expr Expr::mu() {
  Expr e;
  e.kind = Kind::Mu;
  return e;
}

Expr Expr::neg(Expr inner) {
  Expr e;
  e.kind = Kind::Neg;
  e.args.push_back(std::move(inner));
  return e;
}

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = k;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::power(Expr base, int exponent) {
  Expr e;
  e.kind = Kind::Pow;
  e.exponent = exponent;
  e.args.push_back(std::move(base));
  return e;
}

namespace {

constexpr int kMaxExponent = 4096;
const char* const kAtomExpected = "literal, variable, 'mu' or '('";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>* names) : src_(src), names_(names) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ < src_.size()) {
      const char* expected = depth_ == 0 ? "'+', '-', '*', '^' or end of input" : "')'";
      fail(expected, std::string("unexpected '") + src_[pos_] + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected, const std::string& what) const {
    const std::size_t offset = pos_ + 1;
    throw ParseError(offset, expected, "syntax error at offset " + std::to_string(offset) + ": " + what +
                                           " (expected " + expected + ")");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string describe_here() const {
    return pos_ < src_.size() ? std::string("unexpected '") + src_[pos_] + "'" : "unexpected end of input";
  }

  Expr expr() {
    Expr lhs;
    if (accept('-'))
      lhs = Expr::neg(term());
    else {
      accept('+');
      lhs = term();
    }
    for (;;) {
      if (accept('+'))
        lhs = Expr::binary(Expr::Kind::Add, std::move(lhs), term());
      else if (accept('-'))
        lhs = Expr::binary(Expr::Kind::Sub, std::move(lhs), term());
      else
        return lhs;
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (accept('*')) lhs = Expr::binary(Expr::Kind::Mul, std::move(lhs), factor());
    return lhs;
  }

  Expr factor() {
    Expr base = atom();
    if (!accept('^')) return base;
    skip_ws();
    bool negative = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      if (base.kind != Expr::Kind::Mu) fail("non-negative integer", "negative exponent is only allowed on mu");
      negative = true;
      ++pos_;
      skip_ws();
    }
    const std::string digits = read_digits();
    if (digits.empty()) fail("integer exponent", describe_here());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || value > kMaxExponent) {
      pos_ -= digits.size();
      fail("exponent <= " + std::to_string(kMaxExponent), "exponent too large");
    }
    return Expr::power(std::move(base), negative ? -value : value);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail(kAtomExpected, "unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ++depth_;
      Expr inner = expr();
      if (!accept(')')) {
        skip_ws();
        fail("')'", describe_here());
      }
      --depth_;
      return inner;
    }
    if (is_digit(c)) return number();
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == "mu") return Expr::mu();
      if (name == "i") return Expr::literal(GaussRational::i());
      if (names_ && std::find(names_->begin(), names_->end(), name) == names_->end()) {
        pos_ = start;
        fail("one of the ring variables", "unknown variable '" + name + "'");
      }
      return Expr::variable(std::move(name));
    }
    fail(kAtomExpected, describe_here());
  }

  Expr number() {
    const std::size_t start = pos_;
    std::string text = read_digits();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      const std::string den = read_digits();
      if (den.empty()) fail("denominator digits", describe_here());
      if (mpz_class(den) == 0) {
        pos_ = start;
        fail("nonzero denominator", "division by zero in literal");
      }
      text += "/" + den;
    }
    Rational magnitude = parse_rational(text);
    if (pos_ < src_.size() && src_[pos_] == 'i' && !(pos_ + 1 < src_.size() && is_ident_char(src_[pos_ + 1]))) {
      ++pos_;
      return Expr::literal(GaussRational(Rational(0), magnitude));
    }
    return Expr::literal(GaussRational(magnitude));
  }

  std::string_view src_;
  const std::vector<std::string>* names_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

std::string literal_text(const GaussRational& v) {
  if (v.is_real() && sgn(v.real()) >= 0) return to_string(v);
  if (sgn(v.real()) == 0 && sgn(v.imag()) > 0) return to_string(v);
  return "(" + to_string(v) + ")";
}

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src, nullptr).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return literal_text(e.value);
    case Expr::Kind::Variable:
      return e.name;
    case Expr::Kind::Mu:
      return "mu";
    case Expr::Kind::Neg:
      return "(-" + to_string(e.args[0]) + ")";
    case Expr::Kind::Add:
      return "(" + to_string(e.args[0]) + " + " + to_string(e.args[1]) + ")";
    case Expr::Kind::Sub:
      return "(" + to_string(e.args[0]) + " - " + to_string(e.args[1]) + ")";
    case Expr::Kind::Mul:
      return "(" + to_string(e.args[0]) + "*" + to_string(e.args[1]) + ")";
    case Expr::Kind::Pow: {
      const Expr& base = e.args[0];
      const bool bare = base.kind == Expr::Kind::Mu || base.kind == Expr::Kind::Variable;
      std::string b = to_string(base);
      if (!bare && b.front() != '(') b = "(" + b + ")";
      return b + "^" + std::to_string(e.exponent);
    }
  }
  return {};
}

HomPoly evaluate(const Expr& e, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  switch (e.kind) {
    case Expr::Kind::Literal:
      return HomPoly::constant(n, MuScalar(e.value));
    case Expr::Kind::Variable: {
      const auto it = std::find(names.begin(), names.end(), e.name);
      if (it == names.end()) throw ParseError(1, "one of the ring variables", "unknown variable '" + e.name + "'");
      return HomPoly::variable(n, static_cast<std::size_t>(it - names.begin()));
    }
    case Expr::Kind::Mu:
      return HomPoly::constant(n, MuScalar::mu(1));
    case Expr::Kind::Neg:
      return -evaluate(e.args[0], names);
    case Expr::Kind::Add:
      return evaluate(e.args[0], names) + evaluate(e.args[1], names);
    case Expr::Kind::Sub:
      return evaluate(e.args[0], names) - evaluate(e.args[1], names);
    case Expr::Kind::Mul:
      return evaluate(e.args[0], names) * evaluate(e.args[1], names);
    case Expr::Kind::Pow: {
      if (e.args[0].kind == Expr::Kind::Mu) return HomPoly::constant(n, MuScalar::mu(e.exponent));
      if (e.exponent < 0) throw PreconditionError("negative exponent on a non-mu base");
      const HomPoly base = evaluate(e.args[0], names);
      HomPoly r = HomPoly::constant(n, MuScalar(1));
      for (int k = 0; k < e.exponent; ++k) r *= base;
      return r;
    }
  }
  return HomPoly(n);
}

HomPoly parse_poly(std::string_view src, const std::vector<std::string>& names) {
  return evaluate(Parser(src, &names).parse(), names);
}

}  // namespace sharp
