#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sharp/polynomial.hpp"

namespace sharp {

/// Expression tree produced by the parser.
struct Expr {
  enum class Kind { Literal, Variable, Mu, Neg, Add, Sub, Mul, Pow };

  Kind kind = Kind::Literal;
  GaussRational value;      // Literal
  std::string name;         // Variable
  int exponent = 0;         // Pow
  std::vector<Expr> args;   // Neg: 1, Add/Sub/Mul: 2, Pow: 1

  static Expr literal(GaussRational v);
  static Expr variable(std::string name);
  static Expr mu();
  static Expr neg(Expr e);
  static Expr binary(Kind k, Expr lhs, Expr rhs);
  static Expr power(Expr base, int exponent);

  friend bool operator==(const Expr& a, const Expr& b) = default;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' int)?          ('^' '-' int only after mu)
///   atom   := literal | ident | 'mu' | '(' expr ')'
///   literal:= digits ('/' digits)? 'i'? | 'i'
/// Whitespace is ignored between tokens; juxtaposition is an error.
/// Throws ParseError with a 1-based offset (input length + 1 at end of input).
Expr parse_expr(std::string_view src);

/// Fully parenthesised text; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);

/// Evaluates over the ring with the given variable names. Unknown names
/// raise ParseError pointing at nothing more specific than offset 1.
HomPoly evaluate(const Expr& e, const std::vector<std::string>& names);

/// parse_expr followed by evaluate; unknown identifiers are reported with
/// their source offset.
HomPoly parse_poly(std::string_view src, const std::vector<std::string>& names);

}  // namespace sharp
