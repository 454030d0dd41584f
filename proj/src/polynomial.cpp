#include "sharp/polynomial.hpp"

#include <functional>

namespace sharp {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(nvars);
  std::function<void(std::size_t, int)> fill = [&](std::size_t slot, int remaining) {
    if (slot + 1 == nvars) {
      current[slot] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[slot] = e;
      fill(slot + 1, remaining - e);
    }
  };
  fill(0, d);
  return out;
}

HomPoly to_hom_poly(const RatPoly& p) {
  return p.map_coefficients([](const Rational& r) { return MuScalar(GaussRational(r)); });
}

std::vector<std::string> default_var_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

namespace {

std::string magnitude_string(const Rational& r, bool imaginary) {
  const bool integral = r.get_den() == 1;
  if (!imaginary) return integral ? to_string(r) : "(" + to_string(r) + ")";
  if (r == 1) return "i";
  return integral ? to_string(r) + "i" : "(" + to_string(r) + "i)";
}

}  // namespace

std::string render(const HomPoly& p, const std::vector<std::string>& names) {
  if (names.size() != p.nvars()) throw DimensionError("render: wrong number of variable names");
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, mu_coeff] : p.terms()) {
    for (auto it = mu_coeff.terms().rbegin(); it != mu_coeff.terms().rend(); ++it) {
      const int mu_power = it->first;
      const GaussRational& c = it->second;

      std::vector<std::string> factors;
      for (std::size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        factors.push_back(mono[v] == 1 ? names[v] : names[v] + "^" + std::to_string(mono[v]));
      }
      if (mu_power != 0) factors.insert(factors.begin(), mu_power == 1 ? "mu" : "mu^" + std::to_string(mu_power));

      bool negative = false;
      std::string coeff;
      if (c.is_real() || sgn(c.real()) == 0) {
        const bool imaginary = !c.is_real();
        const Rational& value = imaginary ? c.imag() : c.real();
        negative = sgn(value) < 0;
        const Rational mag = abs(value);
        if (imaginary || mag != 1 || factors.empty()) coeff = magnitude_string(mag, imaginary);
      } else {
        coeff = "(" + to_string(c) + ")";
      }
      if (!coeff.empty()) factors.insert(factors.begin(), coeff);

      std::string term;
      for (std::size_t f = 0; f < factors.size(); ++f) term += (f ? "*" : "") + factors[f];

      if (out.empty())
        out = (negative ? "-" : "") + term;
      else
        out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string render(const HomPoly& p) { return render(p, default_var_names(p.nvars())); }

std::string render(const RatPoly& p) { return render(to_hom_poly(p)); }

}  // namespace sharp
