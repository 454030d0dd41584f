#include "sharp/json_io.hpp"

#include <stdexcept>

namespace sharp {

Json to_json(const GaussRational& z) { return to_string(z); }

Json to_json(const HomPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms())
    for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it)
      terms.push_back({{"exponents", mono.exponents()}, {"mu", it->first}, {"coeff", to_string(it->second)}});
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Json to_json(const GMatrix& m) { return matrix_strings(m); }

Json to_json(const PolySeries& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

Json to_json(const ScalarSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const MatrixSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const LocalFraction& f) {
  return {{"numerator", to_json(to_hom_poly(f.numerator()))},
          {"denominator", to_json(to_hom_poly(f.denominator()))},
          {"base", to_json(to_hom_poly(f.base()))},
          {"power", f.power()}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON value: " + what); }

}  // namespace

GaussRational gauss_from_json(const Json& j) {
  if (j.is_string()) return parse_gauss_rational(j.get<std::string>());
  if (j.is_number_integer()) return GaussRational(j.get<long>());
  bad("expected a rational string");
}

HomPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms")) bad("polynomial needs nvars and terms");
  if (!j["nvars"].is_number_unsigned()) bad("nvars must be a non-negative integer");
  const auto n = j["nvars"].get<std::size_t>();
  HomPoly p(n);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff")) bad("term needs exponents and coeff");
    const auto exps = t["exponents"].get<std::vector<int>>();
    if (exps.size() != n) bad("exponent vector has the wrong length");
    for (int e : exps)
      if (e < 0) bad("negative exponent");
    const int mu = t.value("mu", 0);
    p.add_term(Monomial(exps), MuScalar::term(gauss_from_json(t["coeff"]), mu));
  }
  return p;
}

GMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) bad("matrix row must be an array");
    std::vector<std::string> r;
    for (const auto& cell : row) r.push_back(to_string(gauss_from_json(cell)));
    rows.push_back(std::move(r));
  }
  return parse_matrix(rows);
}

PolySeries poly_series_from_json(const Json& j) {
  if (!j.is_array()) bad("series must be an array");
  PolySeries s;
  for (const auto& p : j) s.push_back(poly_from_json(p));
  return s;
}

ScalarSeries scalar_series_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("series must be a non-empty array");
  std::vector<GaussRational> c;
  for (const auto& v : j) c.push_back(gauss_from_json(v));
  return ScalarSeries(std::move(c));
}

MatrixSeries matrix_series_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("series must be a non-empty array");
  std::vector<GMatrix> c;
  for (const auto& v : j) c.push_back(matrix_from_json(v));
  return MatrixSeries(std::move(c));
}

}  // namespace sharp
