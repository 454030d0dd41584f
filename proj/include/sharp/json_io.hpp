#pragma once

#include <json.hpp>

#include "sharp/polynomial.hpp"
#include "sharp/proj_graded.hpp"
#include "sharp/quad_exp.hpp"
#include "sharp/series.hpp"

namespace sharp {

using Json = nlohmann::ordered_json;

// Numbers are always rational strings ("-3/4", "1/2+1/3i"); a polynomial is
//   {"nvars": n, "terms": [{"exponents": [...], "mu": k, "coeff": "..."}, ...]}
// with terms in canonical print order. from_json functions throw
// std::invalid_argument on malformed input.

Json to_json(const GaussRational& z);
Json to_json(const HomPoly& p);
Json to_json(const GMatrix& m);
Json to_json(const PolySeries& s);
Json to_json(const ScalarSeries& s);
Json to_json(const MatrixSeries& s);
Json to_json(const LocalFraction& f);

GaussRational gauss_from_json(const Json& j);
HomPoly poly_from_json(const Json& j);
GMatrix matrix_from_json(const Json& j);
PolySeries poly_series_from_json(const Json& j);
ScalarSeries scalar_series_from_json(const Json& j);
MatrixSeries matrix_series_from_json(const Json& j);

}  // namespace sharp
