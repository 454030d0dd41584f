#pragma once

#include <optional>
#include <string>

#include "sharp/json_io.hpp"
#include "sharp/quad_exp.hpp"
#include "sharp/star_product.hpp"

namespace sharp {

enum class OutputMode { Text, Json };

struct RunConfig {
  std::size_t nvars = 2;
  PoissonMatrix lambda = PoissonMatrix(standard_symplectic(2));
  std::optional<SymMatrix> quad_a;
  std::optional<SymMatrix> quad_b;
  std::optional<GMatrix> twistor_d;
  int order = 4;
  OutputMode output = OutputMode::Text;
};

/// Fields: nvars, lambda, quad_a, quad_b, twistor_d (matrices of rational
/// strings), order, output ("text" | "json"). Missing lambda defaults to the
/// standard symplectic matrix when nvars is even and to zero otherwise.
/// Throws ConfigError on any malformed or inconsistent field.
RunConfig config_from_json(const Json& j);

/// Chooses the parser by extension: .json or .toml.
RunConfig load_config(const std::string& path);

/// TOML text to the same JSON shape config_from_json accepts.
Json toml_to_json(const std::string& text);

}  // namespace sharp
