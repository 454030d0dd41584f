#include "sharp/config.hpp"

#include <fstream>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

namespace sharp {

namespace {

Json node_to_json(const toml::node& node) {
  if (const auto* t = node.as_table()) {
    Json out = Json::object();
    for (const auto& [key, value] : *t) out[std::string(key.str())] = node_to_json(value);
    return out;
  }
  if (const auto* a = node.as_array()) {
    Json out = Json::array();
    for (const auto& value : *a) out.push_back(node_to_json(value));
    return out;
  }
  if (const auto* s = node.as_string()) return s->get();
  if (const auto* i = node.as_integer()) return i->get();
  if (const auto* b = node.as_boolean()) return b->get();
  if (node.is_floating_point()) throw ConfigError("floating-point values are not accepted; use rational strings");
  throw ConfigError("unsupported TOML value type");
}

GMatrix read_matrix(const Json& j, const char* field, std::size_t n) {
  GMatrix m;
  try {
    m = matrix_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(field) + ": " + e.what());
  }
  if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n)
    throw ConfigError(std::string(field) + " must be " + std::to_string(n) + "x" + std::to_string(n));
  return m;
}

}  // namespace

Json toml_to_json(const std::string& text) {
  try {
    return node_to_json(toml::parse(text));
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string("TOML: ") + std::string(e.description()));
  }
}

RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "nvars" && key != "lambda" && key != "quad_a" && key != "quad_b" && key != "twistor_d" &&
        key != "order" && key != "output")
      throw ConfigError("unknown config field '" + key + "'");

  RunConfig cfg;
  if (j.contains("nvars")) {
    if (!j["nvars"].is_number_integer() || j["nvars"].get<long>() < 1)
      throw ConfigError("nvars must be a positive integer");
    cfg.nvars = j["nvars"].get<std::size_t>();
  } else if (j.contains("lambda") && j["lambda"].is_array()) {
    cfg.nvars = j["lambda"].size();
  }
  const auto n = static_cast<Eigen::Index>(cfg.nvars);

  if (j.contains("lambda")) {
    GMatrix l = read_matrix(j["lambda"], "lambda", cfg.nvars);
    if (!is_skew_symmetric(l)) throw ConfigError("lambda must be skew-symmetric");
    cfg.lambda = PoissonMatrix(std::move(l));
  } else {
    cfg.lambda = PoissonMatrix(n % 2 == 0 ? standard_symplectic(n) : GMatrix(GMatrix::Zero(n, n)));
  }

  for (const char* field : {"quad_a", "quad_b"}) {
    if (!j.contains(field)) continue;
    GMatrix m = read_matrix(j[field], field, cfg.nvars);
    if (!is_symmetric(m)) throw ConfigError(std::string(field) + " must be symmetric");
    (std::string(field) == "quad_a" ? cfg.quad_a : cfg.quad_b) = SymMatrix(std::move(m));
  }

  if (j.contains("twistor_d")) {
    GMatrix d = read_matrix(j["twistor_d"], "twistor_d", 4);
    if (!is_skew_symmetric(d)) throw ConfigError("twistor_d must be skew-symmetric");
    cfg.twistor_d = std::move(d);
  }

  if (j.contains("order")) {
    if (!j["order"].is_number_integer() || j["order"].get<long>() < 0 || j["order"].get<long>() > 64)
      throw ConfigError("order must be an integer in [0, 64]");
    cfg.order = j["order"].get<int>();
  }

  if (j.contains("output")) {
    const std::string mode = j["output"].is_string() ? j["output"].get<std::string>() : "";
    if (mode == "text")
      cfg.output = OutputMode::Text;
    else if (mode == "json")
      cfg.output = OutputMode::Json;
    else
      throw ConfigError("output must be \"text\" or \"json\"");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".toml")) return config_from_json(toml_to_json(text));
  if (ends_with(".json")) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("JSON: ") + e.what());
    }
    return config_from_json(j);
  }
  throw ConfigError("config file must end in .json or .toml");
}

}  // namespace sharp
