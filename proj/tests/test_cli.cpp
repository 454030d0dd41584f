#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sharp/config.hpp"
#include "sharp/expr.hpp"
#include "sharp/json_io.hpp"
#include "support.hpp"

using namespace sharp;
using sharp::testing::Gen;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(SHARPCALC_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("sharpcalc_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::vector<std::string> kNames2 = default_var_names(2);

}  // namespace

TEST(Parser, SpecExamples) {
  const Expr e = parse_expr("z0^2*z1 + (1/2)*mu*z2");
  ASSERT_EQ(e.kind, Expr::Kind::Add);
  EXPECT_EQ(e.args[0].kind, Expr::Kind::Mul);
  EXPECT_EQ(e.args[1].kind, Expr::Kind::Mul);
  EXPECT_EQ(render(evaluate(e, default_var_names(3))), "z0^2*z1 + (1/2)*mu*z2");

  try {
    parse_expr("z0 +");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.offset(), 5u);
    EXPECT_NE(err.expected().find("variable"), std::string::npos);
  }

  EXPECT_EQ(render(parse_poly("mu^-1*z0", kNames2)), "mu^-1*z0");
}

TEST(Parser, Errors) {
  auto offset_of = [](const char* src) -> std::size_t {
    try {
      parse_expr(src);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 0;
  };
  EXPECT_EQ(offset_of("z0 z1"), 4u);        // juxtaposition
  EXPECT_EQ(offset_of("z0^-1"), 4u);        // negative exponent off mu
  EXPECT_EQ(offset_of("(z0 + z1"), 9u);     // unclosed
  EXPECT_EQ(offset_of("z0 * * z1"), 6u);
  EXPECT_EQ(offset_of("1/0"), 1u);
  EXPECT_EQ(offset_of(""), 1u);
  EXPECT_EQ(offset_of("z0)"), 3u);
  EXPECT_EQ(offset_of("2 z0"), 3u);
  EXPECT_EQ(offset_of("z0 # z1"), 4u);
  EXPECT_THROW(parse_poly("z7", kNames2), ParseError);
}

TEST(Parser, WhitespaceAndLiterals) {
  EXPECT_EQ(parse_poly("  z0*  z1+ 3 ", kNames2), parse_poly("z0*z1+3", kNames2));
  EXPECT_EQ(render(parse_poly("2i*z0 - i + 1/3i", kNames2)), "2i*z0 - (2/3i)");
  EXPECT_EQ(render(parse_poly("(z0 + z1)^2", kNames2)), "z0^2 + 2*z0*z1 + z1^2");
  EXPECT_EQ(render(parse_poly("-mu^2*mu^-2", kNames2)), "-1");
  EXPECT_TRUE(parse_poly("+z0 - z0", kNames2).is_zero());
  EXPECT_THROW(parse_expr("z0 - -z0"), ParseError);  // unary sign only leads an expression
}

TEST(Parser, ExprTextRoundTrip) {
  for (const char* src : {"z0^2*z1 + (1/2)*mu*z2", "-(z0 - z1)^3*mu^-2", "i*z0 + 3/4i*(z1 + 2)", "((z0))"}) {
    const Expr e = parse_expr(src);
    EXPECT_EQ(parse_expr(to_string(e)), e) << src << " -> " << to_string(e);
  }
}

TEST(Parser, RenderRoundTripOnRandomPolynomials) {
  Gen gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const HomPoly p = gen.poly(n, 4, 5);
    ASSERT_EQ(parse_poly(render(p), default_var_names(n)), p) << render(p);
  }
}

TEST(Parser, TwistorNames) {
  const auto names = std::vector<std::string>{"x11", "x12", "x21", "x22", "pi1", "pi2"};
  const HomPoly p = parse_poly("x11*pi1 + x21*pi2", names);
  EXPECT_EQ(render(p, names), "x11*pi1 + x21*pi2");
}

TEST(Json, PolynomialFixpoint) {
  Gen gen(2);
  for (int trial = 0; trial < 50; ++trial) {
    const HomPoly p = gen.poly(3, 4, 5);
    const Json j = to_json(p);
    EXPECT_EQ(poly_from_json(Json::parse(j.dump())), p);
    EXPECT_EQ(to_json(poly_from_json(j)), j);
  }
}

TEST(Json, MatrixAndSeriesFixpoint) {
  Gen gen(3);
  const GMatrix m = gen.matrix(3, true);
  EXPECT_EQ(matrix_from_json(to_json(m)), m);
  const MatrixSeries ms = tanh(MatrixSeries::linear(m, 4));
  EXPECT_EQ(matrix_series_from_json(to_json(ms)), ms);
  const ScalarSeries ss = exp(ScalarSeries::linear(GaussRational(ratio(1, 3)), 5));
  EXPECT_EQ(scalar_series_from_json(to_json(ss)), ss);
  const PolySeries ps{gen.poly(2, 2), gen.poly(2, 3)};
  EXPECT_EQ(poly_series_from_json(to_json(ps)), ps);
  EXPECT_EQ(to_json(GaussRational(ratio(1, 2), ratio(1, 3))), "1/2+1/3i");
  EXPECT_THROW(poly_from_json(Json{{"nvars", 2}}), std::invalid_argument);
  EXPECT_THROW(gauss_from_json(Json(0.5)), std::invalid_argument);
}

TEST(Config, JsonAndTomlAgree) {
  const std::string json_path = write_temp(
      "cfg.json", R"({"nvars": 2, "lambda": [["0", "1"], ["-1", "0"]], "quad_a": [["1", "1/2"], ["1/2", 0]],
                     "order": 3, "output": "json"})");
  const std::string toml_path = write_temp("cfg.toml",
                                           "nvars = 2\nlambda = [[\"0\", \"1\"], [\"-1\", \"0\"]]\n"
                                           "quad_a = [[\"1\", \"1/2\"], [\"1/2\", 0]]\norder = 3\noutput = \"json\"\n");
  const RunConfig a = load_config(json_path);
  const RunConfig b = load_config(toml_path);
  EXPECT_EQ(a.nvars, 2u);
  EXPECT_EQ(a.lambda.matrix(), b.lambda.matrix());
  ASSERT_TRUE(a.quad_a && b.quad_a);
  EXPECT_EQ(a.quad_a->matrix(), b.quad_a->matrix());
  EXPECT_EQ(a.order, 3);
  EXPECT_EQ(b.output, OutputMode::Json);
}

TEST(Config, Validation) {
  EXPECT_THROW(config_from_json(Json::parse(R"({"lambda": [["0","1"],["1","0"]]})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"nvars": 3, "lambda": [["0","1"],["-1","0"]]})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"nvars": 2, "quad_a": [["0","1"],["2","0"]]})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"twistor_d": [["0"]]})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"lambda": [["0","x"],["-x","0"]]})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"colour": 1})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"order": -1})")), ConfigError);
  EXPECT_THROW(toml_to_json("lambda = [[0.5]]"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/cfg.json"), ConfigError);
  const RunConfig odd = config_from_json(Json::parse(R"({"nvars": 3})"));
  EXPECT_TRUE(is_zero_matrix(odd.lambda.matrix()));
}

TEST(Cli, GoldenOutputs) {
  const std::string cfg = write_temp("golden.json", R"({"nvars": 2, "lambda": [["0","1"],["-1","0"]]})");
  EXPECT_EQ(run("h0 1 3").out, "4\n");
  EXPECT_EQ(run("h0 3 -1").out, "0\n");
  const RunResult star = run("--config " + cfg + " star \"z0\" \"z1\"");
  EXPECT_EQ(star.code, 0);
  EXPECT_EQ(star.out, "z0*z1 + (1/2)*mu\n");
  EXPECT_EQ(run("--config " + cfg + " commutator z0 z1").out, "mu\n");
  EXPECT_EQ(run("localize \"z0*z1\" \"z0^2\" 1").out, "(z1)/(z0)\n");
}

TEST(Cli, JsonOutputReingests) {
  const std::string cfg = write_temp("json_out.json", R"({"nvars": 2, "lambda": [["0","1"],["-1","0"]]})");
  const RunResult r = run("--json --config " + cfg + " star \"z0^2\" \"z1^2 + mu^-1*z0\"");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  const HomPoly p = poly_from_json(j["result"]);
  EXPECT_EQ(render(p), j["text"].get<std::string>());
  EXPECT_EQ(to_json(p), j["result"]);
}

TEST(Cli, ExitCodes) {
  const std::string cfg = write_temp("codes.json", R"({"nvars": 2, "lambda": [["0","1"],["-1","0"]]})");
  const std::string bad = write_temp("bad.json", R"({"nvars": 2, "lambda": [["0","1"],["1","0"]]})");
  const std::string singular =
      write_temp("sing.json", R"({"nvars": 2, "lambda": [["0","0"],["0","0"]], "quad_a": [["1","0"],["0","1"]]})");
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("star z0").code, 1);
  const RunResult parse = run("star \"z0 +\" z1", true);
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.out.find("error[parse]"), std::string::npos);
  EXPECT_NE(parse.out.find("offset 5"), std::string::npos);
  EXPECT_EQ(run("star z9 z0").code, 2);
  const RunResult config = run("--config " + bad + " star z0 z1", true);
  EXPECT_EQ(config.code, 3);
  EXPECT_NE(config.out.find("error[config]"), std::string::npos);
  EXPECT_EQ(run("--config /nonexistent.json star z0 z1").code, 3);
  EXPECT_EQ(run("--config " + cfg + " star-exp").code, 3);  // no quad_a
  EXPECT_EQ(run("--config " + singular + " star-exp --order 2").code, 0);
  const RunResult pre = run("--config " + singular + " star-exp --order 2 --closed-form", true);
  EXPECT_EQ(pre.code, 4);
  EXPECT_NE(pre.out.find("error[precondition]"), std::string::npos);
  EXPECT_EQ(run("localize z1 z0 2").code, 4);
  EXPECT_EQ(run("twistor-check").code, 3);
}

TEST(Cli, StarExpAndChecks) {
  const std::string cfg = write_temp(
      "exp.json", R"({"nvars": 2, "lambda": [["0","1"],["-1","0"]], "quad_a": [["0","1/2"],["1/2","0"]],
                     "twistor_d": [["0","1","2","3"],["-1","0","1/2","i"],["-2","-1/2","0","5"],["-3","-i","-5","0"]]})");
  const RunResult e = run("--config " + cfg + " star-exp --order 4");
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("t^1: mu^-1*z0*z1"), std::string::npos);
  EXPECT_NE(e.out.find("oracle: verified"), std::string::npos);
  const RunResult ej = run("--json --config " + cfg + " star-exp --order 3");
  const Json j = Json::parse(ej.out);
  EXPECT_EQ(j["closed_form"]["oracle"], "verified");
  EXPECT_EQ(poly_series_from_json(j["series"]).size(), 4u);

  const RunResult c = run("--config " + cfg + " cayley-check --order 6");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.find("fail"), std::string::npos);
  EXPECT_NE(c.out.find("item 5 flow: pass"), std::string::npos);

  const RunResult t = run("--config " + cfg + " twistor-check");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("[z1', z2'] = mu*pi1^2 + (5/2)*mu*pi1*pi2 + 5*mu*pi2^2: pass"), std::string::npos);

  const std::string tw = write_temp("tw.json", R"({"nvars": 6, "lambda": [["0","1","0","0","0","0"],["-1","0","0","0","0","0"],
      ["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"]]})");
  EXPECT_EQ(run("--config " + tw + " --vars x11,x12,x21,x22,pi1,pi2 commutator x11*pi1 x12*pi1").out, "mu*pi1^2\n");
  EXPECT_EQ(run("--config " + tw + " --vars a,b star z0 z1").code, 3);
}
