#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mbfun/cli.hpp"
#include "mbfun/error.hpp"
#include "mbfun/parser.hpp"
#include "test_support.hpp"

using namespace mbfun;
using nlohmann::json;
using testing_support::q;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string chart_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

const char* kCusp = R"({"charts":[{"label":"cusp","a":[3,0],"b":[0,2],"kappa":[0,0]}]})";

}  // namespace

TEST_CASE("parse_poly examples") {
  const auto p = parse_poly("x^2 + y^2");
  CHECK(p.variables() == std::vector<std::string>{"x", "y"});
  CHECK(p.terms().size() == 2);
  CHECK(p.coefficient(Exponent{2, 0}) == 1);
  CHECK(p.coefficient(Exponent{0, 2}) == 1);

  const auto r = parse_poly("3/2*x*y");
  CHECK(r.terms().size() == 1);
  CHECK(r.coefficient(Exponent{1, 1}) == q("3/2"));

  try {
    parse_poly("x^(-1)");
    FAIL("accepted a negative exponent");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("parse_poly grammar and errors") {
  CHECK(parse_poly("(x+1)^2") == parse_poly("x^2 + 2*x + 1"));
  CHECK(parse_poly("-x - -y") == parse_poly("y - x"));
  CHECK(parse_poly("x1*x2/4") == parse_poly("1/4*x2*x1"));
  CHECK(parse_poly("2^3*x") == parse_poly("8*x"));
  CHECK(parse_poly("x - x").is_zero());
  CHECK_THROWS_AS(parse_poly("x/y"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x/0"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x^2^3"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x^y"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x +"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(x"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("X"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x^99999"), SyntaxError);
  try {
    parse_poly("x +\n  y $");
    FAIL("accepted '$'");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("parse, print, parse is the identity") {
  std::mt19937 rng(testing_support::seed());
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5), ex(0, 4), nterms(1, 5);
  const std::vector<std::string> vars{"u", "x", "y2"};
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly p(vars);
    for (int t = nterms(rng); t > 0; --t) {
      Rational c(coef(rng), den(rng));
      c.canonicalize();
      p.add_term(Exponent{static_cast<std::uint32_t>(ex(rng)), static_cast<std::uint32_t>(ex(rng)),
                          static_cast<std::uint32_t>(ex(rng))},
                 c);
    }
    if (p.is_zero()) continue;
    const auto once = parse_poly(p.to_string());
    CHECK(once.to_string() == p.to_string());
    CHECK(parse_poly(once.to_string()) == once);
  }
}

TEST_CASE("cli examples") {
  const auto classic = run({"bf", "classic", "x^2", "--json"});
  REQUIRE(classic.code == 0);
  const auto j = json::parse(classic.out);
  CHECK(j["status"] == "CERTIFIED");
  CHECK(j["schema_version"] == "1");
  CHECK(j["result"]["b"]["roots"][0]["root"] == "-1/1");
  CHECK(j["result"]["b"]["roots"][1]["root"] == "-1/2");

  const auto mero = run({"--json", "bf", "mero", "x", "y", "--m", "0"});
  REQUIRE(mero.code == 0);
  const auto jm = json::parse(mero.out);
  CHECK(jm["result"]["b"]["polynomial"] == "s + 1");
  CHECK(jm["status"] == "CERTIFIED");

  const auto roots = run({"--json", "nc", "roots", "--charts", chart_file("mbfun_cusp.json", kCusp), "--m", "0"});
  REQUIRE(roots.code == 0);
  CHECK(json::parse(roots.out)["result"]["roots"] == json({"-1/1", "-2/3", "-1/3"}));
}

TEST_CASE("cli subcommands") {
  const auto charts = chart_file("mbfun_cusp2.json", kCusp);
  const auto line = chart_file("mbfun_line.json", R"({"charts":[{"label":"l","a":[2],"b":[0]}]})");

  auto j = json::parse(run({"--json", "nc", "bound", "--charts", charts, "--m", "0"}).out);
  CHECK(j["result"]["residues"] == json({"-1/1", "-2/3", "-1/3"}));
  j = json::parse(run({"--json", "nc", "eigen", "--charts", charts, "--m", "0"}).out);
  CHECK(j["result"]["classes"] == json({"0/1", "1/3", "2/3"}));

  j = json::parse(run({"--json", "jump", "nc", "--charts", line, "--upper", "1"}).out);
  CHECK(j["result"]["charts"][0]["jumps"] == json({"1/2", "1/1"}));
  CHECK(j["result"]["charts"][0]["lct"] == "1/2");

  j = json::parse(run({"--json", "bf", "simple", "x", "y", "--m", "0"}).out);
  CHECK(j["result"]["b"]["polynomial"] == "s + 1");
  j = json::parse(run({"--json", "bf", "reduced", "x^2+y^2", "x", "--weights", "1,1"}).out);
  CHECK(j["result"]["b"]["polynomial"] == "s + 1");
  CHECK(j["inputs"]["d1"] == 2);
  CHECK(j["inputs"]["d2"] == 1);
  j = json::parse(run({"--json", "bf", "sabbah-line", "x", "y", "--m", "0"}).out);
  CHECK(j["status"] == "CERTIFIED");

  j = json::parse(run({"--json", "check", "lemma4", "x^2", "y", "--m", "1", "--m-prime", "0"}).out);
  CHECK(j["result"]["holds"] == true);
  j = json::parse(run({"--json", "check", "thm41", "x^3", "y^2", "--m", "0", "--charts", charts}).out);
  CHECK(j["result"]["holds"] == true);
  CHECK(j["status"] == "CERTIFIED");
  j = json::parse(run({"--json", "check", "corjump", "x^2", "1", "--charts", line, "--upper", "1"}).out);
  CHECK(j["result"]["holds"] == true);
}

TEST_CASE("cli echoed inputs re-parse to the same polynomials") {
  const auto r = run({"--json", "bf", "mero", "3*x^2 + 2*x - (x)", "(y+1)", "--m", "0"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(parse_poly(j["inputs"]["F"].get<std::string>()) == parse_poly("3*x^2 + x"));
  CHECK(parse_poly(j["inputs"]["G"].get<std::string>()) == parse_poly("y + 1"));
}

TEST_CASE("cli exit codes") {
  auto r = run({"bf", "classic", "x^(-1)"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("column 4") != std::string::npos);

  r = run({"bf", "mero", "x", "y"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("--m") != std::string::npos);

  r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(run({"bf", "mero", "x", "y", "--m", "0", "--certify", "3"}).code == 2);
  CHECK(run({"nc", "roots", "--charts", "/nonexistent/charts.json", "--m", "0"}).code == 2);
  CHECK(run({"bf", "reduced", "x^2+y^2", "x", "--weights", "1"}).code == 2);

  // Non-coprime input is a mathematical failure.
  r = run({"bf", "mero", "x*y", "x", "--m", "0"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  r = run({"bf", "reduced", "x^2+y", "x", "--weights", "1,1"});
  CHECK(r.code == 1);

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"--json", "bf", "mero", "x^3", "y^2", "--m", "0"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).contains("timing") == false);
  auto timed = args;
  timed.insert(timed.begin(), "--timing");
  CHECK(json::parse(run(timed).out).contains("timing"));
}
