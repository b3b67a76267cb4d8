#include "generators.hpp"

#include "tropcrit/chow/chow.hpp"
#include "tropcrit/io/cli.hpp"
#include "tropcrit/io/document.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tropcrit;
using tropcrit::testing::Gen;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = TROPCRIT_FIXTURES;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<fs::path> valid_fixtures() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kFixtures / "valid")) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

const ParseOptions kLenient{false};

}  // namespace

TEST_SUITE("documents") {
  TEST_CASE("minimal hyperplane document") {
    const std::string doc = R"({"format_version": "1", "kind": "cycle", "payload": {"n": 2, "dim": 1, "cells": [
      {"vertices": [["0","0","0"]], "rays": [["1","0","0"]], "weight": "1"},
      {"vertices": [["0","0","0"]], "rays": [["0","1","0"]], "weight": "1"},
      {"vertices": [["0","0","0"]], "rays": [["0","0","1"]], "weight": "1"}]}})";
    const TropicalCycle c = parse_cycle(doc);
    CHECK(equivalent(c, standard_hyperplane(2)));
    CHECK(kind_of(parse_document(doc)) == Kind::cycle);
  }

  TEST_CASE("non-reduced rationals are rejected with a fix-it") {
    try {
      parse_document(slurp(kFixtures / "invalid/nonreduced.json"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() > 0);
      CHECK(e.column() > 0);
      CHECK(std::string(e.what()).find("1/2") != std::string::npos);
    }
  }

  TEST_CASE("semantic errors carry the location of the offending value") {
    const std::string text = slurp(kFixtures / "invalid/bad_indicator.json");
    try {
      parse_measure(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      const auto at = locate(text, Json::json_pointer("/payload/atoms/0/indicator"));
      REQUIRE(at.has_value());
      const auto [line, column] = line_column(text, *at);
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      CHECK(std::string(e.what()).find("/payload/atoms/0/indicator") != std::string::npos);
    }
  }

  TEST_CASE("every invalid fixture is a parse error") {
    for (const auto& e : fs::directory_iterator(kFixtures / "invalid")) {
      CAPTURE(e.path().string());
      CHECK_THROWS_AS(parse_document(slurp(e.path())), ParseError);
    }
  }

  TEST_CASE("syntax errors report line and column") {
    try {
      parse_document("{\n  \"format_version\": \"1\",\n  \"kind\": \n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() == 1);
    }
  }

  TEST_CASE("line_column") {
    const std::string t = "ab\ncd\n\ne";
    CHECK(line_column(t, 0) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(line_column(t, 4) == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(line_column(t, 7) == std::pair<std::size_t, std::size_t>{4, 1});
  }

  TEST_CASE("locate follows nested pointers") {
    const std::string t = R"({"a": [1, {"b~c": "x", "d/e": [true]}], "f": 2})";
    CHECK(locate(t, Json::json_pointer("/f")) == t.find("2}"));
    CHECK(locate(t, Json::json_pointer("/a/1/b~0c")) == t.find("\"x\""));
    CHECK(locate(t, Json::json_pointer("/a/1/d~1e/0")) == t.find("true"));
    CHECK_FALSE(locate(t, Json::json_pointer("/a/5")).has_value());
  }

  TEST_CASE("round trips over the valid corpus") {
    for (const auto& p : valid_fixtures()) {
      CAPTURE(p.string());
      const Value v = parse_document(slurp(p), kLenient);
      const std::string once = emit(v);
      const Value w = parse_document(once, kLenient);
      CHECK(emit(w) == once);
      CHECK(w == v);
    }
  }

  TEST_CASE("random values round trip") {
    Gen g(81);
    for (int t = 0; t < 20; ++t) {
      const TropicalPolynomial f = g.full_polynomial(2, g.integer(1, 3));
      CHECK(parse_trop_poly(emit(f)) == f);
      const TropicalCycle c = corner_locus(f);
      CHECK(parse_cycle(emit(c)) == c);
      const MAMeasure m = g.measure(3, 1, 3);
      const MAMeasure back = parse_measure(emit(m));
      CHECK(emit(back) == emit(m));
      const PointConfiguration pc = g.configuration(2, 3);
      CHECK(emit(parse_point_config(emit(pc))) == emit(pc));
      const Polytope p = ma_polytope(m).polytope;
      CHECK(parse_polytope(emit(p)) == p);
    }
  }

  TEST_CASE("equal polytopes emit identical bytes") {
    const Polytope a = convex_hull(std::vector<RatVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, 3, true);
    const Polytope b = simplex(2, {2, 1, 0});
    CHECK(a == b);
    CHECK(emit(a) == emit(b));
    CHECK(emit(parse_polytope(slurp(kFixtures / "valid/simplex.json"))) == emit(b));
  }

  TEST_CASE("emitted text is canonical") {
    const std::string text = emit(standard_hyperplane(2));
    CHECK(text.back() == '\n');
    CHECK(text.find('\t') == std::string::npos);
    CHECK(text.find("\"format_version\": \"1\"") != std::string::npos);
    CHECK(Json::parse(text)["kind"] == "cycle");
  }

  TEST_CASE("vertex list") {
    CHECK(vertex_list(simplex(1, {0})) == "1/2\t-1/2\n");
    CHECK(vertex_list(simplex(1, {0, 1})) == "-1/2\t1/2\n1/2\t-1/2\n");
  }

  TEST_CASE("unbalanced cycles parse only when balance checks are off") {
    const std::string text = slurp(kFixtures / "valid/single_ray.json");
    CHECK_THROWS_AS(parse_cycle(text), ParseError);
    CHECK(parse_cycle(text, kLenient).cells().size() == 1);
  }
}

TEST_SUITE("command line") {
  TEST_CASE("exit codes over the fixture corpus") {
    struct Case {
      std::vector<std::string> args;
      int code;
    };
    const std::vector<Case> cases = {
        {{"balance", fixture("valid/hyperplane.json")}, 0},
        {{"balance", fixture("valid/single_ray.json")}, 1},
        {{"balance", fixture("valid/product_lines.json")}, 0},
        {{"intersect", fixture("valid/hyperplane.json"), fixture("valid/hyperplane_translated.json")}, 0},
        {{"convolve", fixture("valid/hyperplane.json"), fixture("valid/point.json"), "--sign", "+"}, 0},
        {{"chow", fixture("valid/point.json")}, 0},
        {{"chow", fixture("valid/hyperplane.json"), "--multi"}, 0},
        {{"ma-measure", fixture("valid/hyperplane_translated.json")}, 0},
        {{"ma-polytope", fixture("valid/p1_measure.json")}, 0},
        {{"critical", fixture("valid/standard_line_measure.json")}, 0},
        {{"critical", fixture("valid/translated_line_measure.json")}, 1},
        {{"critical", fixture("valid/p1_measure.json")}, 1},
        {{"chow-eval", fixture("valid/hyperplane.json"), "--tau", "1,0,-1"}, 0},
        {{"weight-polytope", fixture("valid/quadric.json")}, 0},
        {{"torus-minimal", fixture("valid/standard_min.json")}, 0},
        {{"torus-minimal", fixture("valid/shifted_linear_form.json")}, 1},
        {{"d0-check", fixture("valid/config_balanced.json")}, 0},
        {{"d0-check", fixture("valid/config_colinear.json")}, 1},
        {{"d0-check", fixture("valid/config_rational.json")}, 1},
        {{"balance", fixture("valid/standard_min.json")}, 2},
        {{"balance", fixture("missing.json")}, 2},
        {{"frobnicate"}, 2},
        {{"chow-eval", fixture("valid/hyperplane.json"), "--tau", "1,0"}, 2},
        {{"critical", fixture("valid/standard_line_measure.json"), "--threads", "0"}, 2},
    };
    for (const auto& c : cases) {
      const Run r = cli(c.args);
      CAPTURE(c.args[0]);
      CAPTURE(c.args.size() > 1 ? c.args[1] : std::string());
      CAPTURE(r.err);
      CHECK(r.code == c.code);
    }
    for (const auto& e : fs::directory_iterator(kFixtures / "invalid")) {
      const Run r = cli({"chow", e.path().string()});
      CAPTURE(e.path().string());
      CHECK(r.code == 2);
      CHECK(r.err.find(e.path().string() + ":") != std::string::npos);
    }
  }

  TEST_CASE("stdin input") {
    const Run r = cli({"balance", "-"}, slurp(kFixtures / "valid/hyperplane.json"));
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["payload"]["balanced"] == true);
  }

  TEST_CASE("critical report carries both routes and a certificate") {
    const Run yes = cli({"critical", fixture("valid/standard_line_measure.json")});
    const Json a = Json::parse(yes.out)["payload"];
    CHECK(a["critical"] == true);
    CHECK(a["routes"]["lp"] == true);
    CHECK(a["routes"]["rank"] == true);
    CHECK(a["routes"]["agree"] == true);
    CHECK(a["certificate"]["coefficients"] == Json::array({"1/3", "1/3", "1/3"}));
    CHECK(a["verified"] == true);
    CHECK_FALSE(a["caveat"].get<std::string>().empty());

    const Run no = cli({"critical", fixture("valid/translated_line_measure.json")});
    const Json b = Json::parse(no.out)["payload"];
    CHECK(b["critical"] == false);
    CHECK(b["certificate"]["lambda"] == Json::array({"-2", "1", "1"}));
    CHECK(b["certificate"]["derivative"] == "-2");
    CHECK(b["certificate"]["violated_subset"] == Json::array({0}));
  }

  TEST_CASE("command outputs") {
    const Run x = cli({"intersect", fixture("valid/hyperplane.json"), fixture("valid/hyperplane_translated.json")});
    const TropicalCycle p = parse_cycle(x.out);
    CHECK(equivalent(p, point_cycle(QuotientVector(RatVector{Rat(2) / 3, Rat(-1) / 3, Rat(-1) / 3}))));

    const Run g = cli({"chow-eval", fixture("valid/hyperplane.json"), "--tau", "1,0,-1"});
    CHECK(Json::parse(g.out)["payload"]["value"] == "-1/3");

    const Run v = cli({"ma-polytope", fixture("valid/p1_measure.json"), "--format", "tsv"});
    CHECK(v.out == "1\t-1\n2\t-2\n");

    const Run c = cli({"chow", fixture("valid/point.json")});
    const QuotientVector at(RatVector{Rat(1) / 3, Rat(-1) / 6, Rat(-1) / 6});
    CHECK(equivalent(parse_cycle(c.out), scale(translate_cycle(reflect_cycle(standard_hyperplane(2)), at), 3)));

    const Run w = cli({"weight-polytope", fixture("valid/standard_min.json")});
    CHECK(parse_polytope(w.out) == simplex(2, {0, 1, 2}));
  }

  TEST_CASE("output is independent of thread count and repeatable") {
    const std::vector<std::vector<std::string>> commands = {
        {"intersect", fixture("valid/hyperplane.json"), fixture("valid/hyperplane_translated.json")},
        {"chow", fixture("valid/point.json")},
        {"critical", fixture("valid/p1_measure.json")},
        {"d0-check", fixture("valid/config_rational.json")},
    };
    for (auto args : commands) {
      const std::string reference = cli(args).out;
      for (const char* t : {"1", "2", "4"}) {
        auto with = args;
        with.insert(with.end(), {"--threads", t});
        CHECK(cli(with).out == reference);
      }
    }
  }

  TEST_CASE("tsv flattening") {
    const Run r = cli({"chow-eval", fixture("valid/hyperplane.json"), "--tau", "0,0,0", "--format", "tsv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value\t0\n") != std::string::npos);
  }

  TEST_CASE("help") {
    const Run r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("d0-check") != std::string::npos);
  }
}
