#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace sgb;
using sgbtest::make_ctx;
using sgbtest::P;

TEST_CASE("canonical printing") {
  auto ctx = make_ctx(3, 7);
  CHECK(to_string(*ctx, P(*ctx, "x^2 + 3*y")) == "x^2 + 3*y");
  CHECK(to_string(*ctx, P(*ctx, "x - x")) == "0");
  CHECK(to_string(*ctx, P(*ctx, "y*x")) == "x*y");
  CHECK(to_string(*ctx, P(*ctx, "x - y")) == "x + 6*y");
  CHECK(to_string(*ctx, P(*ctx, "1")) == "1");
  CHECK(to_string(*ctx, P(*ctx, "2*x*x*x")) == "2*x^3");
}

TEST_CASE("parse handles parentheses and unary minus") {
  auto ctx = make_ctx(2, 65521);
  CHECK(P(*ctx, "(x + y)^2") == P(*ctx, "x^2 + 2*x*y + y^2"));
  CHECK(P(*ctx, "-x + y") == poly_sub(*ctx, P(*ctx, "y"), P(*ctx, "x")));
  CHECK(P(*ctx, "3*(x - 1)*(x + 1)") == P(*ctx, "3*x^2 - 3"));
  CHECK(P(*ctx, "65522") == P(*ctx, "1"));
}

TEST_CASE("parse errors carry position") {
  auto ctx = make_ctx(2);
  CHECK_THROWS_AS(P(*ctx, "x + q"), ParseError);
  CHECK_THROWS_AS(P(*ctx, "x ^ y"), ParseError);
  CHECK_THROWS_AS(P(*ctx, "3 x"), ParseError);  // implicit multiplication
  CHECK_THROWS_AS(P(*ctx, "x + "), ParseError);
  CHECK_THROWS_AS(P(*ctx, "(x"), ParseError);
  try {
    P(*ctx, "x + q");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 5);
  }
}

TEST_CASE("system file parsing") {
  auto sys = parse_system("# a comment\np 7\nvars x, y\nx^2 + 3*y\nx - x\n");
  CHECK(sys.ctx->prime() == 7);
  CHECK(sys.ctx->vars() == std::vector<std::string>{"x", "y"});
  REQUIRE(sys.polys.size() == 2);
  CHECK(to_string(*sys.ctx, sys.polys[0]) == "x^2 + 3*y");
  CHECK(sys.polys[1].is_zero());
}

TEST_CASE("system file accepts CRLF") {
  auto sys = parse_system("p 7\r\nvars x\r\nx + 1\r\n");
  CHECK(sys.polys.size() == 1);
}

TEST_CASE("system file rejects bad headers") {
  CHECK_THROWS_AS(parse_system("p 4\nvars x\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_system("p 2\nvars x\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars x\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_system("p 7\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_system("p 7\nvars x, x\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_system(""), ParseError);
}

TEST_CASE("print then parse round-trips") {
  auto ctx = make_ctx(3);
  SplitMix64 rng(321);
  std::vector<Polynomial> polys;
  for (int i = 0; i < 20; ++i) polys.push_back(sgbtest::random_quadric(*ctx, rng));
  std::string text = write_system(*ctx, polys, "round trip");
  auto sys = parse_system(text);
  REQUIRE(sys.polys.size() == polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    CHECK(to_string(*sys.ctx, sys.polys[i]) == to_string(*ctx, polys[i]));
}
