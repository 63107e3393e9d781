#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace sgb;
using sgbtest::make_ctx;

TEST_CASE("context rejects bad characteristics") {
  CHECK_THROWS_AS(Context(4, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(Context(1, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(Context(2, {"x"}), std::invalid_argument);
  CHECK_NOTHROW(Context(65521, {"x"}));
  CHECK_NOTHROW(Context(7, {"x", "y"}));
}

TEST_CASE("field arithmetic") {
  auto ctx = make_ctx(1, 7);
  CHECK(ctx->add(3, 5) == 1);
  CHECK(ctx->sub(3, 5) == 5);
  CHECK(ctx->neg(0) == 0);
  CHECK(ctx->neg(2) == 5);
  CHECK(ctx->mul(3, 5) == 1);
  for (Scalar a = 1; a < 7; ++a) CHECK(ctx->mul(a, ctx->inv(a)) == 1);
  CHECK_THROWS_AS(ctx->inv(0), std::domain_error);
}

TEST_CASE("op counter sees every field operation") {
  auto ctx = make_ctx(1, 65521);
  OpCounter before = ctx->ops();
  ctx->mul(2, 3);
  ctx->add(2, 3);
  ctx->sub(2, 3);
  ctx->inv(5);
  const OpCounter& after = ctx->ops();
  CHECK(after.mul_count == before.mul_count + 1);
  CHECK(after.addsub_count == before.addsub_count + 2);
  CHECK(after.inv_count == before.inv_count + 1);
}

TEST_CASE("monomial multiplication and degree") {
  auto ctx = make_ctx(2);  // x, y
  Monomial x2y = ctx->make_monomial(std::vector<Exponent>{2, 1});
  Monomial y3 = ctx->make_monomial(std::vector<Exponent>{0, 3});
  Monomial prod = ctx->monomial_mul(x2y, y3);
  CHECK(prod == ctx->make_monomial(std::vector<Exponent>{2, 4}));
  CHECK(ctx->degree(prod) == 6);

  CHECK(ctx->monomial_mul(ctx->unit(), x2y) == x2y);

  Monomial x = ctx->variable(0);
  CHECK(ctx->monomial_mul(x, x) == ctx->make_monomial(std::vector<Exponent>{2, 0}));
  CHECK(ctx->degree(ctx->monomial_mul(x, x)) == 2);
}

TEST_CASE("monomial exponent overflow is a hard error") {
  auto ctx = make_ctx(1);
  Monomial big = ctx->make_monomial(std::vector<Exponent>{65535});
  Monomial x = ctx->variable(0);
  CHECK_THROWS_AS(ctx->monomial_mul(big, x), std::overflow_error);
}

TEST_CASE("divisibility, division, lcm") {
  auto ctx = make_ctx(3);
  Monomial xy = ctx->make_monomial(std::vector<Exponent>{1, 1, 0});
  Monomial x2y3 = ctx->make_monomial(std::vector<Exponent>{2, 3, 0});
  Monomial x2y = ctx->make_monomial(std::vector<Exponent>{2, 1, 0});
  Monomial yz = ctx->make_monomial(std::vector<Exponent>{0, 1, 1});

  CHECK(ctx->monomial_divides(xy, x2y3));
  CHECK_FALSE(ctx->monomial_divides(x2y3, xy));
  CHECK(ctx->monomial_lcm(x2y, yz) ==
        ctx->make_monomial(std::vector<Exponent>{2, 1, 1}));
  CHECK(ctx->monomial_div(x2y3, xy) ==
        ctx->make_monomial(std::vector<Exponent>{1, 2, 0}));
  CHECK_THROWS_AS(ctx->monomial_div(xy, yz), std::invalid_argument);
}

TEST_CASE("degrevlex order") {
  auto ctx = make_ctx(3);
  Monomial x2 = ctx->make_monomial(std::vector<Exponent>{2, 0, 0});
  Monomial xy = ctx->make_monomial(std::vector<Exponent>{1, 1, 0});
  Monomial xz = ctx->make_monomial(std::vector<Exponent>{1, 0, 1});
  Monomial yz = ctx->make_monomial(std::vector<Exponent>{0, 1, 1});

  CHECK(ctx->compare(x2, xy) == Cmp::GT);
  CHECK(ctx->compare(xy, xz) == Cmp::GT);
  CHECK(ctx->compare(xz, yz) == Cmp::GT);
  CHECK(ctx->compare(xy, xy) == Cmp::EQ);
  CHECK(ctx->compare(ctx->unit(), xy) == Cmp::LT);
}

TEST_CASE("lex order") {
  auto ctx = make_ctx(2, 65521, MonomialOrder::lex());
  Monomial x = ctx->variable(0);
  Monomial y5 = ctx->make_monomial(std::vector<Exponent>{0, 5});
  CHECK(ctx->compare(x, y5) == Cmp::GT);
  CHECK(ctx->compare(y5, y5) == Cmp::EQ);
}

TEST_CASE("block order eliminates trailing variables") {
  // vars x, y, t with t dominant
  Context ctx(65521, {"x", "y", "t"}, MonomialOrder::block(1));
  Monomial t = ctx.variable(2);
  Monomial x9 = ctx.make_monomial(std::vector<Exponent>{9, 0, 0});
  CHECK(ctx.compare(t, x9) == Cmp::GT);  // any t beats any t-free monomial
  Monomial xt = ctx.make_monomial(std::vector<Exponent>{1, 0, 1});
  CHECK(ctx.compare(xt, t) == Cmp::GT);
  // within the t-free block the order is degrevlex
  Monomial x2 = ctx.make_monomial(std::vector<Exponent>{2, 0, 0});
  Monomial xy = ctx.make_monomial(std::vector<Exponent>{1, 1, 0});
  CHECK(ctx.compare(x2, xy) == Cmp::GT);
}

TEST_CASE("orders are total and multiplicative on random monomials") {
  auto ctx = make_ctx(4);
  SplitMix64 rng(20260810);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Exponent> ea(4), eb(4), ec(4);
    for (int i = 0; i < 4; ++i) {
      ea[i] = static_cast<Exponent>(rng.below(5));
      eb[i] = static_cast<Exponent>(rng.below(5));
      ec[i] = static_cast<Exponent>(rng.below(3));
    }
    Monomial a = ctx->make_monomial(ea), b = ctx->make_monomial(eb),
             c = ctx->make_monomial(ec);
    Cmp ab = ctx->compare(a, b);
    Cmp ba = ctx->compare(b, a);
    if (ab == Cmp::EQ) {
      CHECK(a == b);
    } else {
      CHECK(ba != ab);
      // multiplicative: a < b implies ca < cb
      Cmp scaled = ctx->compare(ctx->monomial_mul(c, a), ctx->monomial_mul(c, b));
      CHECK(scaled == ab);
    }
  }
}

TEST_CASE("interning gives stable ids") {
  auto ctx = make_ctx(2);
  Monomial a = ctx->make_monomial(std::vector<Exponent>{3, 4});
  Monomial b = ctx->make_monomial(std::vector<Exponent>{3, 4});
  CHECK(a.id == b.id);
  CHECK(ctx->unit().id == 0);
}
