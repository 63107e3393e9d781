#include <catch2/catch_amalgamated.hpp>

#include "sgb/nondeg.hpp"
#include "test_util.hpp"

using namespace sgb;
using sgbtest::make_ctx;
using sgbtest::P;
using sgbtest::Ps;
using sgbtest::strings;

TEST_CASE("naive driver on the (xy, xz) example") {
  auto ctx = make_ctx(3);
  auto res = nondeg_naive(*ctx, Ps(*ctx, {"x*y", "x*z"}));
  REQUIRE(res.iterations.size() == 2);
  REQUIRE(res.iterations[1].pre_cleaning.has_value());
  CHECK(strings(*ctx, res.iterations[1].pre_cleaning->gens) ==
        std::vector<std::string>{"x*z", "y"});
  CHECK(strings(*ctx, res.basis.gens) == std::vector<std::string>{"y", "z"});
  CHECK(codimension(*ctx, res.basis) == 2);
  CHECK_FALSE(res.empty_locus());
}

TEST_CASE("naive driver keeps regular sequences intact") {
  auto ctx = make_ctx(3);
  auto res = nondeg_naive(*ctx, Ps(*ctx, {"x", "y"}));
  CHECK(strings(*ctx, res.basis.gens) == std::vector<std::string>{"x", "y"});
  CHECK(codimension(*ctx, res.basis) == 2);
}

TEST_CASE("naive driver detects an empty locus") {
  auto ctx = make_ctx(3);
  // <x> : (xy)^inf is the unit ideal: every component of V(x) lies in V(xy)
  auto res = nondeg_naive(*ctx, Ps(*ctx, {"x", "x*y"}));
  CHECK(res.empty_locus());
  CHECK(strings(*ctx, res.basis.gens) == std::vector<std::string>{"1"});
}

TEST_CASE("input validation") {
  auto ctx = make_ctx(2);
  CHECK_THROWS_AS(nondeg_naive(*ctx, Ps(*ctx, {"x", "y", "x + y"})), ConfigError);
  CHECK_THROWS_AS(nondeg_naive(*ctx, {Polynomial{}}), std::invalid_argument);
  CHECK_THROWS_AS(
      nondeg_sgbtree(*ctx, Ps(*ctx, {"x", "y", "x + y"}),
                     NondegMode::SgbTreeRandomized, 1),
      ConfigError);
  CHECK_THROWS_AS(nondeg_sgbtree(*ctx, {Polynomial{}},
                                 NondegMode::SgbTreeDeterministic),
                  std::invalid_argument);
}

TEST_CASE("combine_syzygies") {
  auto ctx = make_ctx(3);
  CHECK(combine_syzygies(*ctx, Polynomial{}, P(*ctx, "z"), Scalar{3}) ==
        P(*ctx, "z"));
  CHECK(combine_syzygies(*ctx, P(*ctx, "y"), P(*ctx, "z"), Scalar{3}) ==
        P(*ctx, "3*y + z"));

  Context ext(65521, {"s", "x", "y", "z"}, MonomialOrder::block(3));
  Monomial slack = ext.variable(0);
  CHECK(combine_syzygies(ext, parse_polynomial(ext, "y"),
                         parse_polynomial(ext, "z"), slack) ==
        parse_polynomial(ext, "s*y + z"));
  // a non-variable weight is a configuration error
  Monomial s2 = ext.make_monomial(std::vector<Exponent>{2, 0, 0, 0});
  CHECK_THROWS_AS(combine_syzygies(ext, parse_polynomial(ext, "y"),
                                   parse_polynomial(ext, "z"), s2),
                  ConfigError);
}

TEST_CASE("tree driver on (xy, xz) agrees with naive in every mode") {
  auto ctx = make_ctx(3);
  auto fs = Ps(*ctx, {"x*y", "x*z"});
  auto naive = nondeg_naive(*ctx, fs);

  auto rnd = nondeg_sgbtree(*ctx, fs, NondegMode::SgbTreeRandomized, 1);
  CHECK(ideals_equal_up_to_radical(*ctx, naive.basis, rnd.basis));
  CHECK(codimension(*ctx, rnd.basis) == 2);

  auto det = nondeg_sgbtree(*ctx, fs, NondegMode::SgbTreeDeterministic);
  CHECK(ideals_equal_up_to_radical(*ctx, naive.basis, det.basis));
  CHECK(codimension(*ctx, det.basis) == 2);
}

TEST_CASE("tree driver on a regular sequence drains nothing") {
  auto ctx = make_ctx(3);
  auto fs = Ps(*ctx, {"x", "y", "z"});
  auto res = nondeg_sgbtree(*ctx, fs, NondegMode::SgbTreeRandomized, 7);
  CHECK(strings(*ctx, res.basis.gens) == std::vector<std::string>{"x", "y", "z"});
  for (const auto& it : res.iterations) {
    CHECK(it.syzygies_found == 0);
    CHECK(it.cleaning_syzygies == 0);
  }
}

TEST_CASE("tree driver detects an empty locus") {
  auto ctx = make_ctx(3);
  auto fs = Ps(*ctx, {"x", "x*y"});
  for (auto mode : {NondegMode::SgbTreeRandomized, NondegMode::SgbTreeDeterministic}) {
    auto res = nondeg_sgbtree(*ctx, fs, mode, 3);
    CHECK(res.empty_locus());
  }
}

TEST_CASE("different seeds give the same locus up to radicals") {
  auto ctx = make_ctx(3);
  auto fs = Ps(*ctx, {"x*y", "x*z"});
  auto a = nondeg_sgbtree(*ctx, fs, NondegMode::SgbTreeRandomized, 1);
  auto b = nondeg_sgbtree(*ctx, fs, NondegMode::SgbTreeRandomized, 2);
  CHECK(ideals_equal_up_to_radical(*ctx, a.basis, b.basis));
}

TEST_CASE("deterministic and naive modes are bitwise reproducible") {
  auto run_naive = [] {
    auto ctx = make_ctx(3);
    auto res = nondeg_naive(*ctx, Ps(*ctx, {"x*y", "x*z", "y*z"}));
    return std::pair(strings(*ctx, res.basis.gens), ctx->ops());
  };
  auto a = run_naive();
  auto b = run_naive();
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);

  auto run_det = [] {
    auto ctx = make_ctx(3);
    auto res = nondeg_sgbtree(*ctx, Ps(*ctx, {"x*y", "x*z", "y*z"}),
                              NondegMode::SgbTreeDeterministic);
    return std::pair(strings(*ctx, res.basis.gens), ctx->ops());
  };
  auto c = run_det();
  auto d = run_det();
  CHECK(c.first == d.first);
  CHECK(c.second == d.second);
}

TEST_CASE("three-generator cross-check between all modes") {
  auto ctx = make_ctx(3);
  auto fs = Ps(*ctx, {"x*y", "x*z", "y*z"});
  auto naive = nondeg_naive(*ctx, fs);
  auto rnd = nondeg_sgbtree(*ctx, fs, NondegMode::SgbTreeRandomized, 11);
  auto det = nondeg_sgbtree(*ctx, fs, NondegMode::SgbTreeDeterministic);
  CHECK(ideals_equal_up_to_radical(*ctx, naive.basis, rnd.basis));
  CHECK(ideals_equal_up_to_radical(*ctx, naive.basis, det.basis));
  if (!naive.empty_locus()) {
    CHECK(codimension(*ctx, naive.basis) == 3);  // c = 3 equations
  }
  // every input vanishes on the locus
  for (const Polynomial& f : fs) CHECK(radical_member(*ctx, f, naive.basis));
}

TEST_CASE("point oracle: the locus is cut out by y and z for (xy, xz)") {
  // over a tiny field, check both directions of the containment on points
  Context ctx(5, {"x", "y", "z"});
  auto fs = Ps(ctx, {"x*y", "x*z"});
  auto res = nondeg_naive(ctx, fs);
  auto eval = [&](const Polynomial& f, Scalar a, Scalar b, Scalar c) {
    Scalar acc = 0;
    for (const Term& t : f.terms()) {
      auto e = ctx.exponents(t.mono);
      Scalar v = t.coeff;
      for (int i = 0; i < e[0]; ++i) v = ctx.mul(v, a);
      for (int i = 0; i < e[1]; ++i) v = ctx.mul(v, b);
      for (int i = 0; i < e[2]; ++i) v = ctx.mul(v, c);
      acc = ctx.add(acc, v);
    }
    return acc;
  };
  for (Scalar a = 0; a < 5; ++a)
    for (Scalar b = 0; b < 5; ++b)
      for (Scalar c = 0; c < 5; ++c) {
        bool on_locus = true;
        for (const Polynomial& g : res.basis.gens)
          if (eval(g, a, b, c) != 0) on_locus = false;
        // V(result) is contained in V(inputs)
        if (on_locus)
          for (const Polynomial& f : fs) CHECK(eval(f, a, b, c) == 0);
        // the codimension-2 part of V(xy, xz) is the x-axis {y = z = 0}
        bool on_axis = (b == 0 && c == 0);
        CHECK(on_locus == on_axis);
      }
}
