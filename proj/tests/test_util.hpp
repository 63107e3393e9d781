#pragma once

// Shared helpers for the test suites: tiny fixture builders and seeded
// random generators. Everything here is deterministic given a seed.

#include <memory>
#include <string>
#include <vector>

#include "sgb/ideal.hpp"
#include "sgb/io.hpp"
#include "sgb/polynomial.hpp"
#include "sgb/rng.hpp"

namespace sgbtest {

using namespace sgb;

inline std::vector<std::string> var_names(int n) {
  static const char* base[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(i < 6 ? base[i] : ("x" + std::to_string(i)));
  return out;
}

inline std::unique_ptr<Context> make_ctx(int nvars, Scalar p = 65521,
                                         MonomialOrder ord = MonomialOrder::degrevlex()) {
  return std::make_unique<Context>(p, var_names(nvars), ord);
}

inline Polynomial P(Context& ctx, std::string_view src) {
  return parse_polynomial(ctx, src);
}

inline std::vector<Polynomial> Ps(Context& ctx,
                                  std::initializer_list<std::string_view> srcs) {
  std::vector<Polynomial> out;
  for (auto s : srcs) out.push_back(P(ctx, s));
  return out;
}

inline IdealBasis gb(Context& ctx, std::initializer_list<std::string_view> srcs) {
  return buchberger(ctx, Ps(ctx, srcs));
}

inline std::vector<std::string> strings(const Context& ctx,
                                        const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(to_string(ctx, f));
  return out;
}

// Random polynomial with every monomial of degree <= 2 present with
// probability 1/2 and a uniformly random nonzero coefficient. Never zero.
inline Polynomial random_quadric(Context& ctx, SplitMix64& rng) {
  for (;;) {
    std::vector<Term> terms;
    int n = ctx.nvars();
    std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
    auto maybe_add = [&]() {
      if (rng.below(2) == 0) return;
      Scalar c = static_cast<Scalar>(rng.nonzero_below(ctx.prime()));
      terms.push_back(Term{ctx.make_monomial(e), c});
    };
    maybe_add();  // constant
    for (int i = 0; i < n; ++i) {
      e[i] = 1;
      maybe_add();  // x_i
      for (int j = i; j < n; ++j) {
        ++e[j];
        maybe_add();  // x_i * x_j
        --e[j];
      }
      e[i] = 0;
    }
    Polynomial f = poly_normalize(ctx, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

inline std::vector<Polynomial> random_system(Context& ctx, SplitMix64& rng,
                                             int ngens) {
  std::vector<Polynomial> out;
  for (int i = 0; i < ngens; ++i) out.push_back(random_quadric(ctx, rng));
  return out;
}

}  // namespace sgbtest
