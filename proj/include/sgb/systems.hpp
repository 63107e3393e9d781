#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "sgb/io.hpp"
#include "sgb/polynomial.hpp"
#include "sgb/rng.hpp"

namespace sgb {

inline Polynomial partial_derivative(Context& ctx, const Polynomial& f, int var) {
  std::vector<Term> terms;
  std::vector<Exponent> e(static_cast<std::size_t>(ctx.nvars()));
  for (const Term& t : f.terms()) {
    auto src = ctx.exponents(t.mono);
    Exponent d = src[static_cast<std::size_t>(var)];
    if (d == 0) continue;
    Scalar c = ctx.mul(t.coeff, ctx.reduce_int(d));
    if (c == 0) continue;  // exponent divisible by the characteristic
    std::copy(src.begin(), src.end(), e.begin());
    --e[static_cast<std::size_t>(var)];
    terms.push_back(Term{ctx.make_monomial(e), c});
  }
  return Polynomial(std::move(terms));
}

// Resultant of a2*t^2 + a1*t + a0 and b2*t^2 + b1*t + b0 with respect to t,
// as the determinant of the 4x4 Sylvester matrix
//   [ a2 a1 a0 0  ]
//   [ 0  a2 a1 a0 ]
//   [ b2 b1 b0 0  ]
//   [ 0  b2 b1 b0 ]
inline Polynomial sylvester_resultant(Context& ctx,
                                      std::array<Polynomial, 3> a,
                                      std::array<Polynomial, 3> b) {
  // rows hold coefficients by descending t-degree
  std::array<std::array<Polynomial, 4>, 4> m;
  m[0] = {a[2], a[1], a[0], Polynomial{}};
  m[1] = {Polynomial{}, a[2], a[1], a[0]};
  m[2] = {b[2], b[1], b[0], Polynomial{}};
  m[3] = {Polynomial{}, b[2], b[1], b[0]};

  // Laplace expansion; 4x4 stays tiny
  std::vector<int> cols{0, 1, 2, 3};
  auto det = [&](auto&& self, int row, std::vector<int> cs) -> Polynomial {
    if (cs.size() == 1) return m[row][static_cast<std::size_t>(cs[0])];
    Polynomial acc;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const Polynomial& pivot = m[row][static_cast<std::size_t>(cs[k])];
      if (pivot.is_zero()) continue;
      std::vector<int> rest;
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (j != k) rest.push_back(cs[j]);
      Polynomial sub = poly_mul(ctx, pivot, self(self, row + 1, rest));
      acc = (k % 2 == 0) ? poly_add(ctx, acc, sub) : poly_sub(ctx, acc, sub);
    }
    return acc;
  };
  return det(det, 0, cols);
}

struct SystemSpec {
  enum class Family { Cyclic, Pseudo, Sos, Sing };
  Family family;
  std::vector<int> params;  // Cyclic/Pseudo/Sing: {n}; Sos: {s, n}
  std::uint64_t seed = 0;
  Scalar characteristic = 65521;
};

struct GeneratedSystem {
  std::unique_ptr<Context> ctx;
  std::vector<Polynomial> polys;
  std::vector<Polynomial> aux;  // Sos: the quadrics g_i; Sing: A, B (lifted)
  std::string name;
};

namespace detail {

// Dense random quadric: every monomial of degree <= 2 over the allowed
// variables gets a coefficient drawn uniformly from [0, p). Enumeration
// order is fixed (constant, then x_i, then x_i x_j with i <= j) so a seed
// pins the polynomial byte for byte.
inline Polynomial random_dense_quadric(Context& ctx, SplitMix64& rng,
                                       const std::vector<int>& allowed) {
  std::vector<Term> terms;
  std::vector<Exponent> e(static_cast<std::size_t>(ctx.nvars()), 0);
  auto draw = [&]() {
    Scalar c = static_cast<Scalar>(rng.below(ctx.prime()));
    if (c != 0) terms.push_back(Term{ctx.make_monomial(e), c});
  };
  draw();
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    e[static_cast<std::size_t>(allowed[i])] = 1;
    draw();
    for (std::size_t j = i; j < allowed.size(); ++j) {
      ++e[static_cast<std::size_t>(allowed[j])];
      draw();
      --e[static_cast<std::size_t>(allowed[j])];
    }
    e[static_cast<std::size_t>(allowed[i])] = 0;
  }
  return poly_normalize(ctx, std::move(terms));
}

inline std::vector<int> all_vars(const Context& ctx) {
  std::vector<int> v(static_cast<std::size_t>(ctx.nvars()));
  for (int i = 0; i < ctx.nvars(); ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace detail

// Cyclic(n): for each d = 1..n-1 the sum of the n cyclic products of d
// consecutive variables, plus x_0 ... x_{n-1} - 1.
inline GeneratedSystem gen_cyclic(int n, Scalar p = 65521) {
  if (n < 2) throw std::invalid_argument("cyclic: need n >= 2");
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  auto ctx = std::make_unique<Context>(p, vars);

  std::vector<Polynomial> polys;
  for (int d = 1; d < n; ++d) {
    std::vector<Term> terms;
    for (int i = 0; i < n; ++i) {
      std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < d; ++j) ++e[static_cast<std::size_t>((i + j) % n)];
      terms.push_back(Term{ctx->make_monomial(e), 1});
    }
    polys.push_back(poly_normalize(*ctx, std::move(terms)));
  }
  std::vector<Exponent> all_ones(static_cast<std::size_t>(n), 1);
  Polynomial last = poly_sub(*ctx, poly_term(ctx->make_monomial(all_ones), 1),
                             poly_constant(*ctx, 1));
  polys.push_back(last);

  GeneratedSystem out;
  out.ctx = std::move(ctx);
  out.polys = std::move(polys);
  out.name = "cyclic(" + std::to_string(n) + ")";
  return out;
}

// Pseudo(n): f_1..f_{n-1} random dense quadrics in x_1..x_{n-2}, z_1, z_2;
// g_i equals f_i with the x-variables replaced by the y-variables. The ring
// is K[x_1..x_{n-2}, y_1..y_{n-2}, z_1, z_2]: 2(n-1) polynomials in 2(n-1)
// variables.
inline GeneratedSystem gen_pseudo(int n, std::uint64_t seed, Scalar p = 65521) {
  if (n < 3) throw std::invalid_argument("pseudo: need n >= 3");
  int m = n - 2;
  std::vector<std::string> vars;
  for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) vars.push_back("y" + std::to_string(i));
  vars.push_back("z1");
  vars.push_back("z2");
  auto ctx = std::make_unique<Context>(p, vars);

  std::vector<int> xz_vars;
  for (int i = 0; i < m; ++i) xz_vars.push_back(i);
  xz_vars.push_back(2 * m);
  xz_vars.push_back(2 * m + 1);

  SplitMix64 rng(seed);
  std::vector<Polynomial> fs, gs;
  for (int i = 0; i < n - 1; ++i) {
    Polynomial f;
    do {
      f = detail::random_dense_quadric(*ctx, rng, xz_vars);
    } while (f.is_zero());
    fs.push_back(f);
    // substitute x_j -> y_j by swapping the exponent blocks
    std::vector<Term> terms;
    std::vector<Exponent> e(vars.size());
    for (const Term& t : f.terms()) {
      auto src = ctx->exponents(t.mono);
      std::copy(src.begin(), src.end(), e.begin());
      for (int j = 0; j < m; ++j)
        std::swap(e[static_cast<std::size_t>(j)],
                  e[static_cast<std::size_t>(m + j)]);
      terms.push_back(Term{ctx->make_monomial(e), t.coeff});
    }
    gs.push_back(poly_normalize(*ctx, std::move(terms)));
  }

  GeneratedSystem out;
  out.ctx = std::move(ctx);
  out.polys = std::move(fs);
  out.polys.insert(out.polys.end(), gs.begin(), gs.end());
  out.name = "pseudo(" + std::to_string(n) + ") seed " + std::to_string(seed);
  return out;
}

// Sos(s, n): f is a sum of s squared random dense quadrics in x_1..x_n;
// the system is f together with its partials by x_2..x_n.
inline GeneratedSystem gen_sos(int s, int n, std::uint64_t seed, Scalar p = 65521) {
  if (s < 1 || n < 2) throw std::invalid_argument("sos: need s >= 1, n >= 2");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  auto ctx = std::make_unique<Context>(p, vars);

  SplitMix64 rng(seed);
  std::vector<Polynomial> gs;
  Polynomial f;
  for (int i = 0; i < s; ++i) {
    Polynomial g;
    do {
      g = detail::random_dense_quadric(*ctx, rng, detail::all_vars(*ctx));
    } while (g.is_zero());
    gs.push_back(g);
    f = poly_add(*ctx, f, poly_mul(*ctx, g, g));
  }

  GeneratedSystem out;
  out.polys.push_back(f);
  for (int j = 1; j < n; ++j)
    out.polys.push_back(partial_derivative(*ctx, f, j));
  out.aux = std::move(gs);
  out.ctx = std::move(ctx);
  out.name = "sos(" + std::to_string(s) + "," + std::to_string(n) + ") seed " +
             std::to_string(seed);
  return out;
}

// Sing(n): f is the resultant in x_{n+1} of two random dense quadrics over
// K[x_1..x_{n+1}]; the system is f with its partials by x_2..x_n. Draws with
// a vanishing x_{n+1}^2 coefficient (or a zero resultant) are redrawn.
inline GeneratedSystem gen_sing(int n, std::uint64_t seed, Scalar p = 65521) {
  if (n < 2) throw std::invalid_argument("sing: need n >= 2");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  auto ctx = std::make_unique<Context>(p, vars);
  // scratch ring with the eliminated variable appended
  std::vector<std::string> full = vars;
  full.push_back("x" + std::to_string(n + 1));
  Context lifted(p, full);

  SplitMix64 rng(seed);
  Polynomial f;
  std::vector<Polynomial> aux;
  for (;;) {
    Polynomial A = detail::random_dense_quadric(lifted, rng, detail::all_vars(lifted));
    Polynomial B = detail::random_dense_quadric(lifted, rng, detail::all_vars(lifted));

    // split a quadric into coefficients of 1, t, t^2 (t = x_{n+1}); the t^2
    // coefficient is a scalar and must not vanish for the 4x4 Sylvester shape
    auto split = [&](const Polynomial& q) {
      std::array<Polynomial, 3> c;
      std::array<std::vector<Term>, 3> parts;
      std::vector<Exponent> e(static_cast<std::size_t>(n));
      for (const Term& t : q.terms()) {
        auto src = lifted.exponents(t.mono);
        Exponent dt = src[static_cast<std::size_t>(n)];
        std::copy(src.begin(), src.begin() + n, e.begin());
        parts[dt].push_back(Term{ctx->make_monomial(e), t.coeff});
      }
      for (int d = 0; d < 3; ++d)
        c[static_cast<std::size_t>(d)] = poly_normalize(*ctx, std::move(parts[static_cast<std::size_t>(d)]));
      return c;
    };
    auto ca = split(A);
    auto cb = split(B);
    if (ca[2].is_zero() || cb[2].is_zero()) continue;  // degenerate shape
    f = sylvester_resultant(*ctx, ca, cb);
    if (f.is_zero()) continue;
    aux = {A, B};
    break;
  }

  GeneratedSystem out;
  out.polys.push_back(f);
  for (int j = 1; j < n; ++j)
    out.polys.push_back(partial_derivative(*ctx, f, j));
  out.aux = std::move(aux);
  out.ctx = std::move(ctx);
  out.name = "sing(" + std::to_string(n) + ") seed " + std::to_string(seed);
  return out;
}

inline GeneratedSystem generate(const SystemSpec& spec) {
  using F = SystemSpec::Family;
  switch (spec.family) {
    case F::Cyclic:
      if (spec.params.size() != 1) throw std::invalid_argument("cyclic: params {n}");
      return gen_cyclic(spec.params[0], spec.characteristic);
    case F::Pseudo:
      if (spec.params.size() != 1) throw std::invalid_argument("pseudo: params {n}");
      return gen_pseudo(spec.params[0], spec.seed, spec.characteristic);
    case F::Sos:
      if (spec.params.size() != 2) throw std::invalid_argument("sos: params {s, n}");
      return gen_sos(spec.params[0], spec.params[1], spec.seed, spec.characteristic);
    case F::Sing:
      if (spec.params.size() != 1) throw std::invalid_argument("sing: params {n}");
      return gen_sing(spec.params[0], spec.seed, spec.characteristic);
  }
  throw std::invalid_argument("unknown system family");
}

}  // namespace sgb
