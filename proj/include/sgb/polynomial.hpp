#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "sgb/context.hpp"

namespace sgb {

struct Term {
  Monomial mono;
  Scalar coeff = 0;
  bool operator==(const Term&) const = default;
};

// Sparse polynomial: terms with nonzero coefficients, monomials strictly
// decreasing in the ambient order. The zero polynomial is the empty list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> sorted_terms)
      : terms_(std::move(sorted_terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const { return terms_.front(); }
  Monomial leading_monomial() const { return terms_.front().mono; }
  Scalar leading_coeff() const { return terms_.front().coeff; }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

// Sorts, merges equal monomials and drops zero coefficients. The
// coefficient merges count as field additions.
inline Polynomial poly_normalize(Context& ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ctx.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (t.coeff == 0) continue;
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = ctx.add(out.back().coeff, t.coeff);
    else
      out.push_back(t);
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  return Polynomial(std::move(out));
}

inline Polynomial poly_constant(Context& ctx, Scalar c) {
  if (c == 0) return Polynomial{};
  return Polynomial({Term{ctx.unit(), c}});
}

inline Polynomial poly_term(Monomial m, Scalar c) {
  if (c == 0) return Polynomial{};
  return Polynomial({Term{m, c}});
}

inline Polynomial poly_add(Context& ctx, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    Cmp c = ctx.compare(a[i].mono, b[j].mono);
    if (c == Cmp::GT) {
      out.push_back(a[i++]);
    } else if (c == Cmp::LT) {
      out.push_back(b[j++]);
    } else {
      Scalar s = ctx.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return Polynomial(std::move(out));
}

inline Polynomial poly_sub(Context& ctx, const Polynomial& f, const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    Cmp c = ctx.compare(a[i].mono, b[j].mono);
    if (c == Cmp::GT) {
      out.push_back(a[i++]);
    } else if (c == Cmp::LT) {
      out.push_back(Term{b[j].mono, ctx.neg(b[j].coeff)});
      ++j;
    } else {
      Scalar s = ctx.sub(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  for (; j < b.size(); ++j) out.push_back(Term{b[j].mono, ctx.neg(b[j].coeff)});
  return Polynomial(std::move(out));
}

inline Polynomial poly_scale(Context& ctx, Scalar c, const Polynomial& f) {
  if (c == 0) return Polynomial{};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Scalar s = ctx.mul(c, t.coeff);
    if (s != 0) out.push_back(Term{t.mono, s});
  }
  return Polynomial(std::move(out));
}

// (c * m) * f. Multiplying by a monomial preserves term order.
inline Polynomial poly_mul_term(Context& ctx, Monomial m, Scalar c,
                                const Polynomial& f) {
  if (c == 0) return Polynomial{};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Scalar s = ctx.mul(c, t.coeff);
    if (s != 0) out.push_back(Term{ctx.monomial_mul(m, t.mono), s});
  }
  return Polynomial(std::move(out));
}

inline Polynomial poly_mul(Context& ctx, const Polynomial& f, const Polynomial& g) {
  Polynomial acc;
  for (const Term& t : f.terms())
    acc = poly_add(ctx, acc, poly_mul_term(ctx, t.mono, t.coeff, g));
  return acc;
}

inline Polynomial poly_neg(Context& ctx, const Polynomial& f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) out.push_back(Term{t.mono, ctx.neg(t.coeff)});
  return Polynomial(std::move(out));
}

inline Polynomial poly_monic(Context& ctx, const Polynomial& f) {
  if (f.is_zero() || f.leading_coeff() == 1) return f;
  return poly_scale(ctx, ctx.inv(f.leading_coeff()), f);
}

// Full normal form of f modulo G: no term of the result is divisible by any
// leading monomial of G. Among eligible reducers the earliest one in G wins,
// which keeps division deterministic.
inline Polynomial normal_form(Context& ctx, Polynomial f,
                              std::span<const Polynomial> G) {
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Term lt = f.leading_term();
    const Polynomial* red = nullptr;
    for (const Polynomial& g : G) {
      if (!g.is_zero() && ctx.monomial_divides(g.leading_monomial(), lt.mono)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      remainder.push_back(lt);
      f = Polynomial(std::vector<Term>(f.terms().begin() + 1, f.terms().end()));
      continue;
    }
    Monomial m = ctx.monomial_div(lt.mono, red->leading_monomial());
    Scalar c = ctx.mul(lt.coeff, ctx.inv(red->leading_coeff()));
    f = poly_sub(ctx, f, poly_mul_term(ctx, m, c, *red));
  }
  return Polynomial(std::move(remainder));
}

// Exact division by a single polynomial; throws if the remainder is nonzero.
inline Polynomial poly_divexact(Context& ctx, Polynomial f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Term> quot;
  Scalar lc_inv = ctx.inv(g.leading_coeff());
  while (!f.is_zero()) {
    const Term lt = f.leading_term();
    if (!ctx.monomial_divides(g.leading_monomial(), lt.mono))
      throw std::invalid_argument("poly_divexact: not divisible");
    Monomial m = ctx.monomial_div(lt.mono, g.leading_monomial());
    Scalar c = ctx.mul(lt.coeff, lc_inv);
    quot.push_back(Term{m, c});
    f = poly_sub(ctx, f, poly_mul_term(ctx, m, c, g));
  }
  return Polynomial(std::move(quot));
}

// Canonical comparison used to sort basis sets: by leading monomial first,
// then term by term. Total on polynomials within one context.
inline Cmp poly_compare(const Context& ctx, const Polynomial& f,
                        const Polynomial& g) {
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = ctx.compare(a[i].mono, b[i].mono);
    if (c != Cmp::EQ) return c;
    if (a[i].coeff != b[i].coeff) return a[i].coeff > b[i].coeff ? Cmp::GT : Cmp::LT;
  }
  if (a.size() != b.size()) return a.size() > b.size() ? Cmp::GT : Cmp::LT;
  return Cmp::EQ;
}

}  // namespace sgb
