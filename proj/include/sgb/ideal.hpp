#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgb/polynomial.hpp"
#include "sgb/rng.hpp"

namespace sgb {

// Generating set of an ideal. When is_groebner is set the generators are a
// reduced Gröbner basis in the ambient order: monic, pairwise non-divisible
// leading monomials, tails fully reduced, sorted in decreasing order.
struct IdealBasis {
  std::vector<Polynomial> gens;
  bool is_groebner = false;

  bool is_zero_ideal() const { return gens.empty(); }
  bool is_unit_ideal() const {
    return gens.size() == 1 && !gens[0].is_zero() &&
           gens[0].leading_monomial().id == 0;
  }
};

namespace detail {

struct CritPair {
  std::size_t i, j;    // indices into the basis, i < j
  Monomial lcm;
  std::uint32_t deg;
};

// Gebauer-Möller update: adds basis element t (index = G.size()-1 already)
// and rebuilds the pair set, applying the chain and product criteria.
inline void gm_update(Context& ctx, const std::vector<Polynomial>& G,
                      std::vector<CritPair>& pairs, std::size_t t) {
  const Monomial lmt = G[t].leading_monomial();

  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool coprime;
    bool alive = true;
  };
  std::vector<Cand> cand;
  cand.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    if (G[i].is_zero()) continue;
    Monomial l = ctx.monomial_lcm(G[i].leading_monomial(), lmt);
    cand.push_back({i, l, ctx.coprime(G[i].leading_monomial(), lmt)});
  }

  // among the new pairs keep only those whose lcm no other new pair divides
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (!cand[a].alive) continue;
    if (cand[a].coprime) continue;  // handled below; never kills others here
    for (std::size_t b = 0; b < cand.size(); ++b) {
      if (a == b || !cand[b].alive) continue;
      if (cand[b].lcm == cand[a].lcm && b > a) continue;  // equal lcms: first wins
      if (ctx.monomial_divides(cand[b].lcm, cand[a].lcm)) {
        cand[a].alive = false;
        break;
      }
    }
  }

  // chain criterion on the old pairs
  std::vector<CritPair> kept;
  kept.reserve(pairs.size());
  for (const CritPair& p : pairs) {
    bool drop = ctx.monomial_divides(lmt, p.lcm) &&
                !(ctx.monomial_lcm(G[p.i].leading_monomial(), lmt) == p.lcm) &&
                !(ctx.monomial_lcm(G[p.j].leading_monomial(), lmt) == p.lcm);
    if (!drop) kept.push_back(p);
  }
  pairs = std::move(kept);

  for (const Cand& c : cand) {
    if (!c.alive || c.coprime) continue;  // product criterion
    pairs.push_back(CritPair{c.i, t, c.lcm, ctx.degree(c.lcm)});
  }
}

inline std::size_t pick_pair(Context& ctx, const std::vector<CritPair>& pairs) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const CritPair& a = pairs[k];
    const CritPair& b = pairs[best];
    if (a.deg != b.deg) {
      if (a.deg < b.deg) best = k;
      continue;
    }
    Cmp c = ctx.compare(a.lcm, b.lcm);
    if (c == Cmp::LT || (c == Cmp::EQ && std::tie(a.j, a.i) < std::tie(b.j, b.i)))
      best = k;
  }
  return best;
}

}  // namespace detail

inline Polynomial s_polynomial(Context& ctx, const Polynomial& f,
                               const Polynomial& g) {
  Monomial l = ctx.monomial_lcm(f.leading_monomial(), g.leading_monomial());
  Monomial a = ctx.monomial_div(l, f.leading_monomial());
  Monomial b = ctx.monomial_div(l, g.leading_monomial());
  Polynomial left = poly_mul_term(ctx, a, ctx.inv(f.leading_coeff()), f);
  Polynomial right = poly_mul_term(ctx, b, ctx.inv(g.leading_coeff()), g);
  return poly_sub(ctx, left, right);
}

// Minimalize + tail-interreduce + sort a Gröbner basis into the canonical
// reduced form. Expects gb to already satisfy the Buchberger criterion.
inline IdealBasis reduce_basis(Context& ctx, std::vector<Polynomial> gb) {
  std::vector<Polynomial> nonzero;
  for (auto& g : gb)
    if (!g.is_zero()) nonzero.push_back(poly_monic(ctx, g));
  if (nonzero.empty()) return IdealBasis{{}, true};

  for (const Polynomial& g : nonzero)
    if (g.leading_monomial().id == 0)
      return IdealBasis{{poly_constant(ctx, 1)}, true};

  // minimal generators: drop anything whose lm another kept lm divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < nonzero.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial mi = nonzero[i].leading_monomial();
      Monomial mj = nonzero[j].leading_monomial();
      if (mi == mj ? j < i : ctx.monomial_divides(mj, mi)) redundant = true;
    }
    if (!redundant) minimal.push_back(nonzero[i]);
  }

  std::vector<Polynomial> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = normal_form(ctx, minimal[i], others);
  }

  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return poly_compare(ctx, a, b) == Cmp::GT;
            });
  return IdealBasis{std::move(reduced), true};
}

// Classical Buchberger with the Gebauer-Möller pair criteria and normal
// (smallest lcm degree first) selection. Returns the reduced Gröbner basis.
inline IdealBasis buchberger(Context& ctx, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> G;
  std::vector<detail::CritPair> pairs;

  auto insert = [&](Polynomial f) -> bool {
    f = normal_form(ctx, std::move(f), G);
    if (f.is_zero()) return false;
    if (f.leading_monomial().id == 0) return true;  // unit ideal
    G.push_back(poly_monic(ctx, std::move(f)));
    detail::gm_update(ctx, G, pairs, G.size() - 1);
    return false;
  };

  for (const Polynomial& f : gens)
    if (insert(f)) return IdealBasis{{poly_constant(ctx, 1)}, true};

  while (!pairs.empty()) {
    std::size_t k = detail::pick_pair(ctx, pairs);
    detail::CritPair p = pairs[k];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    if (insert(s_polynomial(ctx, G[p.i], G[p.j])))
      return IdealBasis{{poly_constant(ctx, 1)}, true};
  }
  return reduce_basis(ctx, std::move(G));
}

inline IdealBasis reduced(Context& ctx, const IdealBasis& I) {
  return I.is_groebner ? I : buchberger(ctx, I.gens);
}

inline bool contains(Context& ctx, const IdealBasis& gb, const Polynomial& f) {
  assert(gb.is_groebner);
  return normal_form(ctx, f, gb.gens).is_zero();
}

inline bool ideals_equal(Context& ctx, const IdealBasis& I, const IdealBasis& J) {
  return reduced(ctx, I).gens == reduced(ctx, J).gens;
}

inline IdealBasis ideal_sum(Context& ctx, const IdealBasis& I, const IdealBasis& J) {
  std::vector<Polynomial> gens = I.gens;
  gens.insert(gens.end(), J.gens.begin(), J.gens.end());
  return buchberger(ctx, gens);
}

// ----- elimination machinery -----

namespace detail {

// Derived context with extra variables appended after the originals; the
// Block order makes the appended variables dominant so they are eliminated.
struct ElimScope {
  Context ext;

  ElimScope(const Context& base, int naux)
      : ext(base.prime(), aux_names(base, naux),
            MonomialOrder::block(naux)) {}

  static std::vector<std::string> aux_names(const Context& base, int naux) {
    std::vector<std::string> v = base.vars();
    for (int i = 0; i < naux; ++i) {
      std::string name = "t@" + std::to_string(i);  // '@' cannot be parsed, so no clash
      v.push_back(name);
    }
    return v;
  }

  Polynomial lift(const Context& base, const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    std::vector<Exponent> e(ext.vars().size(), 0);
    for (const Term& t : f.terms()) {
      auto src = base.exponents(t.mono);
      std::copy(src.begin(), src.end(), e.begin());
      std::fill(e.begin() + src.size(), e.end(), Exponent{0});
      terms.push_back(Term{ext.make_monomial(e), t.coeff});
    }
    return Polynomial(std::move(terms));
  }

  bool aux_free(const Context& base, const Polynomial& f) const {
    std::size_t n = base.vars().size();
    for (const Term& t : f.terms()) {
      auto e = ext.exponents(t.mono);
      for (std::size_t i = n; i < e.size(); ++i)
        if (e[i] != 0) return false;
    }
    return true;
  }

  Polynomial contract(Context& base, const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    std::vector<Exponent> e(base.vars().size());
    for (const Term& t : f.terms()) {
      auto src = ext.exponents(t.mono);
      std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(e.size()),
                e.begin());
      terms.push_back(Term{base.make_monomial(e), t.coeff});
    }
    // re-sort: the base order need not agree with the block order
    return poly_normalize(base, std::move(terms));
  }

  // Runs Buchberger in the extended ring, keeps the aux-free part, maps it
  // back and re-reduces in the base order. Arithmetic done here is folded
  // into the base context's counter.
  IdealBasis eliminate(Context& base, const std::vector<Polynomial>& ext_gens) {
    IdealBasis gb = buchberger(ext, ext_gens);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.gens)
      if (aux_free(base, g)) kept.push_back(contract(base, g));
    base.ops() += ext.ops();
    return buchberger(base, kept);
  }
};

}  // namespace detail

// I ∩ J via the one-auxiliary-variable construction t·I + (1-t)·J.
inline IdealBasis intersect(Context& ctx, const IdealBasis& I, const IdealBasis& J) {
  if (I.is_zero_ideal() || J.is_zero_ideal()) return IdealBasis{{}, true};
  if (I.is_unit_ideal()) return reduced(ctx, J);
  if (J.is_unit_ideal()) return reduced(ctx, I);
  detail::ElimScope s(ctx, 1);
  Polynomial t = poly_term(s.ext.variable(ctx.nvars()), 1);
  Polynomial one_minus_t = poly_sub(s.ext, poly_constant(s.ext, 1), t);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.gens)
    gens.push_back(poly_mul(s.ext, t, s.lift(ctx, f)));
  for (const Polynomial& g : J.gens)
    gens.push_back(poly_mul(s.ext, one_minus_t, s.lift(ctx, g)));
  return s.eliminate(ctx, gens);
}

// I : f, computed as (I ∩ ⟨f⟩) / f.
inline IdealBasis quotient(Context& ctx, const IdealBasis& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("quotient by zero polynomial");
  IdealBasis inter = intersect(ctx, I, IdealBasis{{f}, false});
  std::vector<Polynomial> gens;
  for (const Polynomial& g : inter.gens)
    gens.push_back(poly_divexact(ctx, g, f));
  return buchberger(ctx, gens);
}

// I : K = intersection of the quotients by each generator of K. The quotient
// by the zero ideal is the whole ring.
inline IdealBasis quotient_ideal(Context& ctx, const IdealBasis& I,
                                 const IdealBasis& K) {
  IdealBasis acc{{poly_constant(ctx, 1)}, true};
  bool any = false;
  for (const Polynomial& g : K.gens) {
    if (g.is_zero()) continue;
    IdealBasis q = quotient(ctx, I, g);
    acc = any ? intersect(ctx, acc, q) : std::move(q);
    any = true;
  }
  return any ? acc : IdealBasis{{poly_constant(ctx, 1)}, true};
}

// I : f^∞ by the Rabinowitsch construction: adjoin t, add t·f - 1,
// eliminate t.
inline IdealBasis saturate(Context& ctx, const IdealBasis& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero polynomial");
  detail::ElimScope s(ctx, 1);
  Polynomial t = poly_term(s.ext.variable(ctx.nvars()), 1);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens) gens.push_back(s.lift(ctx, g));
  gens.push_back(poly_sub(s.ext, poly_mul(s.ext, t, s.lift(ctx, f)),
                          poly_constant(s.ext, 1)));
  return s.eliminate(ctx, gens);
}

// I : K^∞, deterministic. Uses the exact identity
//   I : K^∞ = ∩_g (I : g^∞)   over generators g of K,
// which holds because a high enough power of K is generated by products in
// which some single generator appears with a high power.
inline IdealBasis saturate_by_ideal(Context& ctx, const IdealBasis& I,
                                    const IdealBasis& K) {
  std::optional<IdealBasis> acc;
  for (const Polynomial& g : K.gens) {
    if (g.is_zero()) continue;
    IdealBasis s = saturate(ctx, I, g);
    acc = acc ? intersect(ctx, *acc, s) : std::move(s);
  }
  if (!acc) throw std::invalid_argument("saturation by the zero ideal");
  return *acc;
}

// I : K^∞ via a single random linear combination of K's generators. Equal to
// the true saturation for generic draws; callers cross-check against the
// deterministic route when certainty matters.
inline IdealBasis saturate_by_ideal_random(Context& ctx, const IdealBasis& I,
                                           const IdealBasis& K,
                                           std::uint64_t seed) {
  SplitMix64 rng(seed);
  Polynomial combo;
  for (const Polynomial& g : K.gens) {
    if (g.is_zero()) continue;
    Scalar a = static_cast<Scalar>(rng.nonzero_below(ctx.prime()));
    combo = poly_add(ctx, combo, poly_scale(ctx, a, g));
  }
  if (combo.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
  return saturate(ctx, I, combo);
}

// f ∈ √I, decided by testing 1 ∈ I + ⟨t·f - 1⟩.
inline bool radical_member(Context& ctx, const Polynomial& f, const IdealBasis& I) {
  if (f.is_zero()) return true;
  detail::ElimScope s(ctx, 1);
  Polynomial t = poly_term(s.ext.variable(ctx.nvars()), 1);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens) gens.push_back(s.lift(ctx, g));
  gens.push_back(poly_sub(s.ext, poly_mul(s.ext, t, s.lift(ctx, f)),
                          poly_constant(s.ext, 1)));
  IdealBasis gb = buchberger(s.ext, gens);
  ctx.ops() += s.ext.ops();
  return gb.is_unit_ideal();
}

inline bool ideals_equal_up_to_radical(Context& ctx, const IdealBasis& I,
                                       const IdealBasis& J) {
  for (const Polynomial& f : I.gens)
    if (!radical_member(ctx, f, J)) return false;
  for (const Polynomial& g : J.gens)
    if (!radical_member(ctx, g, I)) return false;
  return true;
}

// Codimension of V(I) via independent variable sets of the initial ideal:
// n minus the largest |S| such that no leading monomial uses only variables
// from S. Returns nullopt for the unit ideal (empty variety) and 0 for the
// zero ideal.
inline std::optional<int> codimension(Context& ctx, const IdealBasis& I) {
  IdealBasis gb = reduced(ctx, I);
  if (gb.is_unit_ideal()) return std::nullopt;
  if (gb.is_zero_ideal()) return 0;
  int n = ctx.nvars();
  if (n > 20) throw std::invalid_argument("codimension: too many variables");

  std::vector<std::uint32_t> supports;
  supports.reserve(gb.gens.size());
  for (const Polynomial& g : gb.gens) {
    auto e = ctx.exponents(g.leading_monomial());
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (e[i] != 0) mask |= (1u << i);
    supports.push_back(mask);
  }

  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (std::uint32_t m : supports) {
      if ((m & ~s) == 0) {  // lm lives entirely inside S
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return n - best;
}

}  // namespace sgb
