#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgb/ideal.hpp"
#include "sgb/rng.hpp"
#include "sgb/sgb_tree.hpp"

namespace sgb {

// Unsupported problem shape (e.g. more equations than variables), as
// opposed to malformed input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NondegMode { Naive, SgbTreeRandomized, SgbTreeDeterministic };

inline const char* to_string(NondegMode m) {
  switch (m) {
    case NondegMode::Naive: return "naive";
    case NondegMode::SgbTreeRandomized: return "sgbtree-random";
    case NondegMode::SgbTreeDeterministic: return "sgbtree-deterministic";
  }
  return "?";
}

struct NondegIteration {
  int k = 0;                      // 1-based input index
  std::size_t syzygies_found = 0;     // saturation witnesses at the new node
  std::size_t cleaning_syzygies = 0;  // quotient elements drained from leaves
  std::size_t nodes_inserted = 0;
  OpCounter ops_after;                    // counter snapshot at iteration end
  std::optional<IdealBasis> pre_cleaning;  // naive mode: H + <f_k> before cleanup
};

struct NondegResult {
  IdealBasis basis;  // reduced Gröbner basis of the output ideal
  NondegMode mode = NondegMode::Naive;
  std::uint64_t seed = 0;
  std::vector<NondegIteration> iterations;
  std::uint64_t pairs_reduced = 0;  // tree modes
  std::uint64_t pairs_skipped = 0;

  bool empty_locus() const { return basis.is_unit_ideal(); }
};

// h_prev and h_new combined with a scalar weight: t*h_prev + h_new.
inline Polynomial combine_syzygies(Context& ctx, const Polynomial& h_prev,
                                   const Polynomial& h_new, Scalar t) {
  if (h_prev.is_zero()) return h_new;
  return poly_add(ctx, poly_scale(ctx, t, h_prev), h_new);
}

// Deterministic variant: the weight is a reserved slack variable, which is
// generic by construction. The slack must be a single fresh variable.
inline Polynomial combine_syzygies(Context& ctx, const Polynomial& h_prev,
                                   const Polynomial& h_new, Monomial slack) {
  if (ctx.degree(slack) != 1)
    throw ConfigError("combine_syzygies: no reserved slack variable");
  if (h_prev.is_zero()) return h_new;
  return poly_add(ctx, poly_mul_term(ctx, slack, 1, h_prev), h_new);
}

namespace detail {

inline void validate_locus_input(Context& ctx, const std::vector<Polynomial>& fs) {
  if (static_cast<int>(fs.size()) > ctx.nvars())
    throw ConfigError("nondegenerate locus: more equations than variables");
  for (const Polynomial& f : fs)
    if (f.is_zero())
      throw std::invalid_argument("nondegenerate locus: zero input polynomial");
}

inline NondegResult unit_result(Context& ctx, NondegMode mode, std::uint64_t seed,
                                std::vector<NondegIteration> iters) {
  NondegResult res;
  res.basis = IdealBasis{{poly_constant(ctx, 1)}, true};
  res.mode = mode;
  res.seed = seed;
  res.iterations = std::move(iters);
  return res;
}

}  // namespace detail

// The saturation-loop algorithm on top of the classical ideal operations:
//   H <- J : f_k^inf;  record K = J : H;  J <- H + <f_k>;
//   then J <- J : K^inf for every recorded K.
// Fully deterministic; reaching the unit ideal short-circuits the loop.
inline NondegResult nondeg_naive(Context& ctx, const std::vector<Polynomial>& fs) {
  detail::validate_locus_input(ctx, fs);
  NondegResult res;
  res.mode = NondegMode::Naive;

  IdealBasis J{{}, true};
  std::vector<IdealBasis> recorded;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    NondegIteration it;
    it.k = static_cast<int>(k) + 1;

    IdealBasis H = J.is_zero_ideal() ? J : saturate(ctx, J, fs[k]);
    recorded.push_back(quotient_ideal(ctx, J, H));
    std::vector<Polynomial> gens = H.gens;
    gens.push_back(fs[k]);
    J = buchberger(ctx, gens);
    it.pre_cleaning = J;

    for (const IdealBasis& K : recorded) {
      if (K.is_unit_ideal()) continue;  // saturating by the whole ring is a no-op
      J = saturate_by_ideal(ctx, J, K);
      ++it.cleaning_syzygies;
    }
    it.ops_after = ctx.ops();
    res.iterations.push_back(std::move(it));
    if (J.is_unit_ideal())
      return detail::unit_result(ctx, NondegMode::Naive, 0,
                                 std::move(res.iterations));
  }
  res.basis = reduced(ctx, J);
  return res;
}

namespace detail {

// Runs the tree algorithm in the given context. `slack` is engaged for the
// deterministic variant; otherwise scalars are drawn from rng.
inline std::pair<std::vector<Polynomial>, bool> nondeg_tree_core(
    Context& ctx, const std::vector<Polynomial>& fs, std::optional<Monomial> slack,
    SplitMix64& rng, NondegResult& res) {
  SgbTree T(ctx);
  NodeLabel nu = T.insert_root(Polynomial{});

  for (std::size_t k = 0; k < fs.size(); ++k) {
    NondegIteration it;
    it.k = static_cast<int>(k) + 1;

    NodeLabel mu = T.insert_edge_above(fs[k], nu);
    ++it.nodes_inserted;

    for (;;) {
      Polynomial g = T.get_syzygy(mu);
      if (g.is_zero()) break;
      ++it.syzygies_found;
      T.seed_node_pair(mu);
      NodeLabel gamma = T.insert_edge_above(g, mu);
      ++it.nodes_inserted;

      Polynomial h;
      Scalar t = 0;
      if (!slack) t = static_cast<Scalar>(rng.nonzero_below(ctx.prime()));
      for (;;) {
        Polynomial h2 = T.get_syzygy(gamma);
        if (h2.is_zero()) break;
        h = slack ? combine_syzygies(ctx, h, h2, *slack)
                  : combine_syzygies(ctx, h, h2, t);
      }
      if (!h.is_zero()) {
        T.insert_leaf_under(h, nu);
        ++it.nodes_inserted;
      }
    }

    for (NodeLabel beta : T.children(nu)) {
      for (;;) {
        Polynomial b = T.get_syzygy(beta);
        if (b.is_zero()) break;
        ++it.cleaning_syzygies;
        T.insert_edge_above(b, nu);
        ++it.nodes_inserted;
      }
    }

    it.ops_after = ctx.ops();
    res.iterations.push_back(std::move(it));

    // unit detection ends the loop early: the locus is already empty
    std::vector<Polynomial> partial = T.basis(nu);
    for (const Polynomial& g : partial) {
      if (!g.is_zero() && g.leading_monomial().id == 0) {
        res.pairs_reduced = T.pairs_reduced();
        res.pairs_skipped = T.pairs_skipped();
        return {partial, true};
      }
    }
  }
  res.pairs_reduced = T.pairs_reduced();
  res.pairs_skipped = T.pairs_skipped();
  return {T.basis(nu), false};
}

inline std::string fresh_slack_name(const Context& ctx) {
  std::string name = "s";
  for (int i = 0;; ++i) {
    bool taken = false;
    for (const auto& v : ctx.vars())
      if (v == name) taken = true;
    if (!taken) return name;
    name = "s" + std::to_string(i);
  }
}

}  // namespace detail

// The tree-based algorithm. Randomized mode draws one scalar per inserted
// saturation witness from the given seed; deterministic mode adjoins a
// slack variable (smallest in the extended order) and is seed-independent.
inline NondegResult nondeg_sgbtree(Context& ctx, const std::vector<Polynomial>& fs,
                                   NondegMode mode, std::uint64_t seed = 0) {
  detail::validate_locus_input(ctx, fs);
  NondegResult res;
  res.mode = mode;
  res.seed = mode == NondegMode::SgbTreeRandomized ? seed : 0;
  SplitMix64 rng(seed);

  if (mode == NondegMode::SgbTreeRandomized) {
    auto [basis, unit] = detail::nondeg_tree_core(ctx, fs, std::nullopt, rng, res);
    res.basis = unit ? IdealBasis{{poly_constant(ctx, 1)}, true}
                     : reduce_basis(ctx, std::move(basis));
    return res;
  }
  if (mode != NondegMode::SgbTreeDeterministic)
    throw ConfigError("nondeg_sgbtree: unsupported mode");

  // extended ring: slack variable in front, original block dominant, so the
  // order restricted to slack-free monomials is the ambient DegRevLex
  std::vector<std::string> ext_vars = {detail::fresh_slack_name(ctx)};
  for (const auto& v : ctx.vars()) ext_vars.push_back(v);
  Context ext(ctx.prime(), ext_vars, MonomialOrder::block(ctx.nvars()));
  Monomial slack = ext.variable(0);

  std::vector<Polynomial> lifted;
  std::vector<Exponent> e(ext_vars.size());
  for (const Polynomial& f : fs) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      auto src = ctx.exponents(t.mono);
      e[0] = 0;
      std::copy(src.begin(), src.end(), e.begin() + 1);
      terms.push_back(Term{ext.make_monomial(e), t.coeff});
    }
    lifted.push_back(Polynomial(std::move(terms)));
  }

  auto [basis, unit] = detail::nondeg_tree_core(ext, lifted, slack, rng, res);
  if (unit) {
    ctx.ops() += ext.ops();
    res.basis = IdealBasis{{poly_constant(ctx, 1)}, true};
    return res;
  }

  // contract: the output generators never involve the slack variable
  std::vector<Polynomial> back;
  std::vector<Exponent> be(ctx.vars().size());
  for (const Polynomial& g : basis) {
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      auto src = ext.exponents(t.mono);
      if (src[0] != 0)
        throw std::logic_error("slack variable leaked into the locus basis");
      std::copy(src.begin() + 1, src.end(), be.begin());
      terms.push_back(Term{ctx.make_monomial(be), t.coeff});
    }
    back.push_back(poly_normalize(ctx, std::move(terms)));
  }
  ctx.ops() += ext.ops();
  // the contracted set is a Gröbner basis for the block order's slack-free
  // restriction; re-reduce in the ambient order, which may differ
  res.basis = buchberger(ctx, back);
  return res;
}

}  // namespace sgb
