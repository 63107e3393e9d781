#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgb/polynomial.hpp"

namespace sgb {

// Signature (index, monomial): ordered by index first, then by the ambient
// order on the monomial part. The index of a flat signature is the 1-based
// position of an input polynomial.
struct Signature {
  int index = 0;
  Monomial mono;
  bool operator==(const Signature&) const = default;
};

inline Cmp sig_compare(const Context& ctx, const Signature& a, const Signature& b) {
  if (a.index != b.index) return a.index < b.index ? Cmp::LT : Cmp::GT;
  return ctx.compare(a.mono, b.mono);
}

inline bool sig_divides(const Context& ctx, const Signature& a, const Signature& b) {
  return a.index == b.index && ctx.monomial_divides(a.mono, b.mono);
}

// Extended sig-poly pair (poly, signature, quotient). Two invariants travel
// with it: the monomial part of the signature equals lm(quo), and
// poly - quo * f_index lies in the ideal of the earlier inputs. The second
// one is checked in tests against the classical oracle, not at runtime.
struct SigPolyPair {
  Polynomial poly;
  Signature sig;
  Polynomial quo;
};

// S-pair of two extended sig-poly pairs, oriented so that s(a) >= s(b)
// (ties broken by argument order). Returns nothing for a singular pair,
// i.e. when the two multiplied signatures coincide. Inputs must be monic.
inline std::optional<SigPolyPair> make_spair(Context& ctx, const SigPolyPair& a,
                                             const SigPolyPair& b) {
  if (a.poly.is_zero() || b.poly.is_zero()) return std::nullopt;
  const SigPolyPair* hi = &a;
  const SigPolyPair* lo = &b;
  if (sig_compare(ctx, a.sig, b.sig) == Cmp::LT) std::swap(hi, lo);

  Monomial l = ctx.monomial_lcm(hi->poly.leading_monomial(),
                                lo->poly.leading_monomial());
  Monomial ma = ctx.monomial_div(l, hi->poly.leading_monomial());
  Monomial mb = ctx.monomial_div(l, lo->poly.leading_monomial());
  Signature sa{hi->sig.index, ctx.monomial_mul(ma, hi->sig.mono)};
  Signature sb{lo->sig.index, ctx.monomial_mul(mb, lo->sig.mono)};
  if (sa == sb) return std::nullopt;  // singular

  Polynomial poly = poly_sub(ctx, poly_mul_term(ctx, ma, 1, hi->poly),
                             poly_mul_term(ctx, mb, 1, lo->poly));
  Polynomial quo;
  if (hi->sig.index > lo->sig.index)
    quo = poly_mul_term(ctx, ma, 1, hi->quo);
  else
    quo = poly_sub(ctx, poly_mul_term(ctx, ma, 1, hi->quo),
                   poly_mul_term(ctx, mb, 1, lo->quo));
  Signature top = sig_compare(ctx, sa, sb) == Cmp::GT ? sa : sb;
  return SigPolyPair{std::move(poly), top, std::move(quo)};
}

// Regular reduction: top-reduction of alpha allowing only reducers beta
// with b * s(beta) strictly below s(alpha). Same-index reducers update the
// quotient; the signature never changes. Among eligible reducers the one
// inserted earliest wins. Elements of G must be monic.
inline SigPolyPair regular_reduce(Context& ctx, SigPolyPair alpha,
                                  std::span<const SigPolyPair> G) {
  for (;;) {
    if (alpha.poly.is_zero()) return alpha;
    Monomial lm = alpha.poly.leading_monomial();
    const SigPolyPair* red = nullptr;
    Monomial b = ctx.unit();
    for (const SigPolyPair& beta : G) {
      if (beta.poly.is_zero()) continue;
      if (!ctx.monomial_divides(beta.poly.leading_monomial(), lm)) continue;
      Monomial cand = ctx.monomial_div(lm, beta.poly.leading_monomial());
      Signature moved{beta.sig.index, ctx.monomial_mul(cand, beta.sig.mono)};
      if (sig_compare(ctx, moved, alpha.sig) != Cmp::LT) continue;
      red = &beta;
      b = cand;
      break;
    }
    if (red == nullptr) return alpha;
    Scalar c = alpha.poly.leading_coeff();
    alpha.poly = poly_sub(ctx, alpha.poly, poly_mul_term(ctx, b, c, red->poly));
    if (red->sig.index == alpha.sig.index)
      alpha.quo = poly_sub(ctx, alpha.quo, poly_mul_term(ctx, b, c, red->quo));
  }
}

// Rewritability of m * G[idx]: some delta in G proves the reduction at that
// signature redundant. Singular: a later element whose signature divides
// the multiplied signature. Syzygy: a recorded zero reduction whose
// signature divides it. Koszul: an element of lower index whose leading
// monomial divides its monomial part.
inline bool rewritable(Context& ctx, std::span<const SigPolyPair> G,
                       std::size_t idx, Monomial m) {
  const SigPolyPair& a = G[idx];
  Monomial target = ctx.monomial_mul(m, a.sig.mono);
  for (std::size_t d = 0; d < G.size(); ++d) {
    const SigPolyPair& delta = G[d];
    if (delta.sig.index == a.sig.index &&
        ctx.monomial_divides(delta.sig.mono, target)) {
      if (d > idx) return true;               // Singular
      if (delta.poly.is_zero()) return true;  // Syzygy
    } else if (delta.sig.index < a.sig.index && !delta.poly.is_zero() &&
               ctx.monomial_divides(delta.poly.leading_monomial(), target)) {
      return true;  // Koszul
    }
  }
  return false;
}

struct TraceRecord {
  Signature sig;
  bool rw_alpha = false;
  bool rw_beta = false;
  enum class Outcome { ReducedZero, ReducedNonZero, Skipped } outcome =
      Outcome::Skipped;
};

struct SigEngineResult {
  std::vector<Polynomial> basis;                  // nonzero poly parts of G
  std::vector<std::vector<Polynomial>> syzygies;  // syzygies[i] is S_{i+1}
  std::vector<SigPolyPair> g;                     // the full engine state
  std::vector<Polynomial> inputs;                 // monic inputs (f_index targets)
  std::uint64_t pairs_reduced = 0;
  std::uint64_t pairs_skipped = 0;
  std::vector<TraceRecord> trace;
};

namespace detail {

// Pending S-pair: stamps into the basis vector, alpha the side with the
// larger plain signature. The pair signature is cached for queue ordering.
struct FlatSPair {
  std::size_t alpha, beta;
  Signature sig;
};

class FlatSigEngine {
 public:
  FlatSigEngine(Context& ctx, const std::vector<Polynomial>& fs, bool rewrite,
                bool record_trace)
      : ctx_(ctx), rewrite_(rewrite), record_trace_(record_trace) {
    for (const Polynomial& f : fs) {
      if (f.is_zero())
        throw std::invalid_argument("signature engine: zero input polynomial");
      inputs_.push_back(poly_monic(ctx_, f));
    }
    syz_.resize(inputs_.size());
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      add_element(SigPolyPair{inputs_[i],
                              Signature{static_cast<int>(i) + 1, ctx_.unit()},
                              poly_constant(ctx_, 1)});
    }
  }

  SigEngineResult run() {
    while (!pairs_.empty()) step();
    SigEngineResult res;
    for (const SigPolyPair& a : g_)
      if (!a.poly.is_zero()) res.basis.push_back(a.poly);
    res.syzygies = syz_;
    res.g = g_;
    res.inputs = inputs_;
    res.pairs_reduced = reduced_;
    res.pairs_skipped = skipped_;
    res.trace = std::move(trace_);
    return res;
  }

 private:
  void add_element(SigPolyPair gamma) {
    std::size_t stamp = g_.size();
    g_.push_back(std::move(gamma));
    if (g_.back().poly.is_zero()) return;
    for (std::size_t j = 0; j < stamp; ++j) try_pair(stamp, j);
  }

  void try_pair(std::size_t i, std::size_t j) {
    const SigPolyPair& a = g_[i];
    const SigPolyPair& b = g_[j];
    if (a.poly.is_zero() || b.poly.is_zero()) return;
    std::size_t hi = i, lo = j;
    Cmp c = sig_compare(ctx_, a.sig, b.sig);
    if (c == Cmp::LT || (c == Cmp::EQ && i < j)) std::swap(hi, lo);

    Monomial l = ctx_.monomial_lcm(g_[hi].poly.leading_monomial(),
                                   g_[lo].poly.leading_monomial());
    Monomial ma = ctx_.monomial_div(l, g_[hi].poly.leading_monomial());
    Monomial mb = ctx_.monomial_div(l, g_[lo].poly.leading_monomial());
    Signature sa{g_[hi].sig.index, ctx_.monomial_mul(ma, g_[hi].sig.mono)};
    Signature sb{g_[lo].sig.index, ctx_.monomial_mul(mb, g_[lo].sig.mono)};
    if (sa == sb) return;  // singular
    Signature top = sig_compare(ctx_, sa, sb) == Cmp::GT ? sa : sb;
    pairs_.push_back(FlatSPair{hi, lo, top});
  }

  std::pair<Monomial, Monomial> multipliers(const FlatSPair& p) {
    Monomial l = ctx_.monomial_lcm(g_[p.alpha].poly.leading_monomial(),
                                   g_[p.beta].poly.leading_monomial());
    return {ctx_.monomial_div(l, g_[p.alpha].poly.leading_monomial()),
            ctx_.monomial_div(l, g_[p.beta].poly.leading_monomial())};
  }

  // Minimal pair signature; ties go to the pair whose newer element was
  // inserted first, then to the older element's stamp.
  std::size_t pick_min_pair() const {
    std::size_t best = 0;
    auto key = [](const FlatSPair& p) {
      return std::pair(std::max(p.alpha, p.beta), std::min(p.alpha, p.beta));
    };
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      Cmp c = sig_compare(ctx_, pairs_[k].sig, pairs_[best].sig);
      if (c == Cmp::LT || (c == Cmp::EQ && key(pairs_[k]) < key(pairs_[best])))
        best = k;
    }
    return best;
  }

  void step() {
    std::size_t k = pick_min_pair();
    FlatSPair p = pairs_[k];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));

    TraceRecord rec{p.sig, false, false, TraceRecord::Outcome::Skipped};
    if (rewrite_) {
      auto [ma, mb] = multipliers(p);
      rec.rw_alpha = rewritable(ctx_, g_, p.alpha, ma);
      rec.rw_beta = !rec.rw_alpha && rewritable(ctx_, g_, p.beta, mb);
      if (rec.rw_alpha || rec.rw_beta) {
        ++skipped_;
        if (record_trace_) trace_.push_back(rec);
        return;
      }
    }

    auto sp = make_spair(ctx_, g_[p.alpha], g_[p.beta]);
    assert(sp && sp->sig == p.sig);
    SigPolyPair gamma = regular_reduce(ctx_, std::move(*sp), g_);
    ++reduced_;
    if (!gamma.poly.is_zero()) {
      rec.outcome = TraceRecord::Outcome::ReducedNonZero;
      Scalar inv = ctx_.inv(gamma.poly.leading_coeff());
      gamma.poly = poly_scale(ctx_, inv, gamma.poly);
      gamma.quo = poly_scale(ctx_, inv, gamma.quo);
      if (!duplicate(gamma)) add_element(std::move(gamma));
    } else {
      rec.outcome = TraceRecord::Outcome::ReducedZero;
      if (!gamma.quo.is_zero()) {  // guard against degenerate zero quotients
        Scalar inv = ctx_.inv(gamma.quo.leading_coeff());
        gamma.quo = poly_scale(ctx_, inv, gamma.quo);
        record_syzygy(std::move(gamma));
      }
    }
    if (record_trace_) trace_.push_back(rec);
  }

  // G and the S_i are sets in spirit; without the rewritability check the
  // same reduction result can reappear at repeated signatures.
  bool duplicate(const SigPolyPair& gamma) const {
    for (const SigPolyPair& d : g_)
      if (d.sig == gamma.sig && d.poly == gamma.poly && d.quo == gamma.quo)
        return true;
    return false;
  }

  void record_syzygy(SigPolyPair gamma) {
    auto& bucket = syz_[static_cast<std::size_t>(gamma.sig.index) - 1];
    for (const Polynomial& h : bucket)
      if (h == gamma.quo) return;
    bucket.push_back(gamma.quo);
    g_.push_back(std::move(gamma));
  }

  Context& ctx_;
  bool rewrite_;
  bool record_trace_;
  std::vector<Polynomial> inputs_;
  std::vector<SigPolyPair> g_;
  std::vector<FlatSPair> pairs_;
  std::vector<std::vector<Polynomial>> syz_;
  std::uint64_t reduced_ = 0;
  std::uint64_t skipped_ = 0;
  std::vector<TraceRecord> trace_;
};

}  // namespace detail

// Buchberger with signatures: no pair is discarded, every popped S-pair is
// regular-reduced in increasing signature order. Returns the basis, the
// quotients recorded from zero reductions, and the full engine state.
inline SigEngineResult buchberger_sig(Context& ctx,
                                      const std::vector<Polynomial>& fs,
                                      bool record_trace = false) {
  return detail::FlatSigEngine(ctx, fs, /*rewrite=*/false, record_trace).run();
}

// Same loop with the rewritability criterion: S-pairs whose reduction is
// predicted redundant (Singular) or predicted zero (Syzygy, Koszul) are
// skipped before any arithmetic is spent on them.
inline SigEngineResult sgb(Context& ctx, const std::vector<Polynomial>& fs,
                           bool record_trace = false) {
  return detail::FlatSigEngine(ctx, fs, /*rewrite=*/true, record_trace).run();
}

}  // namespace sgb
