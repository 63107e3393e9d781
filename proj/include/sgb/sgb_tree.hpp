#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgb/polynomial.hpp"

namespace sgb {

// Node label in an sGB tree. Labels are assigned as (largest label) + 1 and
// never reused, so they grow with insertion time; the *index order* is the
// ancestor-descendant relation, not label value.
using NodeLabel = std::uint32_t;

// Signature whose index is a tree node. Comparable only along root-to-leaf
// paths: an ancestor index is smaller than any of its descendants.
struct TreeSig {
  NodeLabel node = 0;
  Monomial mono;
  bool operator==(const TreeSig&) const = default;
};

struct TreeSigPoly {
  Polynomial poly;
  TreeSig sig;
  Polynomial quo;
};

// One record per popped S-pair, for ancestry-filter and ordering assertions.
struct TreeTraceRecord {
  NodeLabel request;  // the node whose Basis/GetSyzygy call popped the pair
  NodeLabel alpha_index, beta_index;
  TreeSig sig;
  enum class Outcome { ReducedZero, ReducedNonZero, Skipped } outcome;
};

// Rooted tree of polynomial nodes sharing one signature-basis state: the set
// G of extended sig-poly pairs, the pending pair set P, and a syzygy bucket
// S_v per node. Node insertion seeds new S-pairs; Basis and GetSyzygy drive
// the shared engine restricted to the ancestry of the requested node, so
// work done for one branch is never spent on pairs of another.
class SgbTree {
 public:
  explicit SgbTree(Context& ctx) : ctx_(ctx) {}

  SgbTree(const SgbTree&) = delete;
  SgbTree& operator=(const SgbTree&) = delete;

  // ----- tree shape -----

  bool empty() const { return nodes_.empty(); }
  std::size_t node_count() const { return nodes_.size(); }

  const Polynomial& node_poly(NodeLabel v) const { return node(v).poly; }

  std::optional<NodeLabel> parent(NodeLabel v) const {
    NodeLabel p = node(v).parent;
    if (p == 0) return std::nullopt;
    return p;
  }

  const std::vector<NodeLabel>& children(NodeLabel v) const {
    return node(v).children;
  }

  // a <=_T b: a lies on the path from the root to b
  bool ancestor_or_self(NodeLabel a, NodeLabel b) const {
    check_label(a);
    for (NodeLabel cur = b; cur != 0; cur = node(cur).parent)
      if (cur == a) return true;
    return false;
  }

  bool comparable(NodeLabel a, NodeLabel b) const {
    return ancestor_or_self(a, b) || ancestor_or_self(b, a);
  }

  // ----- the three operations -----

  NodeLabel insert_root(const Polynomial& f) {
    if (!nodes_.empty())
      throw std::invalid_argument("tree already has a root");
    return attach(f, 0, 0);
  }

  NodeLabel insert_leaf_under(const Polynomial& f, NodeLabel parent_label) {
    check_label(parent_label);
    return attach(f, parent_label, 0);
  }

  NodeLabel insert_edge_above(const Polynomial& f, NodeLabel below) {
    check_label(below);
    return attach(f, node(below).parent, below);
  }

  // Gröbner basis of the ideal generated by the polynomials on the path
  // from the root to v inclusive.
  std::vector<Polynomial> basis(NodeLabel v) {
    check_label(v);
    while (process_spair(v)) {
    }
    std::vector<Polynomial> out;
    for (const TreeSigPoly& a : g_)
      if (!a.poly.is_zero() && ancestor_or_self(a.sig.node, v))
        out.push_back(a.poly);
    return out;
  }

  // One element of I_{<v} : poly(v), or zero once I_{<v} together with the
  // previously returned elements generates the whole colon ideal. Processing
  // stops as soon as the bucket S_v becomes nonempty.
  Polynomial get_syzygy(NodeLabel v) {
    check_label(v);
    while (node(v).syzygies.empty() && process_spair(v)) {
    }
    auto& bucket = node_mut(v).syzygies;
    if (bucket.empty()) return Polynomial{};
    Polynomial h = bucket.front();
    bucket.erase(bucket.begin());
    return h;
  }

  // Processes the minimal-signature pending pair whose indices lie on the
  // root-to-v path. Returns false (and does nothing) when no such pair is
  // left. A popped pair that fails the rewritability check is consumed
  // without reduction.
  bool process_spair(NodeLabel v) {
    std::vector<int> rank = path_rank(v);
    std::size_t best = pairs_.size();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (rank[pairs_[k].sig.node] < 0) continue;
      if (best == pairs_.size() || pair_less(rank, pairs_[k], pairs_[best]))
        best = k;
    }
    if (best == pairs_.size()) return false;

    TreeSPair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    TreeTraceRecord rec{v, g_[p.alpha].sig.node, g_[p.beta].sig.node, p.sig,
                        TreeTraceRecord::Outcome::Skipped};

    auto [ma, mb] = multipliers(p);
    bool rw = rewritable(p.alpha, ma) || rewritable(p.beta, mb);
    if (rw) {
      ++pairs_skipped_;
      trace_.push_back(rec);
      return true;
    }

    TreeSigPoly gamma = regular_reduce(build_spair(p));
    ++pairs_reduced_;
    if (!gamma.poly.is_zero()) {
      rec.outcome = TreeTraceRecord::Outcome::ReducedNonZero;
      Scalar inv = ctx_.inv(gamma.poly.leading_coeff());
      gamma.poly = poly_scale(ctx_, inv, gamma.poly);
      gamma.quo = poly_scale(ctx_, inv, gamma.quo);
      add_element(std::move(gamma));
    } else {
      rec.outcome = TreeTraceRecord::Outcome::ReducedZero;
      if (!gamma.quo.is_zero()) {
        Scalar inv = ctx_.inv(gamma.quo.leading_coeff());
        gamma.quo = poly_scale(ctx_, inv, gamma.quo);
        record_syzygy(std::move(gamma));
      }
    }
    trace_.push_back(rec);
    return true;
  }

  // The re-seeding hook: appends a fresh unit-signature entry for poly(v)
  // unless an entry with signature (v, 1) is already present, which the
  // node's own insertion guarantees. Deduplicated by signature.
  void seed_node_pair(NodeLabel v) {
    check_label(v);
    TreeSig sig{v, ctx_.unit()};
    for (const TreeSigPoly& a : g_)
      if (a.sig == sig) return;
    seed_entry(node(v).poly, v);
  }

  // ----- introspection -----

  std::uint64_t pairs_reduced() const { return pairs_reduced_; }
  std::uint64_t pairs_skipped() const { return pairs_skipped_; }
  std::size_t pending_pairs() const { return pairs_.size(); }
  std::size_t syzygy_bucket_size(NodeLabel v) const { return node(v).syzygies.size(); }
  const std::vector<TreeSigPoly>& state() const { return g_; }
  const std::vector<TreeTraceRecord>& trace() const { return trace_; }

  // Structured dump of the tree shape: one line per node with parent link,
  // polynomial and syzygy bucket size.
  std::string dump() const;

 private:
  struct Node {
    NodeLabel parent = 0;  // 0 = root
    std::vector<NodeLabel> children;
    Polynomial poly;
    std::vector<Polynomial> syzygies;  // S_v, consumed front-first
  };

  struct TreeSPair {
    std::size_t alpha, beta;  // stamps into g_; alpha has the larger signature
    TreeSig sig;
  };

  const Node& node(NodeLabel v) const {
    check_label(v);
    return nodes_[v - 1];
  }
  Node& node_mut(NodeLabel v) {
    check_label(v);
    return nodes_[v - 1];
  }

  void check_label(NodeLabel v) const {
    if (v == 0 || v > nodes_.size())
      throw std::invalid_argument("no such tree node");
  }

  NodeLabel attach(const Polynomial& f, NodeLabel parent_label, NodeLabel below) {
    NodeLabel label = static_cast<NodeLabel>(nodes_.size()) + 1;
    Node n;
    n.parent = parent_label;
    n.poly = f.is_zero() ? f : poly_monic(ctx_, f);
    if (below != 0) {
      // edge insertion: the new node takes over the edge above `below`
      n.children.push_back(below);
      if (parent_label != 0) {
        auto& sib = nodes_[parent_label - 1].children;
        *std::find(sib.begin(), sib.end(), below) = label;
      }
      nodes_[below - 1].parent = label;
    }
    nodes_.push_back(std::move(n));
    if (parent_label != 0) nodes_[parent_label - 1].children.push_back(label);
    seed_entry(nodes_.back().poly, label);
    return label;
  }

  // Adds the unit-signature entry (f, (label, 1), 1) and its regular
  // S-pairs against every comparable-index member of G.
  void seed_entry(const Polynomial& f, NodeLabel label) {
    add_element(TreeSigPoly{f, TreeSig{label, ctx_.unit()},
                            poly_constant(ctx_, 1)});
  }

  void add_element(TreeSigPoly gamma) {
    std::size_t stamp = g_.size();
    g_.push_back(std::move(gamma));
    if (g_.back().poly.is_zero()) return;
    for (std::size_t j = 0; j < stamp; ++j) try_pair(stamp, j);
  }

  // Signature order along a path; callers must pass comparable indices.
  Cmp sig_less_key(const TreeSig& a, const TreeSig& b) const {
    if (a.node != b.node) {
      assert(comparable(a.node, b.node));
      return ancestor_or_self(a.node, b.node) ? Cmp::LT : Cmp::GT;
    }
    return ctx_.compare(a.mono, b.mono);
  }

  void try_pair(std::size_t i, std::size_t j) {
    const TreeSigPoly& a = g_[i];
    const TreeSigPoly& b = g_[j];
    if (a.poly.is_zero() || b.poly.is_zero()) return;
    if (!comparable(a.sig.node, b.sig.node)) return;

    std::size_t hi = i, lo = j;
    Cmp c = sig_less_key(a.sig, b.sig);
    if (c == Cmp::LT || (c == Cmp::EQ && i < j)) std::swap(hi, lo);

    Monomial l = ctx_.monomial_lcm(g_[hi].poly.leading_monomial(),
                                   g_[lo].poly.leading_monomial());
    Monomial ma = ctx_.monomial_div(l, g_[hi].poly.leading_monomial());
    Monomial mb = ctx_.monomial_div(l, g_[lo].poly.leading_monomial());
    TreeSig sa{g_[hi].sig.node, ctx_.monomial_mul(ma, g_[hi].sig.mono)};
    TreeSig sb{g_[lo].sig.node, ctx_.monomial_mul(mb, g_[lo].sig.mono)};
    if (sa == sb) return;  // singular
    TreeSig top = sig_less_key(sa, sb) == Cmp::GT ? sa : sb;
    pairs_.push_back(TreeSPair{hi, lo, top});
  }

  std::pair<Monomial, Monomial> multipliers(const TreeSPair& p) {
    Monomial l = ctx_.monomial_lcm(g_[p.alpha].poly.leading_monomial(),
                                   g_[p.beta].poly.leading_monomial());
    return {ctx_.monomial_div(l, g_[p.alpha].poly.leading_monomial()),
            ctx_.monomial_div(l, g_[p.beta].poly.leading_monomial())};
  }

  TreeSigPoly build_spair(const TreeSPair& p) {
    auto [ma, mb] = multipliers(p);
    const TreeSigPoly& a = g_[p.alpha];
    const TreeSigPoly& b = g_[p.beta];
    Polynomial poly = poly_sub(ctx_, poly_mul_term(ctx_, ma, 1, a.poly),
                               poly_mul_term(ctx_, mb, 1, b.poly));
    Polynomial quo;
    if (a.sig.node != b.sig.node)  // alpha is the deeper index
      quo = poly_mul_term(ctx_, ma, 1, a.quo);
    else
      quo = poly_sub(ctx_, poly_mul_term(ctx_, ma, 1, a.quo),
                     poly_mul_term(ctx_, mb, 1, b.quo));
    return TreeSigPoly{std::move(poly), p.sig, std::move(quo)};
  }

  // rank of each label on the root-to-v path, -1 elsewhere; index 0 unused
  std::vector<int> path_rank(NodeLabel v) const {
    std::vector<NodeLabel> path;
    for (NodeLabel cur = v; cur != 0; cur = node(cur).parent) path.push_back(cur);
    std::vector<int> rank(nodes_.size() + 1, -1);
    for (std::size_t k = 0; k < path.size(); ++k)
      rank[path[path.size() - 1 - k]] = static_cast<int>(k);
    return rank;
  }

  bool pair_less(const std::vector<int>& rank, const TreeSPair& a,
                 const TreeSPair& b) const {
    if (rank[a.sig.node] != rank[b.sig.node])
      return rank[a.sig.node] < rank[b.sig.node];
    Cmp c = ctx_.compare(a.sig.mono, b.sig.mono);
    if (c != Cmp::EQ) return c == Cmp::LT;
    auto key = [](const TreeSPair& p) {
      return std::pair(std::max(p.alpha, p.beta), std::min(p.alpha, p.beta));
    };
    return key(a) < key(b);
  }

  bool rewritable(std::size_t idx, Monomial m) const {
    const TreeSigPoly& a = g_[idx];
    Monomial target = ctx_.monomial_mul(m, a.sig.mono);
    for (std::size_t d = 0; d < g_.size(); ++d) {
      const TreeSigPoly& delta = g_[d];
      if (delta.sig.node == a.sig.node &&
          ctx_.monomial_divides(delta.sig.mono, target)) {
        if (d > idx) return true;               // Singular
        if (delta.poly.is_zero()) return true;  // Syzygy
      } else if (delta.sig.node != a.sig.node && !delta.poly.is_zero() &&
                 ancestor_or_self(delta.sig.node, a.sig.node) &&
                 ctx_.monomial_divides(delta.poly.leading_monomial(), target)) {
        return true;  // Koszul: delta's index is a strict ancestor
      }
    }
    return false;
  }

  // Top-reduction by members whose multiplied signature sits strictly below
  // s(alpha) along alpha's own path; incomparable indices never reduce.
  TreeSigPoly regular_reduce(TreeSigPoly alpha) {
    for (;;) {
      if (alpha.poly.is_zero()) return alpha;
      Monomial lm = alpha.poly.leading_monomial();
      const TreeSigPoly* red = nullptr;
      Monomial b = ctx_.unit();
      for (const TreeSigPoly& beta : g_) {
        if (beta.poly.is_zero()) continue;
        if (!ctx_.monomial_divides(beta.poly.leading_monomial(), lm)) continue;
        if (beta.sig.node == alpha.sig.node) {
          Monomial cand = ctx_.monomial_div(lm, beta.poly.leading_monomial());
          if (ctx_.compare(ctx_.monomial_mul(cand, beta.sig.mono),
                           alpha.sig.mono) != Cmp::LT)
            continue;
          red = &beta;
          b = cand;
        } else if (ancestor_or_self(beta.sig.node, alpha.sig.node)) {
          red = &beta;  // strict ancestor: any multiple stays below s(alpha)
          b = ctx_.monomial_div(lm, beta.poly.leading_monomial());
        } else {
          continue;
        }
        break;  // earliest eligible reducer wins
      }
      if (red == nullptr) return alpha;
      Scalar c = alpha.poly.leading_coeff();
      alpha.poly = poly_sub(ctx_, alpha.poly, poly_mul_term(ctx_, b, c, red->poly));
      if (red->sig.node == alpha.sig.node)
        alpha.quo = poly_sub(ctx_, alpha.quo, poly_mul_term(ctx_, b, c, red->quo));
    }
  }

  void record_syzygy(TreeSigPoly gamma) {
    // the bucket is consumed by get_syzygy, so dedup against G itself
    for (const TreeSigPoly& d : g_)
      if (d.sig == gamma.sig && d.poly.is_zero() && d.quo == gamma.quo) return;
    node_mut(gamma.sig.node).syzygies.push_back(gamma.quo);
    g_.push_back(std::move(gamma));
  }

  Context& ctx_;
  std::vector<Node> nodes_;  // label v lives at nodes_[v - 1]
  std::vector<TreeSigPoly> g_;
  std::vector<TreeSPair> pairs_;
  std::vector<TreeTraceRecord> trace_;
  std::uint64_t pairs_reduced_ = 0;
  std::uint64_t pairs_skipped_ = 0;
};

inline std::string SgbTree::dump() const {
  std::string out;
  for (NodeLabel v = 1; v <= nodes_.size(); ++v) {
    const Node& n = nodes_[v - 1];
    out += "node " + std::to_string(v);
    out += " parent " + (n.parent == 0 ? std::string("-") : std::to_string(n.parent));
    out += " syz " + std::to_string(n.syzygies.size());
    out += " poly ";
    out += n.poly.is_zero() ? "0" : "<" + std::to_string(n.poly.size()) + " terms>";
    out += '\n';
  }
  return out;
}

}  // namespace sgb
