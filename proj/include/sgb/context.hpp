#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sgb {

// Residue in [0, p). All field arithmetic goes through Context so that the
// operation counter sees every multiplication, addition and inversion.
using Scalar = std::uint32_t;

// Exponents are 16-bit with checked arithmetic; benchmark degrees stay far
// below the bound and silent wraparound would corrupt every order comparison.
using Exponent = std::uint16_t;

struct OpCounter {
  std::uint64_t mul_count = 0;
  std::uint64_t addsub_count = 0;
  std::uint64_t inv_count = 0;

  std::uint64_t total() const { return mul_count + addsub_count + inv_count; }

  OpCounter& operator+=(const OpCounter& o) {
    mul_count += o.mul_count;
    addsub_count += o.addsub_count;
    inv_count += o.inv_count;
    return *this;
  }
  bool operator==(const OpCounter&) const = default;
};

enum class Cmp { LT, EQ, GT };

// DegRevLex and Lex are the usual orders. Block(k) makes the trailing k
// variables dominant (DegRevLex inside each block), so a Gröbner basis in
// Block(k) eliminates those k variables.
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex, Block };
  Kind kind = Kind::DegRevLex;
  int block_size = 0;  // only meaningful for Kind::Block

  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block(int k) { return {Kind::Block, k}; }

  bool operator==(const MonomialOrder&) const = default;
};

// Interned monomial handle. Valid only with the Context that produced it;
// equal ids mean equal exponent vectors.
struct Monomial {
  std::uint32_t id = 0;
  bool operator==(const Monomial&) const = default;
};

namespace detail {
struct ExpVecHash {
  std::size_t operator()(const std::vector<Exponent>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Exponent e : v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace detail

// A computation context: prime field, named variables, ambient monomial
// order, the monomial interning table and the arithmetic-operation counter.
// Single-threaded by design; independent contexts may live on separate
// threads.
class Context {
 public:
  Context(Scalar prime, std::vector<std::string> vars,
          MonomialOrder order = MonomialOrder::degrevlex())
      : prime_(prime), vars_(std::move(vars)), order_(order) {
    if (prime_ < 3 || prime_ >= (1u << 31) || !detail::is_prime_u32(prime_))
      throw std::invalid_argument("characteristic must be an odd prime < 2^31");
    if (vars_.empty()) throw std::invalid_argument("need at least one variable");
    if (order_.kind == MonomialOrder::Kind::Block &&
        (order_.block_size <= 0 || order_.block_size >= nvars()))
      throw std::invalid_argument("block size out of range");
    intern(std::vector<Exponent>(vars_.size(), 0));  // id 0 is the unit
  }

  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  Scalar prime() const { return prime_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  OpCounter& ops() { return ops_; }
  const OpCounter& ops() const { return ops_; }

  // ----- field arithmetic (counted) -----

  Scalar add(Scalar a, Scalar b) {
    ++ops_.addsub_count;
    Scalar s = a + b;
    if (s >= prime_) s -= prime_;
    return s;
  }

  Scalar sub(Scalar a, Scalar b) {
    ++ops_.addsub_count;
    return a >= b ? a - b : a + prime_ - b;
  }

  Scalar neg(Scalar a) {
    ++ops_.addsub_count;
    return a == 0 ? 0 : prime_ - a;
  }

  Scalar mul(Scalar a, Scalar b) {
    ++ops_.mul_count;
    return static_cast<Scalar>(std::uint64_t(a) * b % prime_);
  }

  Scalar inv(Scalar a) {
    if (a == 0) throw std::domain_error("inverse of zero");
    ++ops_.inv_count;
    // extended Euclid on (a, p); p prime so gcd is 1
    std::int64_t t = 0, nt = 1, r = prime_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    if (t < 0) t += prime_;
    return static_cast<Scalar>(t);
  }

  Scalar reduce_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(prime_);
    if (m < 0) m += prime_;
    return static_cast<Scalar>(m);
  }

  // ----- monomials -----

  Monomial unit() const { return Monomial{0}; }

  Monomial make_monomial(std::span<const Exponent> exps) {
    if (exps.size() != vars_.size())
      throw std::invalid_argument("exponent vector has wrong length");
    scratch_.assign(exps.begin(), exps.end());
    return Monomial{intern_scratch()};
  }

  Monomial variable(int i) {
    assert(i >= 0 && i < nvars());
    scratch_.assign(vars_.size(), 0);
    scratch_[static_cast<std::size_t>(i)] = 1;
    return Monomial{intern_scratch()};
  }

  std::span<const Exponent> exponents(Monomial m) const {
    assert(m.id < by_id_.size());
    return *by_id_[m.id];
  }

  std::uint32_t degree(Monomial m) const {
    assert(m.id < deg_.size());
    return deg_[m.id];
  }

  Monomial monomial_mul(Monomial a, Monomial b) {
    auto ea = exponents(a), eb = exponents(b);
    scratch_.resize(vars_.size());
    for (std::size_t i = 0; i < scratch_.size(); ++i) {
      std::uint32_t s = std::uint32_t(ea[i]) + eb[i];
      if (s > std::numeric_limits<Exponent>::max())
        throw std::overflow_error("monomial exponent overflow");
      scratch_[i] = static_cast<Exponent>(s);
    }
    return Monomial{intern_scratch()};
  }

  bool monomial_divides(Monomial a, Monomial b) const {
    if (deg_[a.id] > deg_[b.id]) return false;
    auto ea = exponents(a), eb = exponents(b);
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (ea[i] > eb[i]) return false;
    return true;
  }

  // a / b; requires b | a
  Monomial monomial_div(Monomial a, Monomial b) {
    auto ea = exponents(a), eb = exponents(b);
    scratch_.resize(vars_.size());
    for (std::size_t i = 0; i < scratch_.size(); ++i) {
      if (eb[i] > ea[i]) throw std::invalid_argument("monomial_div: not a divisor");
      scratch_[i] = static_cast<Exponent>(ea[i] - eb[i]);
    }
    return Monomial{intern_scratch()};
  }

  Monomial monomial_lcm(Monomial a, Monomial b) {
    auto ea = exponents(a), eb = exponents(b);
    scratch_.resize(vars_.size());
    for (std::size_t i = 0; i < scratch_.size(); ++i)
      scratch_[i] = ea[i] >= eb[i] ? ea[i] : eb[i];
    return Monomial{intern_scratch()};
  }

  bool coprime(Monomial a, Monomial b) const {
    auto ea = exponents(a), eb = exponents(b);
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (ea[i] != 0 && eb[i] != 0) return false;
    return true;
  }

  Cmp compare(Monomial a, Monomial b) const {
    if (a == b) return Cmp::EQ;
    auto ea = exponents(a), eb = exponents(b);
    switch (order_.kind) {
      case MonomialOrder::Kind::DegRevLex:
        return cmp_drl(ea, eb, 0, nvars());
      case MonomialOrder::Kind::Lex:
        for (int i = 0; i < nvars(); ++i) {
          if (ea[i] != eb[i]) return ea[i] > eb[i] ? Cmp::GT : Cmp::LT;
        }
        return Cmp::EQ;
      case MonomialOrder::Kind::Block: {
        int split = nvars() - order_.block_size;
        Cmp hi = cmp_drl(ea, eb, split, nvars());
        if (hi != Cmp::EQ) return hi;
        return cmp_drl(ea, eb, 0, split);
      }
    }
    return Cmp::EQ;  // unreachable
  }

  bool less(Monomial a, Monomial b) const { return compare(a, b) == Cmp::LT; }
  bool greater(Monomial a, Monomial b) const { return compare(a, b) == Cmp::GT; }

 private:
  static Cmp cmp_drl(std::span<const Exponent> ea, std::span<const Exponent> eb,
                     int lo, int hi) {
    std::uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += ea[i];
      db += eb[i];
    }
    if (da != db) return da > db ? Cmp::GT : Cmp::LT;
    // graded reverse lex: last differing exponent, smaller one wins
    for (int i = hi - 1; i >= lo; --i) {
      if (ea[i] != eb[i]) return ea[i] < eb[i] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
  }

  std::uint32_t intern(std::vector<Exponent> v) {
    scratch_ = std::move(v);
    return intern_scratch();
  }

  std::uint32_t intern_scratch() {
    auto it = table_.find(scratch_);
    if (it != table_.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(by_id_.size());
    std::uint32_t deg = 0;
    for (Exponent e : scratch_) deg += e;
    auto [pos, inserted] = table_.emplace(scratch_, id);
    by_id_.push_back(&pos->first);
    deg_.push_back(deg);
    return id;
  }

  Scalar prime_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  OpCounter ops_;

  std::unordered_map<std::vector<Exponent>, std::uint32_t, detail::ExpVecHash> table_;
  std::vector<const std::vector<Exponent>*> by_id_;  // key pointers are stable
  std::vector<std::uint32_t> deg_;
  std::vector<Exponent> scratch_;
};

}  // namespace sgb
