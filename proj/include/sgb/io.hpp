#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sgb/polynomial.hpp"

namespace sgb {

// ----- canonical printing -----
//
// Terms in decreasing ambient order, coefficients as least nonnegative
// residues, explicit '*' between factors, '^' for powers. This form is
// byte-stable and parses back to the identical polynomial.

inline std::string to_string(const Context& ctx, Monomial m) {
  auto e = ctx.exponents(m);
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.vars()[i];
    if (e[i] > 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
  if (out.empty()) out = "1";
  return out;
}

inline std::string to_string(const Context& ctx, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    bool unit_mono = t.mono.id == 0;
    if (t.coeff != 1 || unit_mono) {
      out += std::to_string(t.coeff);
      if (!unit_mono) out += '*';
    }
    if (!unit_mono) out += to_string(ctx, t.mono);
  }
  return out;
}

inline std::string write_system(const Context& ctx,
                                const std::vector<Polynomial>& polys,
                                std::string_view comment = {}) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += "p " + std::to_string(ctx.prime()) + '\n';
  out += "vars ";
  for (std::size_t i = 0; i < ctx.vars().size(); ++i) {
    if (i) out += ", ";
    out += ctx.vars()[i];
  }
  out += '\n';
  for (const Polynomial& f : polys) {
    out += to_string(ctx, f);
    out += '\n';
  }
  return out;
}

// ----- parsing -----

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + what_),
        line(line_),
        col(col_) {}
};

namespace detail {

struct Token {
  enum class Kind { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  Lexer(std::string_view src, int line) : src_(src), line_(line) {}

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'))
      ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= src_.size()) return {Token::Kind::End, "", line_, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        ++pos_;
      return {Token::Kind::Ident, std::string(src_.substr(start, pos_ - start)),
              line_, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return {Token::Kind::Int, std::string(src_.substr(start, pos_ - start)),
              line_, col};
    }
    ++pos_;
    switch (c) {
      case '+': return {Token::Kind::Plus, "+", line_, col};
      case '-': return {Token::Kind::Minus, "-", line_, col};
      case '*': return {Token::Kind::Star, "*", line_, col};
      case '^': return {Token::Kind::Caret, "^", line_, col};
      case '(': return {Token::Kind::LParen, "(", line_, col};
      case ')': return {Token::Kind::RParen, ")", line_, col};
      default:
        throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
};

// Recursive-descent expression parser over +, -, *, ^ and parentheses.
// Implicit multiplication is a syntax error by construction.
class PolyParser {
 public:
  PolyParser(Context& ctx, std::string_view src, int line)
      : ctx_(ctx), lex_(src, line), line_(line) {
    advance();
  }

  Polynomial parse() {
    Polynomial p = expression();
    expect(Token::Kind::End, "end of line");
    return p;
  }

 private:
  Polynomial expression() {
    bool negate = false;
    if (tok_.kind == Token::Kind::Minus) {
      negate = true;
      advance();
    }
    Polynomial acc = term();
    if (negate) acc = poly_neg(ctx_, acc);
    while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
      bool minus = tok_.kind == Token::Kind::Minus;
      advance();
      Polynomial rhs = term();
      acc = minus ? poly_sub(ctx_, acc, rhs) : poly_add(ctx_, acc, rhs);
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (tok_.kind == Token::Kind::Star) {
      advance();
      acc = poly_mul(ctx_, acc, factor());
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (tok_.kind == Token::Kind::Caret) {
      advance();
      if (tok_.kind != Token::Kind::Int)
        throw ParseError(line_, tok_.col, "exponent must be an integer");
      unsigned long e = std::stoul(tok_.text);
      if (e > 0xffff) throw ParseError(line_, tok_.col, "exponent too large");
      advance();
      return poly_pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    switch (tok_.kind) {
      case Token::Kind::Ident: {
        int idx = -1;
        for (std::size_t i = 0; i < ctx_.vars().size(); ++i)
          if (ctx_.vars()[i] == tok_.text) idx = static_cast<int>(i);
        if (idx < 0)
          throw ParseError(line_, tok_.col, "unknown identifier '" + tok_.text + "'");
        advance();
        return poly_term(ctx_.variable(idx), 1);
      }
      case Token::Kind::Int: {
        Scalar v = 0;
        for (char c : tok_.text)
          v = static_cast<Scalar>((std::uint64_t(v) * 10 + (c - '0')) % ctx_.prime());
        advance();
        return poly_constant(ctx_, v);
      }
      case Token::Kind::LParen: {
        advance();
        Polynomial p = expression();
        expect(Token::Kind::RParen, "')'");
        return p;
      }
      case Token::Kind::Minus: {
        advance();
        return poly_neg(ctx_, factor());
      }
      default:
        throw ParseError(line_, tok_.col, "expected a term");
    }
  }

  Polynomial poly_pow(Polynomial base, unsigned e) {
    Polynomial acc = poly_constant(ctx_, 1);
    while (e > 0) {
      if (e & 1u) acc = poly_mul(ctx_, acc, base);
      e >>= 1u;
      if (e) base = poly_mul(ctx_, base, base);
    }
    return acc;
  }

  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k)
      throw ParseError(line_, tok_.col, std::string("expected ") + what);
    advance();
  }

  void advance() { tok_ = lex_.next(); }

  Context& ctx_;
  Lexer lex_;
  int line_;
  Token tok_;
};

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(std::move(cur));
  }
  return lines;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace detail

inline Polynomial parse_polynomial(Context& ctx, std::string_view src,
                                   int line = 1) {
  return detail::PolyParser(ctx, src, line).parse();
}

struct ParsedSystem {
  std::unique_ptr<Context> ctx;
  std::vector<Polynomial> polys;
};

// Grammar: a 'p <prime>' line, a 'vars a, b, c' line, then one polynomial
// per line. '#' starts a comment; blank lines are skipped; LF or CRLF.
inline ParsedSystem parse_system(std::string_view text,
                                 MonomialOrder order = MonomialOrder::degrevlex()) {
  auto lines = detail::split_lines(text);
  std::unique_ptr<Context> ctx;
  std::optional<Scalar> prime;
  std::vector<std::string> vars;
  std::vector<Polynomial> polys;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    int line_no = static_cast<int>(li) + 1;
    std::string body = detail::strip_comment(lines[li]);
    if (detail::blank(body)) continue;

    std::istringstream iss(body);
    std::string head;
    iss >> head;
    if (head == "p") {
      if (prime) throw ParseError(line_no, 1, "duplicate 'p' line");
      if (!vars.empty()) throw ParseError(line_no, 1, "'p' must precede 'vars'");
      unsigned long long v = 0;
      if (!(iss >> v) || v == 0 || v >= (1ull << 31))
        throw ParseError(line_no, 3, "expected a prime < 2^31");
      if (v < 3 || !detail::is_prime_u32(v))
        throw ParseError(line_no, 3, "characteristic is not an odd prime");
      std::string rest;
      if (iss >> rest) throw ParseError(line_no, 1, "trailing input after prime");
      prime = static_cast<Scalar>(v);
      continue;
    }
    if (head == "vars") {
      if (!prime) throw ParseError(line_no, 1, "'vars' requires a preceding 'p' line");
      if (!vars.empty()) throw ParseError(line_no, 1, "duplicate 'vars' line");
      std::string rest;
      std::getline(iss, rest);
      std::string name;
      auto flush = [&](int col) {
        if (name.empty()) throw ParseError(line_no, col, "empty variable name");
        for (const auto& v : vars)
          if (v == name) throw ParseError(line_no, col, "duplicate variable '" + name + "'");
        vars.push_back(name);
        name.clear();
      };
      int col = 6;
      for (char c : rest) {
        ++col;
        if (c == ' ' || c == '\t') continue;
        if (c == ',') {
          flush(col);
          continue;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
          if (name.empty() && std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(line_no, col, "variable cannot start with a digit");
          name += c;
          continue;
        }
        throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
      }
      if (!name.empty()) flush(col);
      if (vars.empty()) throw ParseError(line_no, 1, "no variables declared");
      ctx = std::make_unique<Context>(*prime, vars, order);
      continue;
    }
    if (!ctx) throw ParseError(line_no, 1, "polynomials must follow 'p' and 'vars' lines");
    polys.push_back(parse_polynomial(*ctx, body, line_no));
  }
  if (!ctx) throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                             "missing 'p' and 'vars' header");
  return ParsedSystem{std::move(ctx), std::move(polys)};
}

}  // namespace sgb
