// Textual presentations of rings F_p[x_1..x_n]/(f_1..f_m) and ideals: lexer,
// recursive-descent parser with line/column diagnostics, canonical printing,
// and the origin-support validation that makes colengths meaningful.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hk/fp.hpp"
#include "hk/groebner.hpp"
#include "hk/poly.hpp"

namespace hk {

// Syntax errors: malformed tokens or structure.  Reported with 1-based
// line/column of the offending token.
class ParseError : public std::runtime_error {
 public:
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Semantic errors: syntactically valid input that violates a requirement
// (non-prime characteristic, unknown variable, generator not in the maximal
// ideal, duplicate variable, ...).
class ValidationError : public std::runtime_error {
 public:
  int line, col;
  explicit ValidationError(const std::string& msg, int line_ = 0, int col_ = 0)
      : std::runtime_error(line_ > 0 ? "validation error at " + std::to_string(line_) +
                                           ":" + std::to_string(col_) + ": " + msg
                                     : "validation error: " + msg),
        line(line_),
        col(col_) {}
};

struct RingPresentation {
  std::uint32_t p = 2;
  std::vector<std::string> vars;
  OrderKind order = OrderKind::degrevlex;
  std::vector<Poly> defining; // empty = polynomial ring; all in the maximal ideal
  unsigned dimension = 0;     // Krull dimension of the quotient, set by parse

  Ambient ambient() const {
    return Ambient{p, (std::uint32_t)vars.size(), MonomialOrder(order)};
  }
  bool is_polynomial_ring() const { return defining.empty(); }
};

struct IdealSpec {
  std::vector<Poly> generators; // all with zero constant term
  // Upper bound for the minimal generator count used by generator-sensitive
  // closed-form bounds; the variable count always works for ideals inside m.
  unsigned t_upper = 0;
};

struct ParsedProblem {
  RingPresentation ring;
  IdealSpec ideal;
};

namespace detail {

struct Token {
  enum class Kind { ident, integer, punct, eof };
  Kind kind = Kind::eof;
  std::string text;   // ident text or punct character
  std::uint64_t ival = 0; // value for integer tokens, saturated at ival_cap
  bool ival_overflow = false;
  int line = 1, col = 1;
};

inline constexpr std::uint64_t ival_cap = 1000000000000000ull; // 10^15

class Lexer {
 public:
  explicit Lexer(std::string text) : text_(std::move(text)) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::eof;
      tok_.text = "end of input";
      return;
    }
    char c = text_[pos_];
    if (is_ident_start(c)) {
      tok_.kind = Token::Kind::ident;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        tok_.text += text_[pos_];
        bump();
      }
      return;
    }
    if (c >= '0' && c <= '9') {
      tok_.kind = Token::Kind::integer;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        int d = text_[pos_] - '0';
        if (tok_.ival > (ival_cap - d) / 10)
          tok_.ival_overflow = true;
        else
          tok_.ival = tok_.ival * 10 + d;
        tok_.text += text_[pos_];
        bump();
      }
      if (pos_ < text_.size() && is_ident_start(text_[pos_]))
        throw ParseError("identifier may not start with a digit", tok_.line, tok_.col);
      return;
    }
    static const std::string puncts = "=;,[]+-*^()";
    if (puncts.find(c) != std::string::npos) {
      tok_.kind = Token::Kind::punct;
      tok_.text = std::string(1, c);
      bump();
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, col_);
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

  std::string text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

[[noreturn]] inline void expected(const char* what, const Token& got) {
  std::string saw = got.kind == Token::Kind::eof ? "end of input" : "'" + got.text + "'";
  throw ParseError(std::string("expected ") + what + ", found " + saw, got.line, got.col);
}

inline Token expect_punct(Lexer& lx, char c) {
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::punct || t.text[0] != c)
    expected(("'" + std::string(1, c) + "'").c_str(), t);
  return lx.next();
}

inline Token expect_keyword(Lexer& lx, const char* kw) {
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::ident || t.text != kw)
    expected(("'" + std::string(kw) + "'").c_str(), t);
  return lx.next();
}

inline bool peek_punct(const Lexer& lx, char c) {
  return lx.peek().kind == Token::Kind::punct && lx.peek().text[0] == c;
}

class PolyParser {
 public:
  PolyParser(Lexer& lx, const Ambient& amb, const std::map<std::string, std::size_t>& index)
      : lx_(lx), amb_(amb), index_(index) {}

  // poly := ['-'] term (('+'|'-') term)*
  Poly parse_poly() {
    bool negate = false;
    if (peek_punct(lx_, '-')) {
      lx_.next();
      negate = true;
    }
    Poly acc = parse_term();
    if (negate) acc = Poly::zero(amb_) - acc;
    while (peek_punct(lx_, '+') || peek_punct(lx_, '-')) {
      bool minus = lx_.next().text[0] == '-';
      Poly rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

 private:
  // term := factor ('*' factor)*
  Poly parse_term() {
    Poly acc = parse_factor();
    while (peek_punct(lx_, '*')) {
      lx_.next();
      acc = acc * parse_factor();
    }
    return acc;
  }

  // factor := base ('^' integer)?
  Poly parse_factor() {
    Factor base = parse_base();
    if (!peek_punct(lx_, '^')) return to_poly(base, 1);
    lx_.next();
    const Token& e = lx_.peek();
    if (e.kind != Token::Kind::integer) expected("exponent", e);
    Token et = lx_.next();
    if (et.ival_overflow) throw ParseError("exponent too large", et.line, et.col);
    return to_poly(base, et.ival);
  }

  struct Factor {
    enum class Kind { constant, variable, poly } kind;
    std::uint32_t cval = 0;   // constant, reduced mod p
    std::size_t var = 0;      // variable index
    Poly pval;                // parenthesized subexpression
    Token tok;                // for error positions
  };

  // base := integer | ident | '(' poly ')'
  Factor parse_base() {
    const Token& t = lx_.peek();
    Factor f;
    f.tok = t;
    if (t.kind == Token::Kind::integer) {
      Token it = lx_.next();
      // Coefficients only matter mod p; reduce the digit string directly.
      std::uint64_t v = 0;
      for (char c : it.text) v = (v * 10 + (std::uint64_t)(c - '0')) % amb_.p;
      f.kind = Factor::Kind::constant;
      f.cval = (std::uint32_t)v;
      return f;
    }
    if (t.kind == Token::Kind::ident) {
      Token id = lx_.next();
      auto it = index_.find(id.text);
      if (it == index_.end())
        throw ValidationError("unknown variable '" + id.text + "'", id.line, id.col);
      f.kind = Factor::Kind::variable;
      f.var = it->second;
      f.tok = id;
      return f;
    }
    if (peek_punct(lx_, '(')) {
      lx_.next();
      f.kind = Factor::Kind::poly;
      f.pval = parse_poly();
      expect_punct(lx_, ')');
      return f;
    }
    expected("a polynomial term", t);
  }

  Poly to_poly(const Factor& f, std::uint64_t e) {
    switch (f.kind) {
      case Factor::Kind::constant: {
        if (e == 0) return Poly::constant(amb_, 1);
        std::uint32_t c = 1;
        std::uint64_t base = f.cval, k = e;
        while (k) { // pow mod p
          if (k & 1) c = (std::uint32_t)((std::uint64_t)c * base % amb_.p);
          base = base * base % amb_.p;
          k >>= 1;
        }
        return Poly::constant(amb_, (std::int64_t)c);
      }
      case Factor::Kind::variable:
        if (e == 0) return Poly::constant(amb_, 1);
        return Poly::variable(amb_, f.var, e);
      case Factor::Kind::poly: {
        // syntactically fine, semantically refused: expanding would blow up
        if (e > 4096)
          throw ValidationError("exponent too large for a parenthesized base",
                                f.tok.line, f.tok.col);
        Poly acc = Poly::constant(amb_, 1);
        Poly base = f.pval;
        std::uint64_t k = e;
        while (k) {
          if (k & 1) acc = acc * base;
          base = base * base;
          k >>= 1;
        }
        return acc;
      }
    }
    throw std::logic_error("unreachable factor kind");
  }

  Lexer& lx_;
  const Ambient& amb_;
  const std::map<std::string, std::size_t>& index_;
};

inline std::vector<Poly> parse_poly_list(Lexer& lx, const Ambient& amb,
                                         const std::map<std::string, std::size_t>& index) {
  expect_punct(lx, '[');
  std::vector<Poly> out;
  if (!peek_punct(lx, ']')) {
    PolyParser pp(lx, amb, index);
    out.push_back(pp.parse_poly());
    while (peek_punct(lx, ',')) {
      lx.next();
      out.push_back(pp.parse_poly());
    }
  }
  expect_punct(lx, ']');
  return out;
}

} // namespace detail

// Parse one polynomial in the ring's variables (used by tests and tools).
inline Poly parse_poly_in(const std::string& text, const RingPresentation& ring) {
  detail::Lexer lx(text);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ring.vars.size(); ++i) index[ring.vars[i]] = i;
  Ambient amb = ring.ambient();
  detail::PolyParser pp(lx, amb, index);
  Poly f = pp.parse_poly();
  if (lx.peek().kind != detail::Token::Kind::eof)
    detail::expected("end of input", lx.peek());
  return f;
}

// Parse a comma-separated polynomial list (e.g. a parameter ideal given on
// the command line) in the ring's variables.
inline std::vector<Poly> parse_ideal_in(const std::string& text,
                                        const RingPresentation& ring) {
  detail::Lexer lx("[" + text + "]");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ring.vars.size(); ++i) index[ring.vars[i]] = i;
  Ambient amb = ring.ambient();
  auto out = detail::parse_poly_list(lx, amb, index);
  if (lx.peek().kind != detail::Token::Kind::eof)
    detail::expected("end of input", lx.peek());
  return out;
}

// Parse a full problem:
//   p=<int>; vars=<ident>(,<ident>)*; quotient=[<poly>,...]; ideal=[<poly>,...];
// Whitespace is insignificant and '#' starts a line comment.  Throws
// ParseError for malformed input and ValidationError for semantic problems.
inline ParsedProblem parse_problem(const std::string& text,
                                   OrderKind order = OrderKind::degrevlex,
                                   const Limits& lim = {}) {
  using detail::Token;
  detail::Lexer lx(text);

  detail::expect_keyword(lx, "p");
  detail::expect_punct(lx, '=');
  const Token& pt = lx.peek();
  if (pt.kind != Token::Kind::integer) detail::expected("a prime number", pt);
  Token ptok = lx.next();
  if (ptok.ival_overflow || ptok.ival < 2 || ptok.ival > kMaxPrime || !is_prime(ptok.ival))
    throw ValidationError("characteristic " + ptok.text + " is not a supported prime",
                          ptok.line, ptok.col);
  detail::expect_punct(lx, ';');

  detail::expect_keyword(lx, "vars");
  detail::expect_punct(lx, '=');
  RingPresentation ring;
  ring.p = (std::uint32_t)ptok.ival;
  ring.order = order;
  std::map<std::string, std::size_t> index;
  for (;;) {
    const Token& vt = lx.peek();
    if (vt.kind != Token::Kind::ident) detail::expected("a variable name", vt);
    Token v = lx.next();
    if (index.count(v.text))
      throw ValidationError("duplicate variable '" + v.text + "'", v.line, v.col);
    index[v.text] = ring.vars.size();
    ring.vars.push_back(v.text);
    if (detail::peek_punct(lx, ',')) {
      lx.next();
      continue;
    }
    break;
  }
  detail::expect_punct(lx, ';');

  Ambient amb = ring.ambient();
  detail::expect_keyword(lx, "quotient");
  detail::expect_punct(lx, '=');
  ring.defining = detail::parse_poly_list(lx, amb, index);
  detail::expect_punct(lx, ';');

  detail::expect_keyword(lx, "ideal");
  detail::expect_punct(lx, '=');
  ParsedProblem prob;
  prob.ideal.generators = detail::parse_poly_list(lx, amb, index);
  detail::expect_punct(lx, ';');
  if (lx.peek().kind != Token::Kind::eof) detail::expected("end of input", lx.peek());

  for (const Poly& f : ring.defining)
    if (!f.is_zero() && f.terms().back().mono.is_one())
      throw ValidationError("quotient generator '" + poly_to_string(f, ring.vars) +
                            "' has a nonzero constant term");
  for (const Poly& f : prob.ideal.generators)
    if (!f.is_zero() && f.terms().back().mono.is_one())
      throw ValidationError("ideal generator '" + poly_to_string(f, ring.vars) +
                            "' has a nonzero constant term");

  // Krull dimension of the quotient ring, cached on the presentation.
  GroebnerBasis g = buchberger(amb, ring.defining, lim);
  ring.dimension = (unsigned)krull_dimension(g);
  prob.ideal.t_upper = (unsigned)ring.vars.size();
  prob.ring = std::move(ring);
  return prob;
}

inline std::string print_problem(const ParsedProblem& prob) {
  std::ostringstream out;
  out << "p=" << prob.ring.p << "; vars=";
  for (std::size_t i = 0; i < prob.ring.vars.size(); ++i)
    out << (i ? "," : "") << prob.ring.vars[i];
  auto list = [&](const std::vector<Poly>& fs) {
    out << "[";
    for (std::size_t i = 0; i < fs.size(); ++i)
      out << (i ? ", " : "") << poly_to_string(fs[i], prob.ring.vars);
    out << "]";
  };
  out << "; quotient=";
  list(prob.ring.defining);
  out << "; ideal=";
  list(prob.ideal.generators);
  out << ";";
  return out.str();
}

// Certificate that ideal + defining is zero-dimensional and supported only at
// the origin: for each variable, the least N with x_i^N in the ideal.
struct OriginCheck {
  bool ok = false;
  std::string reason;                        // set when !ok
  std::vector<std::uint64_t> var_exponents;  // set when ok
  std::uint64_t colength = 0;                // set when the colength is finite
};

inline OriginCheck validate_origin_primary(const IdealSpec& ideal,
                                           const RingPresentation& ring,
                                           const Limits& lim = {}) {
  Ambient amb = ring.ambient();
  std::vector<Poly> gens = ideal.generators;
  gens.insert(gens.end(), ring.defining.begin(), ring.defining.end());
  GroebnerBasis g = buchberger(amb, gens, lim);
  OriginCheck out;
  auto len = colength(g, lim);
  if (!len) {
    out.reason = "infinite colength";
    return out;
  }
  out.colength = *len;
  // A power of x_i lies in the ideal iff x_i^colength does (multiplication by
  // x_i is a linear map on the finite-dimensional quotient, and the minimal
  // vanishing power of a single vector's orbit is at most the dimension).
  std::uint64_t bound = std::max<std::uint64_t>(*len, 1);
  for (std::size_t i = 0; i < ring.vars.size(); ++i) {
    auto vanishes = [&](std::uint64_t n) {
      return normal_form(Poly::variable(amb, i, n), g, lim).is_zero();
    };
    if (!vanishes(bound)) {
      out.reason = "support off origin (no power of " + ring.vars[i] +
                   " lies in the ideal)";
      return out;
    }
    std::uint64_t lo = 1, hi = bound; // least n with x_i^n in the ideal
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (vanishes(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    out.var_exponents.push_back(lo);
  }
  out.ok = true;
  return out;
}

} // namespace hk
