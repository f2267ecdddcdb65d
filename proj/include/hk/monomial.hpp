// Monomials (exponent vectors) and monomial orders.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

// Exponent vector with cached total degree.  Exponents are 64-bit so that
// bracket powers x^(e*q) never clip at desk scale.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<std::uint64_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint64_t degree() const { return deg_; }
  std::uint64_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint64_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, std::uint64_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  bool divides(const Monomial& m) const {
    if (deg_ > m.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  // Quotient this / d; caller guarantees divisibility.
  Monomial divide(const Monomial& d) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - d.e_[i];
    r.deg_ = deg_ - d.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      deg += r.e_[i];
    }
    r.deg_ = deg;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  // Scale every exponent by q (the Frobenius action on monomials).
  Monomial power(std::uint64_t q) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] != 0 && q > UINT64_MAX / e_[i])
        throw std::overflow_error("Monomial::power: exponent overflow");
      r.e_[i] = e_[i] * q;
    }
    r.deg_ = 0;
    for (auto v : r.e_) r.deg_ += v;
    return r;
  }

 private:
  std::vector<std::uint64_t> e_;
  std::uint64_t deg_ = 0;
};

enum class OrderKind {
  degrevlex, // total degree, ties to the monomial with the smaller last exponent
  deglex,    // total degree, ties lexicographically
  lex,
  elim_last, // internal: last variable counts first, then degrevlex on the rest
};

inline const char* order_name(OrderKind k) {
  switch (k) {
    case OrderKind::degrevlex: return "degrevlex";
    case OrderKind::deglex: return "deglex";
    case OrderKind::lex: return "lex";
    case OrderKind::elim_last: return "elim_last";
  }
  return "?";
}

inline OrderKind order_from_name(const std::string& s) {
  if (s == "degrevlex") return OrderKind::degrevlex;
  if (s == "deglex") return OrderKind::deglex;
  if (s == "lex") return OrderKind::lex;
  throw std::invalid_argument("unknown monomial order: " + s);
}

// A total order on monomials: an order kind plus an optional variable
// priority (a permutation; priority[0] is the most significant variable).
// An empty priority means the declared variable sequence.
class MonomialOrder {
 public:
  MonomialOrder() : kind_(OrderKind::degrevlex) {}
  explicit MonomialOrder(OrderKind k, std::vector<std::uint32_t> priority = {})
      : kind_(k), pri_(std::move(priority)) {}

  OrderKind kind() const { return kind_; }
  const std::vector<std::uint32_t>& priority() const { return pri_; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.pri_ == b.pri_;
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

  // Returns <0 if u < v, 0 if equal, >0 if u > v.
  int cmp(const Monomial& u, const Monomial& v) const {
    switch (kind_) {
      case OrderKind::degrevlex: {
        if (u.degree() != v.degree()) return u.degree() < v.degree() ? -1 : 1;
        // Equal degree: scan from the least significant variable; the first
        // difference decides, and the SMALLER exponent there wins.
        std::size_t n = u.nvars();
        for (std::size_t i = n; i-- > 0;) {
          std::uint64_t a = at(u, i), b = at(v, i);
          if (a != b) return a > b ? -1 : 1;
        }
        return 0;
      }
      case OrderKind::deglex: {
        if (u.degree() != v.degree()) return u.degree() < v.degree() ? -1 : 1;
        return lex_cmp(u, v);
      }
      case OrderKind::lex:
        return lex_cmp(u, v);
      case OrderKind::elim_last: {
        std::size_t last = u.nvars() - 1;
        if (u[last] != v[last]) return u[last] < v[last] ? -1 : 1;
        // degrevlex on the remaining block
        std::uint64_t du = u.degree() - u[last], dv = v.degree() - v[last];
        if (du != dv) return du < dv ? -1 : 1;
        for (std::size_t i = last; i-- > 0;) {
          if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
        }
        return 0;
      }
    }
    return 0;
  }

  bool less(const Monomial& u, const Monomial& v) const { return cmp(u, v) < 0; }
  bool greater(const Monomial& u, const Monomial& v) const { return cmp(u, v) > 0; }

 private:
  std::uint64_t at(const Monomial& m, std::size_t rank) const {
    return pri_.empty() ? m[rank] : m[pri_[rank]];
  }
  int lex_cmp(const Monomial& u, const Monomial& v) const {
    for (std::size_t i = 0; i < u.nvars(); ++i) {
      std::uint64_t a = at(u, i), b = at(v, i);
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  OrderKind kind_;
  std::vector<std::uint32_t> pri_;
};

} // namespace hk
