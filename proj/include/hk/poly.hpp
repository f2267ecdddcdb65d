// Multivariate polynomials over F_p with a fixed term order.
#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk/fp.hpp"
#include "hk/monomial.hpp"

namespace hk {

// The ambient data every polynomial carries: characteristic, variable count
// and the active term order.
struct Ambient {
  std::uint32_t p = 2;
  std::uint32_t nvars = 0;
  MonomialOrder order;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.p == b.p && a.nvars == b.nvars && a.order == b.order;
  }
  friend bool operator!=(const Ambient& a, const Ambient& b) { return !(a == b); }
};

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0; // nonzero, in [1, p)
};

// Terms are kept strictly descending in the ambient order, coefficients
// nonzero: the zero polynomial is the empty term list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ambient amb) : amb_(std::move(amb)) {}

  // Build from an arbitrary term soup: sorts, merges, drops zeros.
  static Poly from_terms(Ambient amb, std::vector<Term> terms) {
    Poly f(std::move(amb));
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return f.amb_.order.greater(a.mono, b.mono);
    });
    f.terms_.reserve(terms.size());
    for (auto& t : terms) {
      std::uint32_t c = t.coeff % f.amb_.p;
      if (c == 0) continue;
      if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
        std::uint32_t s = fp_add(f.terms_.back().coeff, c, f.amb_.p);
        if (s == 0) f.terms_.pop_back();
        else f.terms_.back().coeff = s;
      } else {
        f.terms_.push_back({std::move(t.mono), c});
      }
    }
    return f;
  }

  static Poly zero(const Ambient& amb) { return Poly(amb); }
  static Poly constant(const Ambient& amb, std::int64_t c) {
    Poly f(amb);
    std::uint32_t v = Fp(c, amb.p).value();
    if (v != 0) f.terms_.push_back({Monomial(amb.nvars), v});
    return f;
  }
  static Poly variable(const Ambient& amb, std::size_t i, std::uint64_t e = 1) {
    Poly f(amb);
    Monomial m(amb.nvars);
    if (e != 0) m.set(i, e);
    f.terms_.push_back({std::move(m), 1});
    if (e == 0) return f; // x^0 == 1
    return f;
  }
  static Poly monomial(const Ambient& amb, Monomial m, std::uint32_t c = 1) {
    Poly f(amb);
    c %= amb.p;
    if (c != 0) f.terms_.push_back({std::move(m), c});
    return f;
  }

  const Ambient& ambient() const { return amb_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
  bool is_unit() const { return !terms_.empty() && terms_[0].mono.is_one(); }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("Poly: leading term of zero");
    return terms_[0].mono;
  }
  std::uint32_t leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("Poly: leading term of zero");
    return terms_[0].coeff;
  }
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  Poly& make_monic() {
    if (terms_.empty()) return *this;
    if (terms_[0].coeff != 1) {
      std::uint32_t inv = fp_inv(terms_[0].coeff, amb_.p);
      for (auto& t : terms_) t.coeff = fp_mul(t.coeff, inv, amb_.p);
    }
    return *this;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.amb_ != b.amb_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].mono != b.terms_[i].mono)
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, 1, Monomial(), false); }
  friend Poly operator-(const Poly& a, const Poly& b) {
    return merge(a, b, b.amb_.p - 1, Monomial(), false);
  }
  Poly operator-() const {
    Poly r(amb_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, fp_neg(t.coeff, amb_.p)});
    return r;
  }

  // r = a - c * m * b: the reduction kernel.  One linear merge pass.
  static Poly axpy_sub(const Poly& a, std::uint32_t c, const Monomial& m, const Poly& b) {
    return merge(a, b, fp_neg(c, a.amb_.p), m, true);
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.match(b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.amb_);
    // Accumulate b-shifts of a; fine at the sizes the pipeline produces.
    const Poly* small = &a;
    const Poly* big = &b;
    if (small->size() > big->size()) std::swap(small, big);
    Poly acc = Poly::zero(a.amb_);
    for (const auto& t : small->terms_)
      acc = merge(acc, *big, t.coeff, t.mono, true);
    return acc;
  }

  Poly scaled(std::uint32_t c) const {
    Poly r(amb_);
    c %= amb_.p;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, fp_mul(t.coeff, c, amb_.p)});
    return r;
  }

  Poly shifted(const Monomial& m) const { // this * m
    Poly r(amb_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
    return r;
  }

 private:
  void match(const Poly& o) const {
    if (amb_ != o.amb_) throw std::invalid_argument("Poly: mixed ambients");
  }

  // merge: a + c*(m?)*b with both inputs canonically sorted.
  static Poly merge(const Poly& a, const Poly& b, std::uint32_t c, const Monomial& m, bool shift) {
    a.match(b);
    const std::uint32_t p = a.amb_.p;
    c %= p;
    if (c == 0 || b.is_zero()) return a;
    Poly r(a.amb_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    Monomial cur_b; // b's current monomial, shifted by m when requested
    bool cur_valid = false;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j < b.terms_.size() && !cur_valid) {
        cur_b = shift ? b.terms_[j].mono * m : b.terms_[j].mono;
        cur_valid = true;
      }
      int take; // -1: from a, 1: from b, 0: combine
      if (i >= a.terms_.size()) take = 1;
      else if (j >= b.terms_.size()) take = -1;
      else {
        int s = a.amb_.order.cmp(a.terms_[i].mono, cur_b);
        take = s > 0 ? -1 : (s < 0 ? 1 : 0);
      }
      if (take == -1) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (take == 1) {
        std::uint32_t v = fp_mul(b.terms_[j].coeff, c, p);
        if (v != 0) r.terms_.push_back({cur_b, v});
        ++j;
        cur_valid = false;
      } else {
        std::uint32_t v = fp_add(a.terms_[i].coeff, fp_mul(b.terms_[j].coeff, c, p), p);
        if (v != 0) r.terms_.push_back({a.terms_[i].mono, v});
        ++i;
        ++j;
        cur_valid = false;
      }
    }
    return r;
  }

  Ambient amb_;
  std::vector<Term> terms_;
};

// The q-th power map for q a power of p: exponents scale by q and
// coefficients are fixed (Fermat), so term counts never grow.
inline Poly frobenius_power(const Poly& f, std::uint64_t q) {
  if (q == 1) return f;
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back({t.mono.power(q), t.coeff});
  // Scaling exponents preserves every supported order, so re-sorting in
  // from_terms is a no-op pass kept for safety.
  return Poly::from_terms(f.ambient(), std::move(ts));
}

inline bool is_power_of(std::uint64_t q, std::uint32_t p) {
  if (q == 0) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

// Printing uses the balanced coefficient representative (c or c-p, whichever
// is shorter to write) so that x^5 - y^5 round-trips the way it was written.
inline std::string poly_to_string(const Poly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  const std::uint32_t p = f.ambient().p;
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::uint32_t c = t.coeff;
    bool negative = c > p / 2;
    std::uint32_t mag = negative ? p - c : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      out << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote) out << "*";
      out << vars[i];
      if (t.mono[i] > 1) out << "^" << t.mono[i];
      wrote = true;
    }
  }
  return out.str();
}

} // namespace hk
