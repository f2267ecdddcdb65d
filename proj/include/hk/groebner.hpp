// Buchberger engine over F_p plus the ideal-level operations built on it:
// normal forms, staircase colength counting, quotients, colons, dimension.
#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hk/poly.hpp"

namespace hk {

// Thrown when a computation trips a resource cap (wall clock, colength, or
// cooperative cancellation).  The CLI maps this to its own exit code.
class ResourceError : public std::runtime_error {
 public:
  enum class Kind { time, colength, cancelled };
  ResourceError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// Cooperative resource limits threaded through the long-running loops.
struct Limits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<std::uint64_t> max_colength;
  std::atomic<bool>* cancel = nullptr;

  void poll(const char* what) const {
    if (cancel && cancel->load(std::memory_order_relaxed))
      throw ResourceError(ResourceError::Kind::cancelled, std::string(what) + ": cancelled");
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw ResourceError(ResourceError::Kind::time, std::string(what) + ": time limit exceeded");
  }
};

namespace detail {

// ---- geobucket addition -------------------------------------------------
// Buckets hold term lists in ASCENDING order (leading term at the back) so
// head removal is O(1).  Bucket k holds at most 16 * 4^k terms.

using Terms = std::vector<Term>;

inline std::size_t bucket_cap(std::size_t k) { return std::size_t(16) << (2 * k); }

// r = a + c * m * b with both lists ascending; m may be null (no shift).
inline Terms merge_asc(const Ambient& amb, const Terms& a, const Terms& b,
                       std::uint32_t c, const Monomial* m) {
  const std::uint32_t p = amb.p;
  Terms r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial bm;
  bool bm_valid = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !bm_valid) {
      bm = m ? b[j].mono * *m : b[j].mono;
      bm_valid = true;
    }
    int take;
    if (i >= a.size()) take = 1;
    else if (j >= b.size()) take = -1;
    else {
      int s = amb.order.cmp(a[i].mono, bm);
      take = s < 0 ? -1 : (s > 0 ? 1 : 0);
    }
    if (take == -1) {
      r.push_back(a[i++]);
    } else if (take == 1) {
      std::uint32_t v = fp_mul(b[j].coeff, c, p);
      if (v != 0) r.push_back({bm, v});
      ++j;
      bm_valid = false;
    } else {
      std::uint32_t v = fp_add(a[i].coeff, fp_mul(b[j].coeff, c, p), p);
      if (v != 0) r.push_back({a[i].mono, v});
      ++i;
      ++j;
      bm_valid = false;
    }
  }
  return r;
}

class Geobucket {
 public:
  explicit Geobucket(const Ambient& amb) : amb_(&amb) {}

  // Insert `t + c*m*extra` where t is an ascending term list.
  void add(Terms t) {
    if (t.empty()) return;
    std::size_t k = 0;
    while (bucket_cap(k) < t.size()) ++k;
    while (true) {
      if (k >= b_.size()) {
        b_.resize(k + 1);
        b_[k] = std::move(t);
        return;
      }
      if (b_[k].empty()) {
        b_[k] = std::move(t);
        return;
      }
      t = merge_asc(*amb_, b_[k], t, 1, nullptr);
      b_[k].clear();
      if (t.empty()) return;
      if (t.size() <= bucket_cap(k)) {
        b_[k] = std::move(t);
        return;
      }
      ++k;
    }
  }

  // Add c * m * (terms of g below its lead), i.e. the reducer tail.
  void add_scaled_tail(const Poly& g, std::uint32_t c, const Monomial& m) {
    if (g.size() <= 1) return;
    Terms t;
    t.reserve(g.size() - 1);
    const auto& ts = g.terms();
    for (std::size_t i = ts.size(); i-- > 1;) { // ascending
      std::uint32_t v = fp_mul(ts[i].coeff, c, amb_->p);
      if (v != 0) t.push_back({ts[i].mono * m, v});
    }
    add(std::move(t));
  }

  // Pop the leading term, combining duplicates across buckets; nullopt when
  // everything cancelled.
  std::optional<Term> pop_leading() {
    while (true) {
      int best = -1;
      for (std::size_t k = 0; k < b_.size(); ++k) {
        if (b_[k].empty()) continue;
        if (best < 0 || amb_->order.greater(b_[k].back().mono, b_[best].back().mono))
          best = static_cast<int>(k);
      }
      if (best < 0) return std::nullopt;
      Monomial mono = b_[best].back().mono;
      std::uint32_t coeff = 0;
      for (auto& bk : b_) {
        if (!bk.empty() && bk.back().mono == mono) {
          coeff = fp_add(coeff, bk.back().coeff, amb_->p);
          bk.pop_back();
        }
      }
      if (coeff != 0) return Term{std::move(mono), coeff};
    }
  }

 private:
  std::vector<Terms> b_;
  const Ambient* amb_;
};

inline std::uint32_t var_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] != 0) mask |= 1u << (i & 31);
  return mask;
}

// Divisor index over a growing basis.  Entries reference the owner vector by
// position (safe across reallocation) and cache degree/variable-mask
// prefilters plus the inverted leading coefficient.
struct RedIndex {
  struct Entry {
    std::size_t gi;
    std::uint64_t lmdeg;
    std::uint32_t mask;
    std::uint32_t lcinv;
  };
  const std::vector<Poly>* owner = nullptr;
  std::vector<Entry> entries;

  void attach(const std::vector<Poly>& gens, std::uint32_t p) {
    owner = &gens;
    entries.clear();
    entries.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) push(i, p);
  }
  void push(std::size_t gi, std::uint32_t p) {
    const Poly& g = (*owner)[gi];
    entries.push_back({gi, g.leading_monomial().degree(), var_mask(g.leading_monomial()),
                       fp_inv(g.leading_coeff(), p)});
  }
  // Returns the first registered generator whose lead divides t, or nullptr.
  const Poly* find(const Monomial& t, std::uint32_t tmask, std::uint64_t tdeg,
                   std::uint32_t* lcinv) const {
    for (const auto& e : entries) {
      if (e.lmdeg > tdeg) continue;
      if (e.mask & ~tmask) continue;
      const Poly& g = (*owner)[e.gi];
      if (g.leading_monomial().divides(t)) {
        *lcinv = e.lcinv;
        return &g;
      }
    }
    return nullptr;
  }
};

inline Terms ascending_terms(const Poly& f) {
  Terms t(f.terms().rbegin(), f.terms().rend());
  return t;
}

inline Poly poly_from_descending(const Ambient& amb, std::vector<Term> ts) {
  // Terms are already strictly descending and nonzero; reuse from_terms for
  // the canonical constructor (its sort is a no-op here).
  return Poly::from_terms(amb, std::move(ts));
}

inline Poly normal_form_indexed(const Poly& f, const RedIndex& idx, const Limits& lim) {
  if (f.is_zero() || idx.entries.empty()) return f;
  const Ambient& amb = f.ambient();
  Geobucket gb(amb);
  gb.add(ascending_terms(f));
  std::vector<Term> out;
  unsigned steps = 0;
  while (auto t = gb.pop_leading()) {
    if (++steps % 1024 == 0) lim.poll("normal form");
    std::uint32_t lcinv = 0;
    const Poly* g = idx.find(t->mono, var_mask(t->mono), t->mono.degree(), &lcinv);
    if (!g) {
      out.push_back(std::move(*t));
      continue;
    }
    std::uint32_t c = fp_mul(t->coeff, lcinv, amb.p);
    Monomial m = t->mono.divide(g->leading_monomial());
    gb.add_scaled_tail(*g, fp_neg(c, amb.p), m);
  }
  return poly_from_descending(amb, std::move(out));
}

} // namespace detail

// A reduced Groebner basis: monic generators with pairwise-irreducible terms,
// sorted ascending by leading monomial.  Equality of reduced bases is
// equality of ideals.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Ambient amb, std::vector<Poly> gens)
      : amb_(std::move(amb)), gens_(std::move(gens)) {}

  const Ambient& ambient() const { return amb_; }
  const std::vector<Poly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  // Leading monomials = minimal generators of the leading-term ideal.
  std::vector<Monomial> staircase() const {
    std::vector<Monomial> s;
    s.reserve(gens_.size());
    for (const auto& g : gens_) s.push_back(g.leading_monomial());
    return s;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.amb_ == b.amb_ && a.gens_ == b.gens_;
  }

 private:
  Ambient amb_;
  std::vector<Poly> gens_;
};

inline Poly spoly(const Poly& f, const Poly& g) {
  const Ambient& amb = f.ambient();
  Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
  Monomial mf = L.divide(f.leading_monomial());
  Monomial mg = L.divide(g.leading_monomial());
  Poly a = f.shifted(mf).scaled(fp_inv(f.leading_coeff(), amb.p));
  return Poly::axpy_sub(a, fp_inv(g.leading_coeff(), amb.p), mg, g);
}

// Buchberger with the normal selection strategy: pending pairs are processed
// by minimal lcm total degree, ties by the lexicographically smallest index
// pair.  Product and chain criteria prune; the result is the unique reduced
// basis for the ambient order.
inline GroebnerBasis buchberger(const Ambient& amb, std::vector<Poly> input,
                                const Limits& lim = {}) {
  std::vector<Poly> basis;
  basis.reserve(input.size());
  for (auto& g : input) {
    if (g.is_zero()) continue;
    g.make_monic();
    basis.push_back(std::move(g));
  }

  detail::RedIndex idx;
  idx.attach(basis, amb.p);

  struct PairKey {
    std::uint64_t deg;
    std::uint32_t i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<PairKey> pairs;
  std::unordered_set<std::uint64_t> done;
  auto pkey = [](std::uint32_t i, std::uint32_t j) {
    if (i > j) std::swap(i, j);
    return (std::uint64_t(i) << 32) | j;
  };
  auto push_pairs = [&](std::uint32_t n) {
    for (std::uint32_t k = 0; k < n; ++k) {
      Monomial L = lcm(basis[k].leading_monomial(), basis[n].leading_monomial());
      pairs.insert({L.degree(), k, n});
    }
  };
  for (std::uint32_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    lim.poll("groebner");
    PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    const Poly& f = basis[pk.i];
    const Poly& g = basis[pk.j];
    const Monomial& lmf = f.leading_monomial();
    const Monomial& lmg = g.leading_monomial();

    // Product criterion; also S-pairs of two monomials vanish identically.
    if (coprime(lmf, lmg) || (f.is_monomial() && g.is_monomial())) {
      done.insert(pkey(pk.i, pk.j));
      continue;
    }
    // Chain criterion: a third element dividing the lcm whose pairs with both
    // ends are already settled makes this pair redundant.
    Monomial L = lcm(lmf, lmg);
    bool skip = false;
    for (std::uint32_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!basis[k].leading_monomial().divides(L)) continue;
      if (done.count(pkey(pk.i, k)) && done.count(pkey(pk.j, k))) skip = true;
    }
    if (skip) {
      done.insert(pkey(pk.i, pk.j));
      continue;
    }

    Poly h = detail::normal_form_indexed(spoly(f, g), idx, lim);
    done.insert(pkey(pk.i, pk.j));
    if (!h.is_zero()) {
      h.make_monic();
      basis.push_back(std::move(h));
      idx.push(basis.size() - 1, amb.p);
      push_pairs(static_cast<std::uint32_t>(basis.size()) - 1);
    }
  }

  // Minimalize: drop generators whose lead is divisible by another kept lead.
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Poly> kept;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis[i]));

  // Tail-reduce each survivor against the full set.  Leads are minimal, so a
  // generator can never rewrite its own terms; one pass leaves every term
  // irreducible and yields the unique reduced basis.
  detail::RedIndex full;
  full.attach(kept, amb.p);
  for (auto& g : kept) {
    if (g.size() <= 1) continue;
    Poly head = Poly::monomial(amb, g.leading_monomial(), g.leading_coeff());
    Poly tail_nf = detail::normal_form_indexed(g - head, full, lim);
    g = head + tail_nf;
  }
  std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
    return amb.order.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis(amb, std::move(kept));
}

inline Poly normal_form(const Poly& f, const GroebnerBasis& G, const Limits& lim = {}) {
  detail::RedIndex idx;
  idx.attach(G.generators(), G.ambient().p);
  return detail::normal_form_indexed(f, idx, lim);
}

inline bool contains(const GroebnerBasis& G, const Poly& f, const Limits& lim = {}) {
  return normal_form(f, G, lim).is_zero();
}

// ---- staircase counting --------------------------------------------------

namespace detail {

using Expv = std::vector<std::uint64_t>;

inline bool dominates(const Expv& a, const Expv& b) { // b | a as monomials
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

inline void minimalize(std::vector<Expv>& g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Expv> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool dom = false;
    for (std::size_t j = 0; j < g.size() && !dom; ++j)
      if (i != j && dominates(g[i], g[j])) dom = true;
    if (!dom) out.push_back(g[i]);
  }
  g = std::move(out);
}

// Two-variable staircase area in closed form; expects a minimal set (so x
// exponents are distinct and y strictly decreases along increasing x).
inline unsigned __int128 count_2d(std::vector<Expv> g) {
  std::sort(g.begin(), g.end());
  unsigned __int128 total = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    total += (unsigned __int128)(g[i + 1][0] - g[i][0]) * g[i][1];
  return total;
}

// Counts standard monomials under a minimal generating set that contains a
// pure power of every variable (so the count is finite).
inline unsigned __int128 count_standard(std::vector<Expv> gens, std::size_t nv,
                                        const Limits& lim) {
  if (gens.empty()) throw std::logic_error("count_standard: empty generator set");
  for (const auto& g : gens) {
    bool one = true;
    for (auto e : g)
      if (e != 0) { one = false; break; }
    if (one) return 0;
  }
  if (nv == 0) return 1;
  if (nv == 1) {
    std::uint64_t b = UINT64_MAX;
    for (const auto& g : gens) b = std::min(b, g[0]);
    return b;
  }
  if (nv == 2) return count_2d(std::move(gens));

  lim.poll("colength");
  const std::size_t axis = nv - 1;
  // The unique pure power in the split variable bounds the sweep; minimality
  // puts every other generator's axis exponent strictly below it.
  std::uint64_t pure = UINT64_MAX;
  for (const auto& g : gens) {
    bool only_axis = g[axis] > 0;
    for (std::size_t i = 0; i + 1 < nv && only_axis; ++i)
      if (g[i] != 0) only_axis = false;
    if (only_axis) pure = std::min(pure, g[axis]);
  }
  if (pure == UINT64_MAX) throw std::logic_error("count_standard: no pure power");

  // Sweep the axis exponent; the active projected ideal is constant between
  // breakpoints, so each block contributes width * count(projection).
  std::vector<std::uint64_t> breaks{0};
  for (const auto& g : gens)
    if (g[axis] > 0 && g[axis] < pure) breaks.push_back(g[axis]);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  breaks.push_back(pure);

  std::sort(gens.begin(), gens.end(), [axis](const Expv& a, const Expv& b) {
    return a[axis] != b[axis] ? a[axis] < b[axis] : a < b;
  });

  // Incrementally maintained minimal set of projections of the active
  // generators (those with axis exponent <= current block start).
  std::vector<Expv> active;
  std::size_t next = 0;
  unsigned __int128 total = 0;
  for (std::size_t bi = 0; bi + 1 < breaks.size(); ++bi) {
    std::uint64_t t = breaks[bi];
    for (; next < gens.size() && gens[next][axis] == t; ++next) {
      Expv proj(gens[next].begin(), gens[next].begin() + axis);
      bool dominated = false;
      for (const auto& a : active)
        if (dominates(proj, a)) { dominated = true; break; }
      if (dominated) continue;
      active.erase(std::remove_if(active.begin(), active.end(),
                                  [&](const Expv& a) { return dominates(a, proj); }),
                   active.end());
      active.push_back(std::move(proj));
    }
    std::uint64_t width = breaks[bi + 1] - t;
    total += (unsigned __int128)width * count_standard(active, nv - 1, lim);
    if (lim.max_colength && total > *lim.max_colength)
      throw ResourceError(ResourceError::Kind::colength, "colength cap exceeded");
  }
  return total;
}

} // namespace detail

// F_p-dimension of the quotient by the leading-term ideal (equivalently by
// the ideal itself); nullopt when the quotient is infinite-dimensional.
inline std::optional<std::uint64_t> colength(const GroebnerBasis& G, const Limits& lim = {}) {
  const std::size_t n = G.ambient().nvars;
  if (G.is_unit_ideal()) return 0;
  if (G.is_zero_ideal()) {
    if (n == 0) return 1;
    return std::nullopt;
  }
  std::vector<detail::Expv> gens;
  gens.reserve(G.size());
  for (const auto& m : G.staircase()) gens.push_back(m.exponents());
  detail::minimalize(gens);
  // Finiteness: every variable needs a pure power among the leads.
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& g : gens) {
      bool pure = g[v] > 0;
      for (std::size_t i = 0; i < n && pure; ++i)
        if (i != v && g[i] != 0) pure = false;
      if (pure) { found = true; break; }
    }
    if (!found) return std::nullopt;
  }
  unsigned __int128 c = detail::count_standard(std::move(gens), n, lim);
  if (lim.max_colength && c > *lim.max_colength)
    throw ResourceError(ResourceError::Kind::colength, "colength cap exceeded");
  if (c > (unsigned __int128)UINT64_MAX)
    throw std::overflow_error("colength exceeds 64 bits");
  return static_cast<std::uint64_t>(c);
}

// ---- ideal operations via one elimination variable ------------------------

namespace detail {

// Polynomials move to an (n+1)-variable ring whose order ranks the extra
// last variable above everything; its degree-0 slice is the original ring.
inline Ambient elim_ambient(const Ambient& amb) {
  return Ambient{amb.p, amb.nvars + 1, MonomialOrder(OrderKind::elim_last)};
}

inline Poly lift(const Poly& f, const Ambient& eamb, std::uint64_t t_exp) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint64_t> e = t.mono.exponents();
    e.push_back(t_exp);
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Poly::from_terms(eamb, std::move(ts));
}

inline Poly drop_last_var(const Poly& f, const Ambient& amb) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint64_t> e = t.mono.exponents();
    e.pop_back();
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Poly::from_terms(amb, std::move(ts));
}

// Generators of (t*A + (1-t)*B) ∩ R, i.e. of A ∩ B (with B defaulting to the
// principal ideal (f) when used for quotients).
inline std::vector<Poly> intersect_gens(const Ambient& amb, const std::vector<Poly>& A,
                                        const std::vector<Poly>& B, const Limits& lim) {
  Ambient eamb = elim_ambient(amb);
  std::vector<Poly> egens;
  for (const auto& a : A)
    if (!a.is_zero()) egens.push_back(lift(a, eamb, 1));
  for (const auto& b : B) {
    if (b.is_zero()) continue;
    egens.push_back(lift(b, eamb, 1) - lift(b, eamb, 0)); // (t-1)*b
  }
  GroebnerBasis eg = buchberger(eamb, std::move(egens), lim);
  std::vector<Poly> out;
  for (const auto& g : eg.generators()) {
    if (g.leading_monomial()[amb.nvars] == 0) // lead t-free => all terms t-free
      out.push_back(drop_last_var(g, amb));
  }
  return out;
}

} // namespace detail

// Exact division g / f for g in the principal ideal (f).
inline Poly divide_exact(const Poly& g, const Poly& f) {
  if (f.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  const Ambient& amb = g.ambient();
  Poly rem = g;
  std::vector<Term> quot;
  std::uint32_t lcinv = fp_inv(f.leading_coeff(), amb.p);
  while (!rem.is_zero()) {
    if (!f.leading_monomial().divides(rem.leading_monomial()))
      throw std::logic_error("divide_exact: not divisible");
    Monomial m = rem.leading_monomial().divide(f.leading_monomial());
    std::uint32_t c = fp_mul(rem.leading_coeff(), lcinv, amb.p);
    quot.push_back({m, c});
    rem = Poly::axpy_sub(rem, c, m, f);
  }
  return Poly::from_terms(amb, std::move(quot));
}

inline GroebnerBasis intersect_ideals(const GroebnerBasis& A, const GroebnerBasis& B,
                                      const Limits& lim = {}) {
  if (A.is_zero_ideal() || B.is_zero_ideal())
    return GroebnerBasis(A.ambient(), {});
  if (A.is_unit_ideal()) return B;
  if (B.is_unit_ideal()) return A;
  std::vector<Poly> gens =
      detail::intersect_gens(A.ambient(), A.generators(), B.generators(), lim);
  return buchberger(A.ambient(), std::move(gens), lim);
}

// (I : f) = (1/f) * (I ∩ (f)), computed through the elimination trick.
inline GroebnerBasis ideal_quotient(const GroebnerBasis& I, const Poly& f,
                                    const Limits& lim = {}) {
  if (f.is_zero()) throw std::domain_error("ideal_quotient: colon by zero");
  const Ambient& amb = I.ambient();
  if (f.is_unit() && f.is_constant()) return I;
  if (I.is_unit_ideal()) return I;
  if (I.is_zero_ideal()) return I;
  std::vector<Poly> inter = detail::intersect_gens(amb, I.generators(), {f}, lim);
  std::vector<Poly> gens;
  gens.reserve(inter.size());
  for (const auto& g : inter) gens.push_back(divide_exact(g, f));
  return buchberger(amb, std::move(gens), lim);
}

// (I : J) = ∩_j (I : J_j).
inline GroebnerBasis ideal_colon_ideal(const GroebnerBasis& I, const std::vector<Poly>& J,
                                       const Limits& lim = {}) {
  bool any = false;
  GroebnerBasis acc;
  for (const auto& f : J) {
    if (f.is_zero()) continue;
    GroebnerBasis q = ideal_quotient(I, f, lim);
    acc = any ? intersect_ideals(acc, q, lim) : std::move(q);
    any = true;
  }
  if (!any) throw std::domain_error("ideal_colon_ideal: colon by the zero ideal");
  return acc;
}

// Krull dimension of the quotient ring, via maximal independent variable
// subsets of the leading-term ideal.
inline unsigned krull_dimension(const GroebnerBasis& G) {
  if (G.is_unit_ideal()) throw std::domain_error("krull_dimension: unit ideal");
  const std::size_t n = G.ambient().nvars;
  if (n > 22) throw std::domain_error("krull_dimension: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& m : G.staircase()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) s |= 1u << i;
    supports.push_back(s);
  }
  unsigned best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    bool independent = true;
    for (auto s : supports)
      if ((s & ~set) == 0) { independent = false; break; }
    if (independent) best = std::max(best, (unsigned)std::popcount(set));
  }
  return best;
}

// Socle test for an artinian quotient: Gorenstein iff the colon by the
// irrelevant maximal ideal adds exactly one dimension.
inline bool is_gorenstein_artinian(const GroebnerBasis& J, const Limits& lim = {}) {
  auto c = colength(J, lim);
  if (!c) throw std::domain_error("is_gorenstein_artinian: quotient not artinian");
  if (*c == 0) return false; // unit ideal: zero ring
  const Ambient& amb = J.ambient();
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < amb.nvars; ++i) vars.push_back(Poly::variable(amb, i));
  GroebnerBasis K = ideal_colon_ideal(J, vars, lim);
  auto ck = colength(K, lim);
  if (!ck) throw std::domain_error("is_gorenstein_artinian: colon not artinian");
  return *c - *ck == 1;
}

} // namespace hk
