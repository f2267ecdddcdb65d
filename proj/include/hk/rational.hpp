// Exact rational arithmetic on 64-bit numerator/denominator (128-bit
// intermediates), plus minimal-denominator reconstruction from an interval.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace hk {

struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rat: overflow");
    return Rat{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
  }
  static Rat of(std::int64_t n, std::int64_t d = 1) { return make(n, d); }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    return make((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  Rat operator-() const { return Rat{-num, den}; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
};

inline std::uint64_t factorial(unsigned n) {
  if (n > 20) throw std::overflow_error("factorial: n > 20");
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (unsigned __int128)UINT64_MAX) throw std::overflow_error("binomial: overflow");
  }
  return static_cast<std::uint64_t>(r);
}

namespace detail {

struct Frac128 {
  __int128 n, d; // d > 0
};

inline bool frac_le(const Frac128& a, const Frac128& b) {
  return a.n * b.d <= b.n * a.d;
}

// Simplest (minimal-denominator) fraction in the closed interval [lo, hi],
// via the continued-fraction walk; both bounds exact fractions, lo <= hi.
// Components stay bounded by the inputs', so 128 bits never overflow for the
// grid-clamped bounds produced below.
inline Frac128 simplest_between(Frac128 lo, Frac128 hi) {
  bool neg = false;
  if (hi.n < 0) { // whole interval negative: mirror
    neg = true;
    std::swap(lo, hi);
    lo.n = -lo.n;
    hi.n = -hi.n;
  }
  if (lo.n <= 0) return {0, 1}; // interval contains 0
  // Now 0 < lo <= hi.
  __int128 whole[64];
  Frac128 l = lo, h = hi;
  int depth = 0;
  Frac128 res{0, 1};
  while (true) {
    __int128 a = l.n / l.d; // floor(l), l > 0
    Frac128 rest_l{l.n - a * l.d, l.d};
    if (rest_l.n == 0) { // l itself integral, hence simplest in [l, h]
      res = {a, 1};
      break;
    }
    if (frac_le({a + 1, 1}, h)) { // integer a+1 inside [l, h]
      res = {a + 1, 1};
      break;
    }
    if (depth >= 64) { // pathological precision; fall back to lower bound
      res = l;
      break;
    }
    whole[depth++] = a;
    // Recurse on reciprocals of the fractional parts (interval flips).
    Frac128 rest_h{h.n - a * h.d, h.d};
    l = {rest_h.d, rest_h.n}; // 1 / (h - a); h - a >= l - a > 0
    h = {rest_l.d, rest_l.n}; // 1 / (l - a)
  }
  for (int i = depth - 1; i >= 0; --i) // res = whole[i] + 1/res
    res = {whole[i] * res.n + res.d, res.n};
  if (neg) res.n = -res.n;
  return res;
}

} // namespace detail

// The fraction with smallest denominator within tol of x, if its denominator
// does not exceed max_den.  Bounds are snapped outward to a 2^-30 grid, so
// the interval is effectively widened by at most ~1e-9 per side; callers use
// tolerances orders of magnitude above that.
inline std::optional<Rat> rational_reconstruct(double x, double tol,
                                               std::uint64_t max_den = 10000) {
  if (!std::isfinite(x) || !(tol >= 0) || std::fabs(x) > 1e6) return std::nullopt;
  const long double grid = 1073741824.0L; // 2^30
  auto lo_n = static_cast<__int128>(std::floor((long double)(x - tol) * grid));
  auto hi_n = static_cast<__int128>(std::ceil((long double)(x + tol) * grid));
  detail::Frac128 r = detail::simplest_between({lo_n, (__int128)grid}, {hi_n, (__int128)grid});
  if (r.d <= 0 || (unsigned __int128)r.d > max_den) return std::nullopt;
  if (r.n > INT64_MAX || r.n < INT64_MIN) return std::nullopt;
  return Rat{static_cast<std::int64_t>(r.n), static_cast<std::int64_t>(r.d)};
}

} // namespace hk
