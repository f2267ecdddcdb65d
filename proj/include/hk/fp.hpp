// Prime-field scalars: elements of F_p for a runtime prime p < 2^31.
#pragma once

#include <cstdint>
#include <stdexcept>

namespace hk {

inline constexpr std::uint32_t kMaxPrime = 0x7fffffffu; // p must fit in a signed 32-bit word

// Deterministic trial-division primality test; n <= 2^31 so this is cheap.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

// A residue together with its modulus.  Arithmetic checks that both operands
// live over the same p; the modulus is assumed prime (checked on entry by the
// parser / callers that mint fields from user input).
class Fp {
 public:
  Fp() : v_(0), p_(2) {}
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    if (p < 2 || p > kMaxPrime) throw std::domain_error("Fp: modulus out of range");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.match(b);
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp::raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.match(b);
    std::uint64_t s = std::uint64_t(a.v_) + a.p_ - b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp::raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.match(b);
    return Fp::raw(static_cast<std::uint32_t>((std::uint64_t(a.v_) * b.v_) % a.p_), a.p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  // Multiplicative inverse by extended Euclid; p prime makes every nonzero
  // residue invertible.
  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t qt = a / b;
      std::int64_t t = a - qt * b; a = b; b = t;
      t = x0 - qt * x1; x0 = x1; x1 = t;
    }
    // a == gcd == 1
    if (x0 < 0) x0 += p_;
    return raw(static_cast<std::uint32_t>(x0), p_);
  }

  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp f; f.v_ = v; f.p_ = p; return f;
  }

 private:
  void match(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
  }
  std::uint32_t v_;
  std::uint32_t p_;
};

// Raw-residue helpers used by the polynomial kernels, where the modulus is
// carried once by the ambient ring instead of per coefficient.
inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  if (s >= p) s -= p;
  return static_cast<std::uint32_t>(s);
}
inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + p - b;
  if (s >= p) s -= p;
  return static_cast<std::uint32_t>(s);
}
inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
}
inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) { return Fp::raw(a, p).inverse().value(); }

} // namespace hk
