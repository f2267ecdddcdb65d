// Turns colength series into multiplicity estimates: a two-point solve for
// the leading Hilbert-Kunz coefficient (with minimal-denominator rational
// reconstruction) and tail finite differences for Hilbert-Samuel.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

struct SeriesPoint {
  std::uint64_t q;     // p^e, or the ordinary power n
  std::uint64_t value; // colength
};

struct LeadingEstimate {
  double alpha = 0;   // leading coefficient of value ~ alpha q^d + beta q^(d-1)
  double beta = 0;
  double residual = 0; // max |value_e - model(q_e)| over samples with q > 1
  std::optional<Rat> alpha_exact;    // the exact two-point solve, if it fit in 64 bits
  std::optional<Rat> alpha_rational; // minimal-denominator candidate near the estimates
  std::string method;                // "two-point" | "ratio" | "stable"
};

namespace detail {

inline double pow_u(std::uint64_t q, unsigned k) {
  double r = 1;
  for (unsigned i = 0; i < k; ++i) r *= static_cast<double>(q);
  return r;
}

} // namespace detail

// Fits value ~ alpha q^d + beta q^(d-1) on the last two samples with q > 1
// (Richardson-style elimination of the second-order term).  With a single
// usable sample the plain ratio value/q^d is reported instead.
inline LeadingEstimate estimate_leading(const std::vector<SeriesPoint>& pts, unsigned d) {
  std::vector<SeriesPoint> use;
  for (const auto& p : pts)
    if (p.q > 1) use.push_back(p);
  if (use.empty()) throw std::invalid_argument("estimate_leading: no samples with q > 1");

  LeadingEstimate est;
  const SeriesPoint last = use.back();
  const double qd_last = detail::pow_u(last.q, d);

  if (d == 0) {
    est.method = "stable";
    est.alpha = static_cast<double>(last.value);
    est.alpha_exact = Rat::of(static_cast<std::int64_t>(last.value));
    for (const auto& p : use)
      est.residual = std::max(est.residual, std::fabs((double)p.value - est.alpha));
    est.alpha_rational = est.alpha_exact;
    return est;
  }

  double ratio = static_cast<double>(last.value) / qd_last;

  if (use.size() == 1) {
    est.method = "ratio";
    est.alpha = ratio;
    est.beta = 0;
    est.residual = 0; // the single usable sample is fit exactly
    double tol = std::max(10.0 * est.residual / qd_last, 1e-6);
    est.alpha_rational = rational_reconstruct(est.alpha, tol);
    return est;
  }

  const SeriesPoint prev = use[use.size() - 2];
  // alpha = (v2 q1^(d-1) - v1 q2^(d-1)) / (q2^d q1^(d-1) - q1^d q2^(d-1))
  try {
    auto powr = [](std::uint64_t q, unsigned k) {
      __int128 r = 1;
      for (unsigned i = 0; i < k; ++i) {
        r *= (__int128)q;
        if (r > (__int128)1 << 100) throw std::overflow_error("estimate: q^d overflow");
      }
      return r;
    };
    __int128 q1d1 = powr(prev.q, d - 1), q2d1 = powr(last.q, d - 1);
    __int128 q1d = q1d1 * prev.q, q2d = q2d1 * last.q;
    Rat alpha = Rat::make((__int128)last.value * q1d1 - (__int128)prev.value * q2d1,
                          q2d * q1d1 - q1d * q2d1);
    est.alpha = alpha.to_double();
    est.alpha_exact = alpha;
    est.beta = ((double)last.value - est.alpha * detail::pow_u(last.q, d)) /
               detail::pow_u(last.q, d - 1);
  } catch (const std::overflow_error&) {
    double q1d1 = detail::pow_u(prev.q, d - 1), q2d1 = detail::pow_u(last.q, d - 1);
    double q1d = q1d1 * prev.q, q2d = q2d1 * last.q;
    est.alpha = ((double)last.value * q1d1 - (double)prev.value * q2d1) /
                (q2d * q1d1 - q1d * q2d1);
    est.beta = ((double)last.value - est.alpha * q2d) / q2d1;
  }
  est.method = "two-point";

  for (const auto& p : use) {
    double model = est.alpha * detail::pow_u(p.q, d) + est.beta * detail::pow_u(p.q, d - 1);
    est.residual = std::max(est.residual, std::fabs((double)p.value - model));
  }

  // Reconstruction interval: the hull of the two-point and plain-ratio
  // extrapolants, widened by the scaled residual (floor 1e-6).  Both
  // estimators converge to the true limit from different sides at first
  // order, so the hull brackets it at the precision the samples support.
  double mid = 0.5 * (est.alpha + ratio);
  double tol = 0.5 * std::fabs(est.alpha - ratio) +
               std::max(10.0 * est.residual / qd_last, 1e-6);
  est.alpha_rational = rational_reconstruct(mid, tol);
  return est;
}

struct DifferenceEstimate {
  double value = 0;
  std::optional<Rat> exact; // integer result of the stabilized difference
  double residual = 0;      // |last difference - previous difference|
};

// d-th finite difference at the tail of value(n), n = 1, 2, ...; for an
// ideal's ordinary-power colengths this converges to d! times the leading
// Hilbert coefficient, i.e. the multiplicity, and is eventually exact.
inline DifferenceEstimate estimate_hs_multiplicity(const std::vector<SeriesPoint>& pts,
                                                   unsigned d) {
  if (pts.size() < d + 2)
    throw std::invalid_argument("estimate_hs_multiplicity: need at least d+2 samples");
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].q != i + 1)
      throw std::invalid_argument("estimate_hs_multiplicity: samples must be n = 1, 2, ...");
  std::vector<__int128> v;
  v.reserve(pts.size());
  for (const auto& p : pts) v.push_back((__int128)p.value);
  for (unsigned k = 0; k < d; ++k)
    for (std::size_t i = v.size() - 1; i > 0; --i) v[i] -= v[i - 1];
  // v[i] now holds the d-th difference ending at sample i (valid for i >= d).
  __int128 lastd = v[v.size() - 1];
  __int128 prevd = v[v.size() - 2];
  DifferenceEstimate est;
  est.value = static_cast<double>((long long)lastd);
  est.residual = std::fabs(static_cast<double>((long long)(lastd - prevd)));
  if (lastd >= INT64_MIN && lastd <= INT64_MAX)
    est.exact = Rat::of(static_cast<std::int64_t>((long long)lastd));
  return est;
}

} // namespace hk
