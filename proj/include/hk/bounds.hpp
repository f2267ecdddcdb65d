// Closed-form lower bounds for Hilbert-Kunz multiplicities, box-simplex
// volumes, the sec+tan conjecture coefficients, and the reference table of
// exactly known multiplicities / F-signatures.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

// vol{ x in [0,1]^d : sum x_i <= s }, exact for rational s via the
// inclusion-exclusion polynomial (1/d!) sum_k (-1)^k C(d,k) (s-k)^d.
inline Rat volume_vs(unsigned d, const Rat& s) {
  if (s.num <= 0) return Rat::of(0);
  if (s >= Rat::of((std::int64_t)d)) return Rat::of(1);
  // Now 0 < s < d, so d >= 1.
  std::int64_t kmax = s.num / s.den; // floor, s > 0
  Rat sum = Rat::of(0);
  for (std::int64_t k = 0; k <= kmax; ++k) {
    Rat base = s - Rat::of(k);
    Rat pw = Rat::of(1);
    for (unsigned i = 0; i < d; ++i) pw = pw * base;
    Rat term = pw * Rat::of((std::int64_t)binomial(d, (unsigned)k));
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  Rat v = sum / Rat::of((std::int64_t)factorial(d));
  if (v < Rat::of(0)) return Rat::of(0);
  if (v > Rat::of(1)) return Rat::of(1);
  return v;
}

inline double volume_vs(unsigned d, double s) {
  if (s <= 0) return 0;
  if (s >= (double)d) return 1;
  double sum = 0;
  for (std::int64_t k = 0; k <= (std::int64_t)std::floor(s); ++k) {
    double term = (double)binomial(d, (unsigned)k) * std::pow(s - (double)k, (double)d);
    sum += (k % 2 == 0) ? term : -term;
  }
  double v = sum / (double)factorial(d);
  return std::min(1.0, std::max(0.0, v));
}

// The hypersurface volume constant: v_{(d+1)/2} - v_{(d-1)/2} in dimension d.
// First values 1, 1, 3/4, 2/3, 115/192, 11/20.
inline Rat beta_hypersurface(unsigned d) {
  Rat hi = volume_vs(d, Rat::make((__int128)d + 1, 2));
  Rat lo = volume_vs(d, Rat::make((__int128)d - 1, 2));
  return hi - lo;
}

// e * (v_s - r (s-1)^d / d!): the volume lower bound for e_HK given the
// multiplicity e and r generators above a minimal reduction; also maximized
// over the grid s in {1, 1+1/64, ..., 2}.
struct VolumeBound {
  double at_s = 0;     // bound evaluated at the requested s
  double best = 0;     // bound at the best grid point
  Rat best_s{1, 1};
  Rat factor_at_s{0, 1}; // v_s - r (s-1)^d / d!, exact
};

inline VolumeBound wy_volume_bound(double e, unsigned d, unsigned r, const Rat& s) {
  if (d < 1) throw std::invalid_argument("wy_volume_bound: d >= 1 required");
  if (r < 1) throw std::invalid_argument("wy_volume_bound: r >= 1 required");
  if (s < Rat::of(1)) throw std::invalid_argument("wy_volume_bound: s >= 1 required");
  auto factor = [&](const Rat& sv) {
    Rat pw = Rat::of(1);
    Rat sm1 = sv - Rat::of(1);
    for (unsigned i = 0; i < d; ++i) pw = pw * sm1;
    return volume_vs(d, sv) - Rat::of((std::int64_t)r) * pw / Rat::of((std::int64_t)factorial(d));
  };
  VolumeBound out;
  out.factor_at_s = factor(s);
  out.at_s = e * out.factor_at_s.to_double();
  Rat best_f = Rat::of(0);
  for (int k = 0; k <= 64; ++k) {
    Rat sv = Rat::of(1) + Rat::make(k, 64);
    Rat f = factor(sv);
    if (f > best_f) {
      best_f = f;
      out.best_s = sv;
    }
  }
  out.best = e * best_f.to_double();
  return out;
}

// d-th coefficient of the Taylor series of sec x + tan x: the zigzag number
// Z_d over d!, by the boustrophedon recurrence.
inline Rat sectan_coefficient(unsigned d) {
  if (d > 20) throw std::overflow_error("sectan_coefficient: d > 20");
  std::vector<std::uint64_t> row{1}; // E(0,0)
  for (unsigned n = 1; n <= d; ++n) {
    std::vector<std::uint64_t> next(n + 1);
    next[0] = 0;
    for (unsigned k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
    row = std::move(next);
  }
  return Rat::make((__int128)row[d], (__int128)factorial(d));
}

struct BoundEntry {
  std::string name;
  double value = 0;
  std::optional<Rat> exact;
  bool applicable = true;     // whether the hypotheses are met by (d, p, e, t)
  bool informational = false; // never used to fail a comparison
  std::string note;
};

// Every closed-form lower bound computable from the dimension d, the
// characteristic p, the multiplicity e, and the generator count t of the
// maximal ideal.  `hypersurface` enables the bounds needing that hypothesis.
inline std::vector<BoundEntry> closed_form_bounds(unsigned d, std::uint64_t p, double e,
                                                  std::optional<Rat> e_exact,
                                                  std::optional<unsigned> t,
                                                  bool hypersurface) {
  if (d < 1) throw std::invalid_argument("closed_form_bounds: d >= 1 required");
  std::vector<BoundEntry> out;
  auto rat_or_double = [](BoundEntry& b, std::optional<Rat> r, double v) {
    b.exact = r;
    b.value = r ? r->to_double() : v;
  };

  { // 1 + 1/(p^d d!) for any non-regular local ring (strict inequality).
    BoundEntry b;
    b.name = "blickle-enescu";
    b.note = "strict lower bound for any non-regular local ring";
    double pd = std::pow((double)p, (double)d) * (double)factorial(d);
    std::optional<Rat> exact;
    try {
      __int128 den = 1;
      for (unsigned i = 0; i < d; ++i) den *= (__int128)p;
      den *= (__int128)factorial(d);
      exact = Rat::of(1) + Rat::make(1, den);
    } catch (const std::overflow_error&) {
    }
    rat_or_double(b, exact, 1.0 + 1.0 / pd);
    out.push_back(std::move(b));
  }

  { // (e+1)/2 in dimension 2.
    BoundEntry b;
    b.name = "watanabe-yoshida-dim2";
    b.applicable = d == 2;
    b.note =
        "dimension 2, Cohen-Macaulay, non-regular; equality characterizes "
        "the degree-e Veronese plane";
    std::optional<Rat> exact;
    if (e_exact) exact = (*e_exact + Rat::of(1)) / Rat::of(2);
    rat_or_double(b, exact, (e + 1.0) / 2.0);
    out.push_back(std::move(b));
  }

  if (t && *t >= 1) { // volume bound maximized over the s grid, r = t.
    VolumeBound vb = wy_volume_bound(e, d, *t, Rat::of(1));
    BoundEntry b;
    b.name = "volume";
    b.value = vb.best;
    b.note = "e * (v_s - r(s-1)^d/d!) at s = " + vb.best_s.str() +
             ", r = " + std::to_string(*t) + " generators";
    if (e_exact) {
      // Recompute the exact factor at the best grid point.
      VolumeBound at = wy_volume_bound(1.0, d, *t, vb.best_s);
      b.exact = *e_exact * at.factor_at_s;
      b.value = b.exact->to_double();
    }
    out.push_back(std::move(b));
  }

  { // 1 + 1/(d (d!(d-1)+1)^d) for unmixed non-regular rings, d >= 2.
    BoundEntry b;
    b.name = "aberbach-enescu";
    b.applicable = d >= 2;
    b.note = "unmixed non-regular, dimension >= 2";
    double base = (double)factorial(d) * (d - 1.0) + 1.0;
    std::optional<Rat> exact;
    try {
      __int128 den = 1;
      __int128 ibase = (__int128)factorial(d) * (d >= 1 ? d - 1 : 0) + 1;
      for (unsigned i = 0; i < d; ++i) den *= ibase;
      den *= (__int128)d;
      exact = Rat::of(1) + Rat::make(1, den);
    } catch (const std::overflow_error&) {
    }
    rat_or_double(b, exact, 1.0 + 1.0 / (d * std::pow(base, (double)d)));
    out.push_back(std::move(b));
  }

  { // 1 + 1/(d! d^d): depends on the dimension alone (multiplicity > 1).
    BoundEntry b;
    b.name = "dimension-only";
    b.note = "formally unmixed with multiplicity > 1";
    std::optional<Rat> exact;
    try {
      __int128 den = (__int128)factorial(d);
      for (unsigned i = 0; i < d; ++i) den *= (__int128)d;
      exact = Rat::of(1) + Rat::make(1, den);
    } catch (const std::overflow_error&) {
    }
    rat_or_double(b, exact, 1.0 + 1.0 / ((double)factorial(d) * std::pow((double)d, (double)d)));
    out.push_back(std::move(b));
  }

  { // (e/d!) * t / (t^(1/(d-1)) - 1)^(d-1) for t >= 2 generators, d >= 2.
    BoundEntry b;
    b.name = "hanes";
    b.applicable = d >= 2 && t && *t >= 2;
    if (b.applicable) {
      double troot = std::pow((double)*t, 1.0 / (double)(d - 1));
      double f = (double)*t / std::pow(troot - 1.0, (double)(d - 1));
      b.value = e / (double)factorial(d) * f;
      b.note = "t = " + std::to_string(*t) + " generators of the maximal ideal";
      // Exact when t is a perfect (d-1)-th power m^(d-1): f = t/(m-1)^(d-1).
      if (e_exact) {
        std::uint64_t m = (std::uint64_t)std::llround(troot);
        __int128 mp = 1;
        for (unsigned i = 0; i < d - 1; ++i) mp *= (__int128)m;
        if (m >= 2 && mp == (__int128)*t) {
          __int128 den = 1;
          for (unsigned i = 0; i < d - 1; ++i) den *= (__int128)(m - 1);
          b.exact = *e_exact * Rat::make((__int128)*t, den * (__int128)factorial(d));
          b.value = b.exact->to_double();
        }
      }
    } else {
      b.note = "needs dimension >= 2 and t >= 2";
    }
    out.push_back(std::move(b));
  }

  { // e 2^(d-1)/d! for hypersurfaces of dimension >= 3.
    BoundEntry b;
    b.name = "hypersurface-volume";
    b.applicable = hypersurface && d >= 3;
    b.note = "hypersurface of dimension >= 3";
    std::optional<Rat> exact;
    if (e_exact && d >= 1)
      exact = *e_exact * Rat::make((__int128)1 << (d - 1), (__int128)factorial(d));
    rat_or_double(b, exact, e * std::pow(2.0, (double)(d - 1)) / (double)factorial(d));
    out.push_back(std::move(b));
  }

  { // 1 + 1/(e-1): needs Gorenstein and non-F-rational, which we never decide.
    BoundEntry b;
    b.name = "gorenstein-non-f-rational";
    b.applicable = false;
    b.informational = true;
    b.note =
        "informational: requires Gorenstein non-F-rational, not decided by "
        "this tool";
    if (e > 1) {
      std::optional<Rat> exact;
      if (e_exact && *e_exact > Rat::of(1))
        exact = Rat::of(1) + Rat::of(1) / (*e_exact - Rat::of(1));
      rat_or_double(b, exact, 1.0 + 1.0 / (e - 1.0));
    } else {
      b.note += "; needs e > 1";
    }
    out.push_back(std::move(b));
  }

  { // Conjectured bound 1 + a_d from the sec+tan expansion; never enforced.
    BoundEntry b;
    b.name = "sec-tan-conjecture";
    b.applicable = false;
    b.informational = true;
    b.note = "conjectural lower bound, reported for comparison only";
    try {
      Rat ad = sectan_coefficient(d);
      b.exact = Rat::of(1) + ad;
      b.value = b.exact->to_double();
    } catch (const std::overflow_error&) {
      b.value = 1.0;
      b.note += "; coefficient overflow at this dimension";
    }
    out.push_back(std::move(b));
  }

  return out;
}

// ---- reference corpus of exactly known values -----------------------------

struct ReferenceValue {
  std::string id;
  Rat e_hk{0, 1};
  std::optional<Rat> fsig;
  std::uint64_t min_p = 2; // smallest characteristic the closed form covers
  std::string note;
};

// Exact values for the classical families; ids: A<n>, D<n> (n>=4), E6, E7,
// E8, quadric_rank1..3, cubic_smooth, cubic_nodal, veronese_<d>_<r>.
inline std::optional<ReferenceValue> reference_lookup(const std::string& id) {
  auto parse_suffix = [](const std::string& s, std::size_t at) -> std::optional<std::int64_t> {
    if (at >= s.size()) return std::nullopt;
    std::int64_t v = 0;
    for (std::size_t i = at; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) return std::nullopt;
    }
    return v;
  };
  if (id.size() >= 2 && id[0] == 'A') {
    auto n = parse_suffix(id, 1);
    if (n && *n >= 1)
      return ReferenceValue{id, Rat::make(2 * *n + 1, *n + 1), Rat::make(1, *n + 1), 2,
                            "two-variable quotient singularity, cyclic of order n+1"};
  }
  if (id.size() >= 2 && id[0] == 'D') {
    auto n = parse_suffix(id, 1);
    if (n && *n >= 4)
      return ReferenceValue{id, Rat::make(8 * *n - 17, 4 * (*n - 2)),
                            Rat::make(1, 4 * (*n - 2)), 3,
                            "binary dihedral quotient singularity"};
  }
  if (id == "E6")
    return ReferenceValue{id, Rat::of(47, 24), Rat::of(1, 24), 5, "binary tetrahedral"};
  if (id == "E7")
    return ReferenceValue{id, Rat::of(95, 48), Rat::of(1, 48), 5, "binary octahedral"};
  if (id == "E8")
    return ReferenceValue{id, Rat::of(239, 120), Rat::of(1, 120), 7, "binary icosahedral"};
  if (id == "quadric_rank1")
    return ReferenceValue{id, Rat::of(2), std::nullopt, 3, "double hyperplane x^2 in four variables"};
  if (id == "quadric_rank2")
    return ReferenceValue{id, Rat::of(3, 2), std::nullopt, 3, "x^2 - yz in four variables"};
  if (id == "quadric_rank3")
    return ReferenceValue{id, Rat::of(4, 3), std::nullopt, 3, "xy - zw in four variables"};
  if (id == "cubic_smooth")
    return ReferenceValue{id, Rat::of(9, 4), std::nullopt, 5, "cone over a smooth plane cubic"};
  if (id == "cubic_nodal")
    return ReferenceValue{id, Rat::of(7, 3), std::nullopt, 5, "cone over a nodal or cuspidal plane cubic"};
  if (id.rfind("veronese_", 0) == 0) {
    std::size_t us = id.find('_', 9);
    if (us != std::string::npos) {
      auto d = parse_suffix(id.substr(0, us), 9);
      auto r = parse_suffix(id, us + 1);
      if (d && r && *d >= 1 && *r >= 1 && *d + *r <= 40) {
        Rat e = Rat::make((__int128)binomial((unsigned)(*d + *r - 1), (unsigned)*r), *r);
        return ReferenceValue{id, e, std::nullopt, 2,
                              "degree-r Veronese of a d-variable polynomial ring; "
                              "assumes p does not divide r"};
      }
    }
  }
  return std::nullopt;
}

inline std::vector<ReferenceValue> reference_values() {
  std::vector<ReferenceValue> out;
  for (const char* id : {"A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8",
                         "quadric_rank1", "quadric_rank2", "quadric_rank3",
                         "cubic_smooth", "cubic_nodal", "veronese_2_2", "veronese_2_3"})
    out.push_back(*reference_lookup(id));
  return out;
}

} // namespace hk
