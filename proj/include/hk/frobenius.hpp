// Frobenius-power series: colengths of bracket powers I^[q] (the raw data of
// the limit multiplicity), colengths of ordinary powers I^n (for the usual
// multiplicity), and splitting numbers for the F-signature of Gorenstein
// quotients.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hk/cache.hpp"
#include "hk/groebner.hpp"
#include "hk/presentation.hpp"

namespace hk {

// q = p^e with overflow protection.
inline std::uint64_t pow_q(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > UINT64_MAX / p) throw std::overflow_error("p^e overflows");
    q *= p;
  }
  return q;
}

// Generators of the bracket power I^[q]: each generator raised to the q-th
// power, which in characteristic p just multiplies every exponent by q.
inline std::vector<Poly> bracket_power(const std::vector<Poly>& gens, std::uint64_t q) {
  std::vector<Poly> out;
  out.reserve(gens.size());
  for (const Poly& g : gens) out.push_back(frobenius_power(g, q));
  return out;
}

struct HKSample {
  unsigned e = 0;
  std::uint64_t q = 1;
  std::uint64_t colength = 0;
  bool from_cache = false;
  double seconds = 0;
};

struct HKSeries {
  std::vector<HKSample> samples;
  bool stopped_by_cap = false; // auto mode predicted the next step over budget
  std::string stop_reason;
};

struct SeriesOptions {
  std::optional<unsigned> e_max;              // explicit exponent range; else auto
  std::uint64_t max_colength = 10000000;      // budget per sample
  double timeout_s = 600;                     // wall-clock budget per sample
  unsigned workers = 1;                        // parallel samples (explicit e_max only)
  ColengthCache* cache = nullptr;
};

// Largest exponent worth attempting by default, by quotient dimension: the
// colength grows like q^d, so high dimension exhausts the budget immediately.
inline unsigned default_e_max(unsigned d) {
  if (d <= 1) return 9;
  if (d == 2) return 5;
  if (d == 3) return 3;
  return 2;
}

namespace detail {

// Colength of (defining + powered generators), consulting the cache.
inline HKSample colength_sample(const RingPresentation& ring, const std::vector<Poly>& gens,
                                unsigned e, std::uint64_t q, const SeriesOptions& opts,
                                const Limits& lim) {
  HKSample s;
  s.e = e;
  s.q = q;
  std::vector<Poly> all = bracket_power(gens, q);
  all.insert(all.end(), ring.defining.begin(), ring.defining.end());
  std::string key;
  if (opts.cache) {
    key = colength_cache_key(ring.ambient(), all);
    if (auto hit = opts.cache->get(key)) {
      s.colength = *hit;
      s.from_cache = true;
      return s;
    }
  }
  auto t0 = std::chrono::steady_clock::now();
  Limits local = lim;
  local.max_colength = opts.max_colength;
  if (opts.timeout_s > 0) {
    auto dl = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(opts.timeout_s));
    local.deadline = local.deadline ? std::min(*local.deadline, dl) : dl;
  }
  GroebnerBasis g = buchberger(ring.ambient(), all, local);
  auto len = colength(g, local);
  if (!len)
    throw ValidationError("colength is infinite: the ideal is not zero-dimensional "
                          "over the quotient");
  s.colength = *len;
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (opts.cache) opts.cache->put(key, s.colength);
  return s;
}

} // namespace detail

// The colength series e -> lambda(R/I^[q]), q = p^e, e = 1..e_max.  In auto
// mode (no explicit e_max) the series additionally stops as soon as the next
// sample is predicted to exceed the colength budget (prediction: the last
// colength times p^dim).  With an explicit e_max the budget is a hard cap and
// tripping it raises ResourceError.
inline HKSeries hk_series(const ParsedProblem& prob, const SeriesOptions& opts = {},
                          const Limits& lim = {}) {
  const RingPresentation& ring = prob.ring;
  const unsigned d = ring.dimension;
  const bool auto_mode = !opts.e_max.has_value();
  const unsigned e_max = auto_mode ? default_e_max(d) : *opts.e_max;
  if (e_max > 9) throw ValidationError("e_max exceeds the supported range (9)");

  HKSeries out;
  if (!auto_mode && opts.workers > 1) {
    // Independent samples; each worker owns a disjoint slice of exponents.
    out.samples.resize(e_max);
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::atomic<unsigned> next{1};
    unsigned n = std::min(opts.workers, e_max);
    for (unsigned w = 0; w < n; ++w)
      pool.emplace_back([&] {
        for (;;) {
          unsigned e = next.fetch_add(1);
          if (e > e_max) return;
          try {
            out.samples[e - 1] =
                detail::colength_sample(ring, prob.ideal.generators, e, pow_q(ring.p, e),
                                        opts, lim);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
  }

  for (unsigned e = 1; e <= e_max; ++e) {
    if (!out.samples.empty()) {
      // Predict the next colength from growth ~ q^d.
      std::uint64_t last = out.samples.back().colength;
      std::uint64_t factor = 1;
      bool over = false;
      for (unsigned i = 0; i < d; ++i) {
        if (factor > UINT64_MAX / ring.p) {
          over = true;
          break;
        }
        factor *= ring.p;
      }
      if (!over && last > 0 && factor > 0) over = last > opts.max_colength / factor;
      if (over) {
        if (auto_mode) {
          out.stopped_by_cap = true;
          out.stop_reason = "next sample predicted to exceed the colength budget of " +
                            std::to_string(opts.max_colength);
          break;
        }
        throw ResourceError(ResourceError::Kind::colength,
                            "sample e=" + std::to_string(e) +
                                " predicted to exceed the colength budget of " +
                                std::to_string(opts.max_colength));
      }
    }
    out.samples.push_back(detail::colength_sample(ring, prob.ideal.generators, e,
                                                  pow_q(ring.p, e), opts, lim));
  }
  return out;
}

// Colengths of ordinary powers lambda(R/I^n), n = 1..n_max, the input of the
// usual-multiplicity estimator.  Generators of I^n are the degree-n products
// of the generators of I.
inline std::vector<HKSample> ordinary_power_series(const ParsedProblem& prob,
                                                   unsigned n_max,
                                                   const SeriesOptions& opts = {},
                                                   const Limits& lim = {}) {
  const std::vector<Poly>& gens = prob.ideal.generators;
  std::vector<HKSample> out;
  std::vector<Poly> power = gens; // generators of I^n
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) {
      // products of a generator of I^(n-1) with a generator of I, deduplicated
      // by canonical string
      std::vector<Poly> next;
      std::vector<std::string> seen;
      std::vector<std::string> names;
      for (std::uint32_t i = 0; i < prob.ring.ambient().nvars; ++i)
        names.push_back("v" + std::to_string(i));
      for (const Poly& a : power)
        for (const Poly& b : gens) {
          Poly c = a * b;
          std::string s = poly_to_string(c, names);
          if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
            seen.push_back(std::move(s));
            next.push_back(std::move(c));
          }
        }
      power = std::move(next);
    }
    HKSample s;
    s.e = n; // reuse the sample record; e holds n and q mirrors it
    s.q = n;
    std::vector<Poly> all = power;
    all.insert(all.end(), prob.ring.defining.begin(), prob.ring.defining.end());
    Limits local = lim;
    local.max_colength = opts.max_colength;
    auto t0 = std::chrono::steady_clock::now();
    if (opts.timeout_s > 0) {
      auto dl = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(opts.timeout_s));
      local.deadline = local.deadline ? std::min(*local.deadline, dl) : dl;
    }
    GroebnerBasis g = buchberger(prob.ring.ambient(), all, local);
    auto len = colength(g, local);
    if (!len)
      throw ValidationError("colength is infinite: the ideal is not zero-dimensional "
                            "over the quotient");
    s.colength = *len;
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(s);
  }
  return out;
}

struct SplitSample {
  unsigned e = 0;
  std::uint64_t q = 1;
  std::uint64_t lambda_param = 0;  // lambda(R/J^[q])
  std::uint64_t lambda_socle = 0;  // lambda(R/(J:m)^[q])
  std::uint64_t splitting = 0;     // their difference, the free-rank number
  bool from_cache = false;
  double seconds = 0;
};

struct SplitSeries {
  std::vector<SplitSample> samples;
  bool stopped_by_cap = false;
  std::string stop_reason;
  std::uint64_t socle_colength = 0; // lambda(R/(J:m)) at q=1
};

// Splitting numbers a_q for the F-signature of a Gorenstein quotient: with J
// a parameter ideal and K = (J + defining) : m, duality in the artinian
// Gorenstein ring R/JR gives a_q = lambda(R/J^[q]) - lambda(R/K^[q]).  The
// colon is computed once; its generators are then bracket-powered alongside
// J's (the defining equations enter unpowered, as always).
inline SplitSeries splitting_series(const ParsedProblem& prob, const SeriesOptions& opts = {},
                                    const Limits& lim = {}) {
  const RingPresentation& ring = prob.ring;
  Ambient amb = ring.ambient();
  if (prob.ideal.generators.size() != ring.dimension)
    throw ValidationError("F-signature requires a full system of parameters: expected " +
                          std::to_string(ring.dimension) + " generators, got " +
                          std::to_string(prob.ideal.generators.size()));
  std::vector<Poly> j_all = prob.ideal.generators;
  j_all.insert(j_all.end(), ring.defining.begin(), ring.defining.end());
  GroebnerBasis jg = buchberger(amb, j_all, lim);
  if (!colength(jg, lim))
    throw ValidationError("not a system of parameters: the quotient by the "
                          "parameter ideal is not artinian");
  if (!is_gorenstein_artinian(jg, lim))
    throw ValidationError("F-signature computation requires the quotient by the "
                          "parameter ideal to be Gorenstein (one-dimensional socle)");
  std::vector<Poly> vars;
  for (std::uint32_t i = 0; i < amb.nvars; ++i) vars.push_back(Poly::variable(amb, i));
  GroebnerBasis kg = ideal_colon_ideal(jg, vars, lim);

  SplitSeries out;
  {
    auto sc = colength(kg, lim);
    if (!sc)
      throw ValidationError("parameter ideal is not zero-dimensional over the quotient");
    out.socle_colength = *sc;
  }
  const unsigned d = ring.dimension;
  const bool auto_mode = !opts.e_max.has_value();
  const unsigned e_max = auto_mode ? default_e_max(d) : *opts.e_max;
  if (e_max > 9) throw ValidationError("e_max exceeds the supported range (9)");

  for (unsigned e = 1; e <= e_max; ++e) {
    if (!out.samples.empty()) {
      std::uint64_t last = out.samples.back().lambda_param;
      std::uint64_t factor = 1;
      bool over = false;
      for (unsigned i = 0; i < d; ++i) {
        if (factor > UINT64_MAX / ring.p) {
          over = true;
          break;
        }
        factor *= ring.p;
      }
      if (!over && last > 0 && factor > 0) over = last > opts.max_colength / factor;
      if (over) {
        if (auto_mode) {
          out.stopped_by_cap = true;
          out.stop_reason = "next sample predicted to exceed the colength budget of " +
                            std::to_string(opts.max_colength);
          break;
        }
        throw ResourceError(ResourceError::Kind::colength,
                            "sample e=" + std::to_string(e) +
                                " predicted to exceed the colength budget of " +
                                std::to_string(opts.max_colength));
      }
    }
    std::uint64_t q = pow_q(ring.p, e);
    HKSample a = detail::colength_sample(ring, prob.ideal.generators, e, q, opts, lim);
    HKSample b = detail::colength_sample(ring, kg.generators(), e, q, opts, lim);
    if (a.colength < b.colength)
      throw std::logic_error("splitting number would be negative");
    SplitSample s;
    s.e = e;
    s.q = q;
    s.lambda_param = a.colength;
    s.lambda_socle = b.colength;
    s.splitting = a.colength - b.colength;
    s.from_cache = a.from_cache && b.from_cache;
    s.seconds = a.seconds + b.seconds;
    out.samples.push_back(s);
  }
  return out;
}

} // namespace hk
