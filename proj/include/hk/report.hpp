// Full pipelines behind the CLI: run the series, estimate the limits, attach
// the closed-form bounds, and render everything as a deterministic JSON
// report (or a human table / CSV).
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hk/bounds.hpp"
#include "hk/estimate.hpp"
#include "hk/frobenius.hpp"
#include "hk/presentation.hpp"
#include "hk/version.hpp"

namespace hk {

using json = nlohmann::ordered_json;

// Tolerance for the per-row "satisfied" comparison of an estimated limit
// against a lower bound: estimates carry extrapolation error, so a bound is
// only flagged when violated by more than this margin.
inline constexpr double bound_check_tolerance = 1e-2;

struct ComputeResult {
  ParsedProblem problem;
  OriginCheck origin;
  HKSeries series;
  LeadingEstimate estimate;
  std::optional<DifferenceEstimate> multiplicity; // of the given ideal
  std::vector<BoundEntry> bounds;
  bool ideal_is_maximal = false;
  double total_seconds = 0;
  unsigned cache_hits = 0;
};

namespace detail {

inline json series_json(const std::vector<HKSample>& samples, const char* exp_key) {
  json arr = json::array();
  for (const auto& s : samples) {
    json row;
    row[exp_key] = s.e;
    row["q"] = s.q;
    row["colength"] = s.colength;
    arr.push_back(std::move(row));
  }
  return arr;
}

inline json rat_json(const std::optional<Rat>& r) {
  if (!r) return nullptr;
  return r->str();
}

} // namespace detail

// parse -> validate -> series -> estimate -> bounds.
inline ComputeResult run_compute(const ParsedProblem& prob, const SeriesOptions& opts = {},
                                 const Limits& lim = {}) {
  auto t0 = std::chrono::steady_clock::now();
  ComputeResult res;
  res.problem = prob;
  res.origin = validate_origin_primary(prob.ideal, prob.ring, lim);
  if (!res.origin.ok) throw ValidationError(res.origin.reason);
  res.series = hk_series(prob, opts, lim);
  std::vector<SeriesPoint> pts;
  pts.push_back({1, res.origin.colength});
  for (const auto& s : res.series.samples) pts.push_back({s.q, s.colength});
  const unsigned d = prob.ring.dimension;
  res.estimate = estimate_leading(pts, d);
  res.ideal_is_maximal = res.origin.colength == 1;

  // Multiplicity of the ideal from ordinary powers (needed by the bounds and
  // reported alongside); skipped when its own samples would blow the budget.
  // The length function only agrees with its polynomial once n passes every
  // generator degree, so sample beyond the largest degree in play.
  unsigned max_deg = 1;
  auto bump_deg = [&](const std::vector<Poly>& fs) {
    for (const Poly& f : fs)
      for (const auto& t : f.terms())
        max_deg = std::max(max_deg, (unsigned)t.mono.degree());
  };
  bump_deg(prob.ring.defining);
  bump_deg(prob.ideal.generators);
  try {
    auto ord = ordinary_power_series(prob, std::max(d + 3, max_deg + 3), opts, lim);
    std::vector<SeriesPoint> opts_pts;
    for (const auto& s : ord) opts_pts.push_back({s.q, s.colength});
    res.multiplicity = estimate_hs_multiplicity(opts_pts, d);
  } catch (const ResourceError&) {
    res.multiplicity = std::nullopt;
  }

  if (prob.ring.is_polynomial_ring() && res.ideal_is_maximal) {
    BoundEntry kunz;
    kunz.name = "kunz";
    kunz.value = 1.0;
    kunz.exact = Rat::of(1);
    kunz.applicable = true;
    kunz.note = "regular: Kunz equality";
    res.bounds.push_back(std::move(kunz));
  } else if (res.ideal_is_maximal && d >= 1) {
    double e_mult = res.multiplicity ? res.multiplicity->value : 0.0;
    std::optional<Rat> e_exact = res.multiplicity ? res.multiplicity->exact : std::nullopt;
    if (res.multiplicity) {
      res.bounds = closed_form_bounds(d, prob.ring.p, e_mult, e_exact,
                                      (unsigned)prob.ring.vars.size(),
                                      prob.ring.defining.size() == 1);
    }
  }

  for (const auto& s : res.series.samples) res.cache_hits += s.from_cache ? 1 : 0;
  res.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline json compute_report_json(const ComputeResult& res) {
  json out;
  out["problem"] = print_problem(res.problem);
  out["dimension"] = res.problem.ring.dimension;
  out["series"] = detail::series_json(res.series.samples, "e");
  if (res.series.stopped_by_cap) out["series_stopped"] = res.series.stop_reason;
  json est;
  est["alpha"] = res.estimate.alpha;
  est["beta"] = res.estimate.beta;
  est["alpha_rational"] = detail::rat_json(res.estimate.alpha_rational);
  est["method"] = res.estimate.method;
  est["residual"] = res.estimate.residual;
  if (res.multiplicity) {
    est["multiplicity"] = res.multiplicity->value;
    est["multiplicity_exact"] = detail::rat_json(res.multiplicity->exact);
  } else {
    est["multiplicity"] = nullptr;
    est["multiplicity_exact"] = nullptr;
  }
  out["estimate"] = std::move(est);
  json rows = json::array();
  for (const auto& b : res.bounds) {
    json row;
    row["name"] = b.name;
    row["value"] = b.value;
    if (b.exact) row["exact"] = b.exact->str();
    bool satisfied = true;
    if (b.applicable && !b.informational && b.name != "kunz")
      satisfied = res.estimate.alpha >= b.value - bound_check_tolerance;
    row["satisfied"] = satisfied;
    row["applicable"] = b.applicable;
    row["note"] = b.note;
    rows.push_back(std::move(row));
  }
  out["bounds"] = std::move(rows);
  json timing;
  timing["total_s"] = res.total_seconds;
  json per = json::array();
  for (const auto& s : res.series.samples) per.push_back(s.seconds);
  timing["samples_s"] = std::move(per);
  timing["cache_hits"] = res.cache_hits;
  out["timing"] = std::move(timing);
  json prov;
  prov["engine"] = engine_version;
  out["provenance"] = std::move(prov);
  return out;
}

struct FsigResult {
  ParsedProblem problem; // ideal = the parameter ideal J
  SplitSeries series;
  LeadingEstimate estimate;
  std::optional<ReferenceValue> reference; // when the caller names a known family
  double total_seconds = 0;
  unsigned cache_hits = 0;
};

inline FsigResult run_fsig(const ParsedProblem& prob, const SeriesOptions& opts = {},
                           const Limits& lim = {},
                           const std::optional<std::string>& reference_id = std::nullopt) {
  auto t0 = std::chrono::steady_clock::now();
  FsigResult res;
  res.problem = prob;
  res.series = splitting_series(prob, opts, lim);
  std::vector<SeriesPoint> pts;
  for (const auto& s : res.series.samples) pts.push_back({s.q, s.splitting});
  if (pts.empty()) throw ValidationError("no splitting samples computed");
  res.estimate = estimate_leading(pts, prob.ring.dimension);
  if (reference_id) res.reference = reference_lookup(*reference_id);
  for (const auto& s : res.series.samples) res.cache_hits += s.from_cache ? 1 : 0;
  res.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline json fsig_report_json(const FsigResult& res) {
  json out;
  out["problem"] = print_problem(res.problem);
  out["dimension"] = res.problem.ring.dimension;
  json arr = json::array();
  for (const auto& s : res.series.samples) {
    json row;
    row["e"] = s.e;
    row["q"] = s.q;
    row["lambda_param"] = s.lambda_param;
    row["lambda_socle"] = s.lambda_socle;
    row["splitting"] = s.splitting;
    arr.push_back(std::move(row));
  }
  out["series"] = std::move(arr);
  if (res.series.stopped_by_cap) out["series_stopped"] = res.series.stop_reason;
  json est;
  est["alpha"] = res.estimate.alpha;
  est["beta"] = res.estimate.beta;
  est["alpha_rational"] = detail::rat_json(res.estimate.alpha_rational);
  est["method"] = res.estimate.method;
  est["residual"] = res.estimate.residual;
  out["estimate"] = std::move(est);
  if (res.reference) {
    json ref;
    ref["id"] = res.reference->id;
    ref["e_hk"] = res.reference->e_hk.str();
    ref["fsig"] = detail::rat_json(res.reference->fsig);
    if (res.reference->fsig)
      ref["matches"] =
          std::abs(res.estimate.alpha - res.reference->fsig->to_double()) < 5e-2;
    out["reference"] = std::move(ref);
  }
  json timing;
  timing["total_s"] = res.total_seconds;
  json per = json::array();
  for (const auto& s : res.series.samples) per.push_back(s.seconds);
  timing["samples_s"] = std::move(per);
  timing["cache_hits"] = res.cache_hits;
  out["timing"] = std::move(timing);
  json prov;
  prov["engine"] = engine_version;
  out["provenance"] = std::move(prov);
  return out;
}

inline json bounds_report_json(unsigned d, std::uint64_t p, double e,
                               std::optional<Rat> e_exact, std::optional<unsigned> t,
                               bool hypersurface) {
  json out;
  out["dimension"] = d;
  out["p"] = p;
  out["e"] = e;
  out["t"] = t ? json(*t) : json(nullptr);
  out["hypersurface"] = hypersurface;
  json rows = json::array();
  for (const auto& b : closed_form_bounds(d, p, e, e_exact, t, hypersurface)) {
    json row;
    row["name"] = b.name;
    row["value"] = b.value;
    if (b.exact) row["exact"] = b.exact->str();
    row["applicable"] = b.applicable;
    row["informational"] = b.informational;
    row["note"] = b.note;
    rows.push_back(std::move(row));
  }
  out["bounds"] = std::move(rows);
  return out;
}

// ---- human-readable rendering ---------------------------------------------

inline std::string compute_report_table(const ComputeResult& res) {
  std::ostringstream out;
  out << "problem    " << print_problem(res.problem) << "\n";
  out << "dimension  " << res.problem.ring.dimension << "\n\n";
  out << "  e          q        colength\n";
  for (const auto& s : res.series.samples)
    out << std::setw(3) << s.e << std::setw(11) << s.q << std::setw(16) << s.colength
        << (s.from_cache ? "  (cached)" : "") << "\n";
  if (res.series.stopped_by_cap) out << "  [" << res.series.stop_reason << "]\n";
  out << "\nlimit multiplicity " << std::setprecision(10) << res.estimate.alpha;
  if (res.estimate.alpha_rational) out << "  ~ " << res.estimate.alpha_rational->str();
  out << "  (" << res.estimate.method << ", residual " << std::setprecision(3)
      << res.estimate.residual << ")\n";
  if (res.multiplicity) {
    out << "ideal multiplicity " << std::setprecision(10) << res.multiplicity->value;
    if (res.multiplicity->exact) out << " = " << res.multiplicity->exact->str();
    out << "\n";
  }
  if (!res.bounds.empty()) {
    out << "\nbounds (lower bounds on the limit multiplicity)\n";
    for (const auto& b : res.bounds) {
      out << "  " << std::left << std::setw(28) << b.name << std::right
          << std::setw(12) << std::setprecision(6) << b.value;
      if (b.exact) out << " = " << b.exact->str();
      if (!b.applicable) out << "  [n/a]";
      if (!b.note.empty()) out << "  -- " << b.note;
      out << "\n";
    }
  }
  out << "\ntotal " << std::setprecision(3) << res.total_seconds << "s, "
      << res.cache_hits << " cache hits\n";
  return out.str();
}

inline std::string fsig_report_table(const FsigResult& res) {
  std::ostringstream out;
  out << "problem    " << print_problem(res.problem) << "\n";
  out << "dimension  " << res.problem.ring.dimension << "\n\n";
  out << "  e          q    lambda(J)    lambda(J:m)     splitting\n";
  for (const auto& s : res.series.samples)
    out << std::setw(3) << s.e << std::setw(11) << s.q << std::setw(13) << s.lambda_param
        << std::setw(15) << s.lambda_socle << std::setw(14) << s.splitting << "\n";
  out << "\nF-signature " << std::setprecision(10) << res.estimate.alpha;
  if (res.estimate.alpha_rational) out << "  ~ " << res.estimate.alpha_rational->str();
  out << "  (" << res.estimate.method << ", residual " << std::setprecision(3)
      << res.estimate.residual << ")\n";
  if (res.reference && res.reference->fsig)
    out << "reference   " << res.reference->id << ": " << res.reference->fsig->str() << "\n";
  out << "\ntotal " << std::setprecision(3) << res.total_seconds << "s, "
      << res.cache_hits << " cache hits\n";
  return out.str();
}

inline std::string series_csv(const ComputeResult& res) {
  std::ostringstream out;
  out << "e,q,colength\n";
  for (const auto& s : res.series.samples)
    out << s.e << "," << s.q << "," << s.colength << "\n";
  return out.str();
}

} // namespace hk
