// Fixture-driven verification: each fixture is a presentation file plus an
// expected-values JSON; the harness runs the pipeline and compares.
#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hk/report.hpp"

namespace hk {

struct VerifyCheck {
  std::string fixture;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
  double total_seconds = 0;

  void add(const std::string& fixture, const std::string& name, bool pass,
           const std::string& detail = "") {
    checks.push_back({fixture, name, pass, detail});
    all_pass = all_pass && pass;
  }
};

namespace detail {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::optional<Rat> rat_from_string(const std::string& s) {
  std::int64_t num = 0, den = 1;
  std::size_t slash = s.find('/');
  try {
    num = std::stoll(s.substr(0, slash));
    if (slash != std::string::npos) den = std::stoll(s.substr(slash + 1));
  } catch (...) {
    return std::nullopt;
  }
  if (den == 0) return std::nullopt;
  return Rat::make(num, den);
}

} // namespace detail

// Run one fixture (presentation at `hk_path`, expectations at `exp_path`) and
// append its check lines.
inline void verify_fixture(const std::filesystem::path& hk_path,
                           const std::filesystem::path& exp_path, VerifyResult& out,
                           const SeriesOptions& base_opts, const Limits& lim) {
  const std::string name = hk_path.stem().string();
  json exp;
  try {
    exp = json::parse(detail::read_file(exp_path));
  } catch (const std::exception& e) {
    out.add(name, "load", false, e.what());
    return;
  }
  try {
    ParsedProblem prob = parse_problem(detail::read_file(hk_path));
    SeriesOptions opts = base_opts;
    if (exp.contains("emax")) opts.e_max = exp["emax"].get<unsigned>();
    const std::string task = exp.value("task", std::string("compute"));

    double alpha = 0;
    std::optional<Rat> alpha_rational;
    std::optional<ComputeResult> cres;
    std::optional<FsigResult> fres;
    if (task == "fsig") {
      fres = run_fsig(prob, opts, lim);
      alpha = fres->estimate.alpha;
      alpha_rational = fres->estimate.alpha_rational;
    } else {
      cres = run_compute(prob, opts, lim);
      alpha = cres->estimate.alpha;
      alpha_rational = cres->estimate.alpha_rational;
    }

    if (exp.contains("alpha")) {
      double want = exp["alpha"].get<double>();
      double tol = exp.value("alpha_tol", 1e-2);
      std::ostringstream d;
      d << "got " << std::setprecision(10) << alpha << ", want " << want << " +/- " << tol;
      out.add(name, task + " limit value", std::abs(alpha - want) <= tol, d.str());
    }
    if (exp.contains("alpha_rational")) {
      auto want = detail::rat_from_string(exp["alpha_rational"].get<std::string>());
      bool ok = want && alpha_rational && *alpha_rational == *want;
      out.add(name, task + " exact limit",  ok,
              "got " + (alpha_rational ? alpha_rational->str() : std::string("none")) +
                  ", want " + exp["alpha_rational"].get<std::string>());
    }
    if (exp.contains("reference")) {
      auto ref = reference_lookup(exp["reference"].get<std::string>());
      if (!ref) {
        out.add(name, "reference id", false, "unknown id");
      } else {
        Rat want = task == "fsig" && ref->fsig ? *ref->fsig : ref->e_hk;
        double tol = exp.value("alpha_tol", 1e-2);
        std::ostringstream d;
        d << "got " << std::setprecision(10) << alpha << ", reference " << want.str();
        out.add(name, "reference " + ref->id, std::abs(alpha - want.to_double()) <= tol,
                d.str());
      }
    }
    if (cres && exp.contains("series")) {
      bool ok = true;
      std::string miss;
      for (auto it = exp["series"].begin(); it != exp["series"].end(); ++it) {
        unsigned e = (unsigned)std::stoul(it.key());
        std::uint64_t want = it.value().get<std::uint64_t>();
        bool found = false;
        for (const auto& s : cres->series.samples)
          if (s.e == e) {
            found = true;
            if (s.colength != want) {
              ok = false;
              miss = "e=" + it.key() + ": got " + std::to_string(s.colength) + ", want " +
                     std::to_string(want);
            }
          }
        if (!found) {
          ok = false;
          miss = "e=" + it.key() + " not computed";
        }
        if (!ok) break;
      }
      out.add(name, "series values", ok, miss);
    }
    if (cres && exp.contains("multiplicity")) {
      auto want = detail::rat_from_string(exp["multiplicity"].get<std::string>());
      bool ok = want && cres->multiplicity && cres->multiplicity->exact &&
                *cres->multiplicity->exact == *want;
      out.add(name, "ideal multiplicity", ok,
              "got " +
                  (cres->multiplicity && cres->multiplicity->exact
                       ? cres->multiplicity->exact->str()
                       : std::string("none")) +
                  ", want " + exp["multiplicity"].get<std::string>());
    }
    if (cres && exp.value("bounds_satisfied", false)) {
      bool ok = true;
      std::string bad;
      for (const auto& b : cres->bounds)
        if (b.applicable && !b.informational &&
            alpha < b.value - bound_check_tolerance) {
          ok = false;
          bad = b.name + " = " + std::to_string(b.value);
        }
      out.add(name, "lower bounds", ok, bad);
    }
  } catch (const std::exception& e) {
    out.add(name, "run", false, e.what());
  }
}

// Run every fixture in `dir` (pairs <stem>.hk / <stem>.expected.json) whose
// stem contains `filter`; `budget_s` caps the total wall clock.
inline VerifyResult run_verify(const std::string& dir, const std::string& filter = "",
                               double budget_s = 1200,
                               const SeriesOptions& opts = {}) {
  namespace fs = std::filesystem;
  auto t0 = std::chrono::steady_clock::now();
  Limits lim;
  lim.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(budget_s));
  VerifyResult out;
  std::vector<fs::path> fixtures;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".hk") fixtures.push_back(entry.path());
  std::sort(fixtures.begin(), fixtures.end());
  if (fixtures.empty()) out.add("(corpus)", "discover fixtures", false, "no .hk files in " + dir);
  for (const auto& p : fixtures) {
    if (!filter.empty() && p.stem().string().find(filter) == std::string::npos) continue;
    fs::path exp = p;
    exp.replace_extension(".expected.json");
    if (!fs::exists(exp)) {
      out.add(p.stem().string(), "load", false, "missing " + exp.filename().string());
      continue;
    }
    verify_fixture(p, exp, out, opts, lim);
  }
  if (!filter.empty() && out.checks.empty())
    out.add("(corpus)", "filter", false, "no fixture matches '" + filter + "'");
  out.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

inline std::string verify_summary(const VerifyResult& res) {
  std::ostringstream out;
  for (const auto& c : res.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.fixture << " :: " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : res.checks) passed += c.pass;
  out << (res.all_pass ? "OK" : "FAILED") << ": " << passed << "/" << res.checks.size()
      << " checks passed in " << std::setprecision(3) << res.total_seconds << "s\n";
  return out.str();
}

} // namespace hk
