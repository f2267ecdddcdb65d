// hk: exact colength series of Frobenius powers, limit-multiplicity and
// F-signature estimates, closed-form lower bounds, and the fixture
// verification harness.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hk/report.hpp"
#include "hk/verify.hpp"

namespace {

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(arg);
  if (!in) throw hk::ValidationError("cannot open input file '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonFlags {
  std::optional<unsigned> emax;
  std::string order = "degrevlex";
  bool table = false;
  bool csv = false;
  unsigned workers = 1;
  std::string cache_dir;
  std::uint64_t max_colength = 10000000;
  double timeout = 600;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_csv) {
  cmd->add_option("--emax", f.emax, "largest Frobenius exponent e (default: by dimension)");
  cmd->add_option("--order", f.order, "monomial order")
      ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}));
  auto* json_flag = cmd->add_flag("--json", "JSON report (default)");
  auto* table_flag = cmd->add_flag("--table", f.table, "human-readable table");
  table_flag->excludes(json_flag);
  if (with_csv) {
    auto* csv_flag = cmd->add_flag("--csv", f.csv, "series as CSV");
    csv_flag->excludes(json_flag);
    csv_flag->excludes(table_flag);
  }
  cmd->add_option("--workers", f.workers, "parallel sample workers (with --emax)")
      ->check(CLI::Range(1u, 64u));
  cmd->add_option("--cache", f.cache_dir, "cache directory (or env HK_CACHE_DIR)");
  cmd->add_option("--max-colength", f.max_colength, "per-sample colength budget");
  cmd->add_option("--timeout", f.timeout, "per-sample wall clock budget, seconds");
}

std::unique_ptr<hk::FileCache> open_cache(const std::string& flag_dir) {
  std::string dir = flag_dir;
  if (dir.empty())
    if (const char* env = std::getenv("HK_CACHE_DIR")) dir = env;
  if (dir.empty()) return nullptr;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    std::cerr << "warning: cache directory '" << dir << "' unusable, proceeding uncached\n";
    return nullptr;
  }
  return std::make_unique<hk::FileCache>((std::filesystem::path(dir) / "hk-cache.jsonl").string());
}

hk::SeriesOptions make_options(const CommonFlags& f, hk::FileCache* cache) {
  hk::SeriesOptions o;
  o.e_max = f.emax;
  o.max_colength = f.max_colength;
  o.timeout_s = f.timeout;
  o.workers = f.workers;
  o.cache = cache;
  return o;
}

// Exit codes: 1 syntax error, 2 semantic/validation error, 3 resource cap,
// 4 verification failure.
int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const hk::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const hk::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const hk::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius-power colength series, limit multiplicities, "
               "F-signatures, and closed-form bounds over prime fields"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "colength series and limit multiplicity");
  std::string compute_input;
  compute->add_option("input", compute_input, "presentation file, or - for stdin")
      ->required();
  CommonFlags cf;
  add_common(compute, cf, true);

  // fsig
  auto* fsig = app.add_subcommand("fsig", "F-signature via splitting numbers");
  std::string fsig_input, sop, ref_id;
  fsig->add_option("input", fsig_input, "presentation file, or - for stdin")->required();
  fsig->add_option("--sop", sop, "parameter ideal, comma-separated (default: the ideal= list)");
  fsig->add_option("--ref", ref_id, "compare against a reference family (e.g. A1, E8)");
  CommonFlags ff;
  add_common(fsig, ff, false);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form lower bounds from (d, p, e, t)");
  unsigned b_d = 0;
  std::uint64_t b_p = 0;
  std::string b_e = "1";
  std::optional<unsigned> b_t;
  bool b_hyp = false, b_table = false;
  bounds->add_option("--d", b_d, "Krull dimension")->required();
  bounds->add_option("--p", b_p, "characteristic")->required();
  bounds->add_option("--e", b_e, "multiplicity (integer, fraction a/b, or decimal)")
      ->required();
  bounds->add_option("--t", b_t, "generator count of the maximal ideal");
  bounds->add_flag("--hypersurface", b_hyp, "enable hypersurface-only bounds");
  bounds->add_flag("--table", b_table, "human-readable table");

  // verify
  auto* verify = app.add_subcommand("verify", "run the fixture corpus");
  std::string v_dir, v_filter;
  double v_budget = 1200;
  verify->add_option("corpus", v_dir, "fixtures directory")->required();
  verify->add_option("--filter", v_filter, "run only fixtures whose name contains this");
  verify->add_option("--budget", v_budget, "total wall clock budget, seconds");

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed())
    return guarded([&] {
      auto cache = open_cache(cf.cache_dir);
      auto prob = hk::parse_problem(read_input(compute_input), hk::order_from_name(cf.order));
      auto res = hk::run_compute(prob, make_options(cf, cache.get()));
      if (cf.table)
        std::cout << hk::compute_report_table(res);
      else if (cf.csv)
        std::cout << hk::series_csv(res);
      else
        std::cout << hk::compute_report_json(res).dump(2) << "\n";
      return 0;
    });

  if (fsig->parsed())
    return guarded([&] {
      auto cache = open_cache(ff.cache_dir);
      auto prob = hk::parse_problem(read_input(fsig_input), hk::order_from_name(ff.order));
      if (!sop.empty()) {
        prob.ideal.generators = hk::parse_ideal_in(sop, prob.ring);
        for (const auto& f : prob.ideal.generators)
          if (!f.is_zero() && f.terms().back().mono.is_one())
            throw hk::ValidationError("parameter ideal generator '" +
                                      hk::poly_to_string(f, prob.ring.vars) +
                                      "' has a nonzero constant term");
      }
      std::optional<std::string> ref;
      if (!ref_id.empty()) ref = ref_id;
      auto res = hk::run_fsig(prob, make_options(ff, cache.get()), {}, ref);
      if (ff.table)
        std::cout << hk::fsig_report_table(res);
      else
        std::cout << hk::fsig_report_json(res).dump(2) << "\n";
      return 0;
    });

  if (bounds->parsed())
    return guarded([&] {
      double e_val = 0;
      std::optional<hk::Rat> e_exact;
      if (b_e.find('/') != std::string::npos) {
        auto r = hk::detail::rat_from_string(b_e);
        if (!r) throw hk::ValidationError("cannot parse multiplicity '" + b_e + "'");
        e_exact = *r;
        e_val = r->to_double();
      } else {
        try {
          std::size_t used = 0;
          e_val = std::stod(b_e, &used);
          if (used != b_e.size()) throw std::invalid_argument(b_e);
        } catch (...) {
          throw hk::ValidationError("cannot parse multiplicity '" + b_e + "'");
        }
        if (e_val == (double)(std::int64_t)e_val) e_exact = hk::Rat::of((std::int64_t)e_val);
      }
      if (b_d < 1) throw hk::ValidationError("dimension must be at least 1");
      if (!hk::is_prime(b_p)) throw hk::ValidationError("p must be prime");
      auto rows = hk::closed_form_bounds(b_d, b_p, e_val, e_exact, b_t, b_hyp);
      if (b_table) {
        for (const auto& b : rows) {
          std::printf("%-28s %12.6f", b.name.c_str(), b.value);
          if (b.exact) std::printf(" = %s", b.exact->str().c_str());
          if (!b.applicable) std::printf("  [n/a]");
          if (!b.note.empty()) std::printf("  -- %s", b.note.c_str());
          std::printf("\n");
        }
      } else {
        std::cout << hk::bounds_report_json(b_d, b_p, e_val, e_exact, b_t, b_hyp).dump(2)
                  << "\n";
      }
      return 0;
    });

  // verify
  return guarded([&] {
    auto res = hk::run_verify(v_dir, v_filter, v_budget);
    std::cout << hk::verify_summary(res);
    return res.all_pass ? 0 : 4;
  });
}
