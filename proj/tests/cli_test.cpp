// Integration test that drives the installed command-line binary the way a
// user would: subcommands, flags, output formats, exit codes, and the cache.
// argv: <hk-binary> <fixtures-dir> <scratch-dir>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string g_hk, g_fixtures, g_tmp;
int g_failures = 0;

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  fs::path outp = fs::path(g_tmp) / "stdout.txt";
  fs::path errp = fs::path(g_tmp) / "stderr.txt";
  std::string cmd = g_hk + " " + args + " > " + outp.string() + " 2> " +
                    errp.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(outp);
  r.err = slurp(errp);
  return r;
}

void expect(bool ok, const std::string& what, const RunResult* r = nullptr) {
  if (ok) {
    std::printf("ok    %s\n", what.c_str());
  } else {
    ++g_failures;
    std::printf("FAIL  %s\n", what.c_str());
    if (r) {
      std::printf("      status=%d\n      stdout: %.400s\n      stderr: %.400s\n",
                  r->status, r->out.c_str(), r->err.c_str());
    }
  }
  std::fflush(stdout);
}

std::string fixture(const std::string& name) {
  return (fs::path(g_fixtures) / (name + ".hk")).string();
}

std::string write_tmp(const std::string& name, const std::string& text) {
  fs::path p = fs::path(g_tmp) / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

json strip_timing(json j) {
  j.erase("timing");
  return j;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::fprintf(stderr, "usage: cli_test <hk-binary> <fixtures-dir> <tmp-dir>\n");
    return 2;
  }
  g_hk = argv[1];
  g_fixtures = argv[2];
  g_tmp = argv[3];
  fs::remove_all(g_tmp);
  fs::create_directories(g_tmp);

  { // --help works and exits cleanly
    RunResult r = run("--help");
    expect(r.status == 0 && r.out.find("compute") != std::string::npos,
           "--help lists subcommands", &r);
  }

  { // compute, JSON output, full report shape
    RunResult r = run("compute " + fixture("a1_p5") + " --json");
    expect(r.status == 0, "compute a1 exits 0", &r);
    json j = json::parse(r.out, nullptr, false);
    expect(!j.is_discarded(), "compute a1 emits valid JSON", &r);
    expect(j["dimension"] == 2, "dimension is 2", &r);
    expect(j["series"][0]["e"] == 1 && j["series"][0]["q"] == 5 &&
               j["series"][0]["colength"] == 37,
           "first series row is (1, 5, 37)", &r);
    expect(j["estimate"]["alpha_rational"] == "3/2",
           "limit recognized as 3/2", &r);
    expect(j["estimate"].contains("multiplicity"),
           "estimate block reports the ordinary multiplicity", &r);
    bool bounds_ok = j["bounds"].is_array() && !j["bounds"].empty();
    for (const auto& b : j["bounds"])
      if (b["applicable"] == true && b["satisfied"] != true) bounds_ok = false;
    expect(bounds_ok, "bounds array present and satisfied", &r);
    expect(j["provenance"].contains("engine"), "provenance names the engine",
           &r);
  }

  { // the same report as a table and as CSV
    RunResult t = run("compute " + fixture("a1_p5") + " --table");
    expect(t.status == 0 && t.out.find("3/2") != std::string::npos,
           "table output prints the recognized limit", &t);
    RunResult c = run("compute " + fixture("a1_p5") + " --csv");
    expect(c.status == 0 && c.out.rfind("e,q,colength", 0) == 0,
           "csv output starts with its header", &c);
    expect(c.out.find("1,5,37") != std::string::npos,
           "csv output carries the series rows", &c);
    RunResult both = run("compute " + fixture("a1_p5") + " --json --csv");
    expect(both.status != 0, "--json and --csv together are rejected", &both);
  }

  { // emax override is respected
    RunResult r = run("compute " + fixture("a1_p5") + " --emax 2 --json");
    json j = json::parse(r.out, nullptr, false);
    expect(!j.is_discarded() && j["series"].size() == 2,
           "--emax 2 yields exactly two samples", &r);
  }

  { // deterministic output modulo timing
    RunResult a = run("compute " + fixture("quadric_rank2_p7") + " --json");
    RunResult b = run("compute " + fixture("quadric_rank2_p7") + " --json");
    json ja = json::parse(a.out, nullptr, false);
    json jb = json::parse(b.out, nullptr, false);
    expect(!ja.is_discarded() && !jb.is_discarded() &&
               strip_timing(ja) == strip_timing(jb),
           "repeated runs agree byte-for-byte outside timing", &a);
  }

  { // fsig with an explicit parameter ideal and a reference id
    RunResult r = run("fsig " + fixture("a1_p5") +
                      " --sop \"x+y,z\" --ref A1 --json");
    expect(r.status == 0, "fsig exits 0", &r);
    json j = json::parse(r.out, nullptr, false);
    expect(!j.is_discarded() && j["series"][0]["splitting"] == 13,
           "first splitting number is 13", &r);
    expect(j["reference"]["matches"] == true, "reference A1 matches", &r);
  }

  { // fsig of a fixture whose ideal is already a parameter system
    RunResult r = run("fsig " + fixture("a1_fsig_p5") + " --json");
    json j = json::parse(r.out, nullptr, false);
    expect(r.status == 0 && !j.is_discarded(),
           "fsig accepts the fixture's own parameter ideal", &r);
  }

  { // bounds calculator without any series computation
    RunResult r = run("bounds --d 3 --p 5 --e 4 --t 4 --hypersurface");
    expect(r.status == 0, "bounds exits 0", &r);
    json j = json::parse(r.out, nullptr, false);
    bool found = false;
    if (!j.is_discarded())
      for (const auto& b : j["bounds"])
        if (b["name"] == "hanes" && b["exact"] == "8/3") found = true;
    expect(found, "bounds reports hanes = 8/3 exactly", &r);
    RunResult frac = run("bounds --d 2 --p 5 --e 3/2");
    json jf = json::parse(frac.out, nullptr, false);
    bool wy = false;
    if (frac.status == 0 && !jf.is_discarded())
      for (const auto& b : jf["bounds"])
        if (b["name"] == "watanabe-yoshida-dim2" && b["exact"] == "5/4")
          wy = true;
    expect(wy, "bounds accepts a rational multiplicity", &frac);
    RunResult bad = run("bounds --d 3 --p 6 --e 4");
    expect(bad.status == 2, "composite characteristic is a validation error",
           &bad);
  }

  { // verify over the committed corpus
    RunResult r = run("verify " + g_fixtures);
    expect(r.status == 0 && r.out.find("OK:") != std::string::npos,
           "verify passes the corpus", &r);
    RunResult f = run("verify " + g_fixtures + " --filter quadric");
    expect(f.status == 0 && f.out.find("quadric_rank2") != std::string::npos &&
               f.out.find("a1_p5") == std::string::npos,
           "verify --filter restricts the fixture set", &f);
  }

  { // exit codes: parse, validation, resource
    std::string badparse =
        write_tmp("badparse.hk", "p=5 vars=x; quotient=[]; ideal=[x];");
    RunResult r1 = run("compute " + badparse);
    expect(r1.status == 1 && r1.err.find("parse error") != std::string::npos,
           "syntax problems exit 1 with a parse error", &r1);

    std::string comp =
        write_tmp("composite.hk", "p=6; vars=x; quotient=[]; ideal=[x];");
    RunResult r2 = run("compute " + comp);
    expect(r2.status == 2 &&
               r2.err.find("validation error") != std::string::npos,
           "composite characteristic exits 2", &r2);

    std::string offorigin =
        write_tmp("offorigin.hk", "p=5; vars=x; quotient=[]; ideal=[x^2-x];");
    RunResult r3 = run("compute " + offorigin);
    expect(r3.status == 2 && r3.err.find("origin") != std::string::npos,
           "support off the origin exits 2", &r3);

    RunResult r4 = run("compute " + fixture("quartic4_p5") +
                       " --emax 4 --max-colength 100000");
    expect(r4.status == 3, "blown colength budget exits 3", &r4);

    RunResult r5 = run("compute " + write_tmp("missing.hk", "") + "-nope");
    expect(r5.status != 0, "missing input file fails", &r5);
  }

  { // cache: second run hits every sample
    std::string cachedir = (fs::path(g_tmp) / "cache").string();
    RunResult cold = run("compute " + fixture("e6_p7") + " --cache " +
                         cachedir + " --json");
    json jc = json::parse(cold.out, nullptr, false);
    expect(cold.status == 0 && !jc.is_discarded() &&
               jc["timing"]["cache_hits"] == 0,
           "cold cache run reports zero hits", &cold);
    RunResult warm = run("compute " + fixture("e6_p7") + " --cache " +
                         cachedir + " --json");
    json jw = json::parse(warm.out, nullptr, false);
    bool hits_ok = warm.status == 0 && !jw.is_discarded() &&
                   jw["timing"]["cache_hits"] == jw["series"].size();
    expect(hits_ok, "warm cache run hits every sample", &warm);
    expect(!jw.is_discarded() && !jc.is_discarded() &&
               jw["series"] == jc["series"],
           "cached series is identical", &warm);
  }

  { // unknown subcommand and unknown flag are reported by the parser
    RunResult r = run("frobenate");
    expect(r.status != 0, "unknown subcommand fails", &r);
    RunResult f = run("compute " + fixture("a1_p5") + " --frobulate");
    expect(f.status != 0, "unknown flag fails", &f);
  }

  if (g_failures == 0)
    std::printf("CLI: all checks passed\n");
  else
    std::printf("CLI: %d checks FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
