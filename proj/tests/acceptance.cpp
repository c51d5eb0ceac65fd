// End-to-end acceptance run: one PASS/FAIL line per criterion.
#include "parahoric/cones.hpp"
#include "parahoric/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <unistd.h>

using namespace parahoric;
namespace fs = std::filesystem;

namespace {

struct Datum {
  std::string type;
  std::string theta;
  int r;
  std::string name() const { return type + (theta == "id" ? "" : "/" + theta) + " r=" + std::to_string(r); }
};

const std::vector<std::string> kSmall = {"A1", "A2", "C2", "G2"};

std::vector<Datum> allData() {
  std::vector<Datum> out;
  for (const auto& t : RootDatum::supportedTypes())
    if (t != "SL2") out.push_back({t, "id", 2});
  for (const char* t : {"A2", "A3", "GL2", "GL3"}) out.push_back({t, "flip", 2});
  return out;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 6) notes.push_back(why);
  }
};

// Runs a suite once per configuration and keeps the report.
class Runner {
 public:
  const VerificationReport& get(const std::string& suite, const Datum& d, const std::function<void(RunConfig&)>& tweak,
                                const std::string& variant) {
    std::string key = suite + "|" + d.name() + "|" + variant;
    auto it = reports_.find(key);
    if (it != reports_.end()) return it->second;
    RunConfig cfg;
    cfg.type = d.type;
    cfg.theta = d.theta;
    cfg.r = d.r;
    cfg.seed = 20240601;
    if (tweak) tweak(cfg);
    return reports_.emplace(key, runSuite(suite, cfg)).first->second;
  }

 private:
  std::map<std::string, VerificationReport> reports_;
};

// Requires every listed label to be present and passing.
void require(Outcome& o, const VerificationReport& rep, const Datum& d, const std::vector<std::string>& labels) {
  for (const auto& label : labels) {
    const CheckRecord* found = nullptr;
    for (const auto& c : rep.checks)
      if (c.label == label) found = &c;
    if (!found) {
      o.fail(d.name() + " " + label + " missing");
    } else if (!found->pass) {
      o.fail(d.name() + " " + label + ": " + found->counterexample);
    }
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int runCli(const std::string& args, const fs::path& out) {
  std::string cmd = std::string(PARAHORIC_CLI_PATH) + " " + args + " > \"" + out.string() + "\" 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  Runner run;
  auto smallCutoff = [](RunConfig& c) { c.orbitCutoff = 3; };
  int failures = 0;
  auto report = [&](int n, const std::string& what, const Outcome& o, double secs) {
    std::printf("criterion %d: %s  %s (%.1f s)\n", n, o.pass ? "PASS" : "FAIL", what.c_str(), secs);
    for (const auto& s : o.notes) std::printf("    %s\n", s.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  auto timed = [&](int n, const std::string& what, const std::function<void(Outcome&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(n, what, o, secs);
    return secs;
  };

  timed(1, "z_mu central and mu -> z_mu injective (A1, A2, C2, G2; orbit norm <= 3; under 5 min)", [&](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& t : kSmall) {
      Datum d{t, "id", 2};
      require(o, run.get("hecke", d, smallCutoff, "small"), d, {"bernstein-centrality", "bernstein-injectivity"});
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 300) o.fail("runtime " + std::to_string(secs) + " s exceeds 300 s");
  });

  timed(2, "z_mu * 1_J acts on chi^J by the closed-form scalar for every J", [&](Outcome& o) {
    for (const auto& t : kSmall) {
      Datum d{t, "id", 2};
      require(o, run.get("bernstein", d, smallCutoff, "small"), d,
              {"bernstein-scalar", "bernstein-scalar-routes", "jfixed-dimension"});
    }
  });

  timed(3, "change of parahoric along chains I <= J <= K", [&](Outcome& o) {
    for (const auto& t : kSmall) {
      Datum d{t, "id", 2};
      require(o, run.get("satake", d, smallCutoff, "small"), d,
              {"satake-change-parahoric", "satake-scalar", "change-parahoric-precondition"});
    }
  });

  timed(4, "base change: split r in {2,3}, unitary spectral identity, compatibility diagrams", [&](Outcome& o) {
    for (const auto& t : kSmall)
      for (int r : {2, 3}) {
        Datum d{t, "id", r};
        require(o, run.get("basechange", d, smallCutoff, "small"), d,
                {"bc-split", "bc-spectral", "bc-change-parahoric", "bc-constant-term", "bc-w-conjugation"});
      }
    Datum u{"A2", "flip", 2};
    require(o, run.get("basechange", u, smallCutoff, "small"), u,
            {"bc-spectral", "bc-change-parahoric", "bc-constant-term", "bc-w-conjugation", "bc-homomorphism"});
  });

  timed(5, "descent: coset bijections, theta-fixed representatives, cell labels at cutoff 6, Sp(4) facet",
        [&](Outcome& o) {
          auto cutoff6 = [](RunConfig& c) { c.lengthCutoff = 6; };
          for (const auto& d : allData()) {
            const auto& rep = run.get("descent-cosets", d, cutoff6, "L6");
            require(o, rep, d, {"coset-bijection-counts", "theta-fixed-reps", "cell-labels", "min-rep-positivity"});
            if (d.type == "C2") require(o, rep, d, {"sp4-facet"});
          }
        });

  timed(6, "alternating cone identity on 10^4 seeded points per type, rank-one closed form", [&](Outcome& o) {
    for (const auto& d : allData()) {
      if (d.theta != "id") continue;
      const auto& rep = run.get("cones", d, nullptr, "default");
      require(o, rep, d, {"arthur-identity"});
      if (RootDatum::build(d.type).semisimpleRank() == 1) require(o, rep, d, {"arthur-rank-one"});
      for (const auto& c : rep.checks)
        if (c.label == "arthur-identity" && c.cases < 10000) o.fail(d.name() + " only " + std::to_string(c.cases) + " points");
    }
  });

  timed(7, "chamber patterns constant at rank <= 2 (100 samples per chamber), W' well defined", [&](Outcome& o) {
    for (const auto& d : allData()) {
      RootDatum rd = RootDatum::build(d.type);
      if (rd.rank() > 2) continue;
      require(o, run.get("cones", d, nullptr, "default"), d, {"hales-chambers", "wprime-well-defined"});
    }
  });

  timed(8, "fixed points equal W^theta, class-function symmetry, rank-one hand formula", [&](Outcome& o) {
    for (const auto& d : allData()) {
      const auto& rep = run.get("atiyah-bott", d, nullptr, "default");
      require(o, rep, d, {"ab-fixed-points", "ab-class-function", "ab-character-symmetry", "ab-unit-denominator"});
      RootDatum rd = RootDatum::build(d.type);
      if (rd.semisimpleRank() == 1 && d.theta == "id") require(o, rep, d, {"ab-rank-one"});
      // independent count: Weyl matrices commuting with theta
      auto theta = DiagramAutomorphism::build(rd, d.theta, d.r);
      int fixed = 0;
      for (int w = 0; w < rd.weyl().size(); ++w)
        fixed += matMul(theta.matrix, rd.weyl().matrix(w)) == matMul(rd.weyl().matrix(w), theta.matrix);
      BaseChangeContext ctx(rd, theta);
      IVec nu;
      for (int a = 1; nu.empty(); ++a) {
        IVec cand(rd.rank());
        for (int i = 0; i < rd.rank(); ++i) cand[i] = 2 * a + i * (a + 1);
        if (isThetaRegular(ctx, cand)) nu = cand;
      }
      if (static_cast<int>(atiyahBott(ctx, nu).fixedPoints.size()) != fixed)
        o.fail(d.name() + " fixed points differ from the commuting count " + std::to_string(fixed));
    }
  });

  timed(9, "unitary part: |xi(nu)| = 1 over 10^3 seeded trials per datum", [&](Outcome& o) {
    for (const auto& d : allData()) {
      const auto& rep = run.get("cones", d, nullptr, "default");
      require(o, rep, d, {"unitary-part"});
      for (const auto& c : rep.checks)
        if (c.label == "unitary-part" && c.note.find("trials=1000") == std::string::npos)
          o.fail(d.name() + " unitary trials: " + c.note);
    }
  });

  timed(10, "CLI output byte-identical with a cold and a warm cache", [&](Outcome& o) {
    fs::path dir = fs::temp_directory_path() / ("parahoric_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir / "cache");
    std::string common = "verify all --type A2 --theta flip --r 2 --seed 7 --format json --cache-dir \"" +
                         (dir / "cache").string() + "\"";
    int cold = runCli(common, dir / "cold.json");
    int stat = runCli("cache stat --cache-dir \"" + (dir / "cache").string() + "\"", dir / "stat.txt");
    int warm = runCli(common, dir / "warm.json");
    std::string a = slurp(dir / "cold.json"), b = slurp(dir / "warm.json");
    if (cold != 0 || warm != 0 || stat != 0)
      o.fail("exit codes cold=" + std::to_string(cold) + " warm=" + std::to_string(warm) + " stat=" + std::to_string(stat));
    if (a.empty()) o.fail("empty output");
    if (a != b) o.fail("cold and warm outputs differ");
    if (slurp(dir / "stat.txt").find("entries: 0") != std::string::npos) o.fail("cold run left the cache empty");
    fs::remove_all(dir);
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
