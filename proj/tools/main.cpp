#include "parahoric/basechange.hpp"
#include "parahoric/cones.hpp"
#include "parahoric/cosets.hpp"
#include "parahoric/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace parahoric;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFalsified = 1, kUsage = 2;

struct Options {
  RunConfig cfg;
  std::string format = "text";
  std::string nu;
  bool timing = false;
};

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

json configJson(const RunConfig& c) {
  return json{{"type", c.type},          {"theta", c.theta},
              {"r", c.r},                {"J", c.J},
              {"P", c.P},                {"mu", c.mu},
              {"length_cutoff", c.lengthCutoff}, {"orbit_cutoff", c.orbitCutoff},
              {"samples", c.samples},    {"seed", c.seed}};
}

std::string configLine(const RunConfig& c) {
  std::ostringstream os;
  os << "type=" << c.type << " theta=" << c.theta << " r=" << c.r << " J=" << c.J << " P=" << c.P;
  if (!c.mu.empty()) os << " mu=" << c.mu;
  os << " length-cutoff=" << c.lengthCutoff << " orbit-cutoff=" << c.orbitCutoff << " samples=" << c.samples
     << " seed=" << c.seed;
  return os.str();
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

void printReport(const VerificationReport& rep, const Options& o) {
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : rep.checks) {
      json j{{"label", c.label}, {"status", c.pass ? "pass" : "fail"}, {"cases", c.cases}, {"statement", c.statement}};
      if (!c.note.empty()) j["note"] = c.note;
      if (!c.pass) j["counterexample"] = c.counterexample;
      checks.push_back(j);
    }
    json j{{"suite", rep.suite}, {"config", configJson(rep.config)}, {"checks", checks}, {"result", rep.ok() ? "pass" : "fail"}};
    if (o.timing) j["seconds"] = seconds(rep.seconds);
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "suite,label,status,cases,note,counterexample,statement,seed\n";
    for (const auto& c : rep.checks)
      std::cout << csvField(rep.suite) << "," << csvField(c.label) << "," << (c.pass ? "pass" : "fail") << "," << c.cases
                << "," << csvField(c.note) << "," << csvField(c.counterexample) << "," << csvField(c.statement) << ","
                << rep.config.seed << "\n";
  } else {
    std::cout << "suite: " << rep.suite << "\nconfig: " << configLine(rep.config) << "\n";
    int passed = 0;
    for (const auto& c : rep.checks) {
      passed += c.pass;
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.label << " [" << c.cases << " cases] " << c.statement;
      if (!c.note.empty()) std::cout << " (" << c.note << ")";
      std::cout << "\n";
      if (!c.pass) std::cout << "  counterexample: " << c.counterexample << "\n";
    }
    std::cout << "result: " << (rep.ok() ? "PASS" : "FAIL") << " (" << passed << "/" << rep.checks.size() << " checks)\n";
    if (o.timing) std::cout << "seconds: " << seconds(rep.seconds) << "\n";
  }
}

// Rows of (column -> value) printed in the requested format.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void printTables(const std::vector<Table>& tables, const RunConfig& cfg, const std::string& what, const Options& o) {
  if (o.format == "json") {
    json j{{"compute", what}, {"config", configJson(cfg)}};
    for (const auto& t : tables) {
      json rows = json::array();
      for (const auto& r : t.rows) {
        json row = json::object();
        for (size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = r[i];
        rows.push_back(row);
      }
      j[t.title] = rows;
    }
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    for (const auto& t : tables) {
      std::cout << "# " << t.title << " seed=" << cfg.seed << "\n";
      for (size_t i = 0; i < t.columns.size(); ++i) std::cout << (i ? "," : "") << t.columns[i];
      std::cout << "\n";
      for (const auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csvField(r[i]);
        std::cout << "\n";
      }
    }
  } else {
    std::cout << "compute: " << what << "\nconfig: " << configLine(cfg) << "\n";
    for (const auto& t : tables) {
      std::cout << "[" << t.title << "]\n";
      for (const auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) std::cout << (i ? "  " : "") << t.columns[i] << "=" << r[i];
        std::cout << "\n";
      }
    }
  }
}

IVec requireVec(const std::string& s, int rank, const char* flag) {
  if (s.empty()) throw std::invalid_argument(std::string(flag) + " is required");
  IVec v = parseVec(s);
  if (static_cast<int>(v.size()) != rank)
    throw std::invalid_argument(std::string(flag) + " must have " + std::to_string(rank) + " entries");
  return v;
}

Table orbitTable(const std::string& title, const CentralElement& z) {
  Table t{title, {"lambda", "coeff"}, {}};
  for (const auto& [l, c] : z.coeffs) t.rows.push_back({formatVec(l), c.serialize()});
  return t;
}

Table heckeTable(const std::string& title, const AffineWeyl& aw, const HeckeElement& h) {
  Table t{title, {"element", "word", "coeff"}, {}};
  for (const auto& [x, c] : h.terms()) t.rows.push_back({aw.key(x), aw.wordString(x), c.serialize()});
  return t;
}

int runCompute(const std::string& what, const Options& o, StructureCache* cache) {
  const RunConfig& cfg = o.cfg;
  AffineWeyl aw(RootDatum::build(cfg.type));
  const RootDatum& d = aw.datum();
  auto theta = DiagramAutomorphism::build(d, cfg.theta, cfg.r);
  Mask J = aw.parseParahoric(cfg.J);
  std::vector<Table> tables;
  if (what == "zmu") {
    IVec mu = d.dominantRep(requireVec(cfg.mu, d.rank(), "--mu"));
    HeckeAlgebra H(aw, {}, cache);
    auto z = CentralElement::orbitSum(d, mu);
    tables.push_back(orbitTable("orbit_sum", z));
    tables.push_back(heckeTable("t_basis", aw, H.toParahoric(z, J)));
  } else if (what == "bc") {
    IVec mu = d.dominantRep(requireVec(cfg.mu, d.rank(), "--mu"));
    BaseChangeContext ctx(d, theta);
    auto b = ctx.baseChange(CentralElement::orbitSum(d, mu));
    Table rel{"relative_orbit_sums", {"representative", "coeff"}, {}};
    if (auto coords = ctx.relativeOrbitCoordinates(b))
      for (const auto& [l, c] : *coords) rel.rows.push_back({formatVec(l), c.serialize()});
    tables.push_back(rel);
    tables.push_back(orbitTable("support", b));
    if (ctx.split()) {
      HeckeAlgebra H(aw, {}, cache);
      tables.push_back(heckeTable("t_basis", aw, H.toParahoric(b, J)));
    }
  } else if (what == "cosets") {
    ConeContext cc(d);
    Mask M = cc.parseParabolic(cfg.P);
    CosetTable table;
    std::set<size_t> failures;
    bool stable = isThetaStableMask(theta, M) && isThetaStableMask(theta, J);
    if (stable) {
      auto r = thetaFixedReps(aw, M, J, theta);
      table = r.table;
      failures.insert(r.failures.begin(), r.failures.end());
    } else {
      table = pgjRepresentatives(aw, M, J);
    }
    Table t{"representatives", {"element", "translation", "word", "theta_stable", "theta_fixed"}, {}};
    for (size_t i = 0; i < table.reps.size(); ++i) {
      const auto& x = table.reps[i];
      auto flag = [&](const std::vector<bool>& v) { return stable && i < v.size() ? (v[i] ? "yes" : "no") : "n/a"; };
      t.rows.push_back({aw.key(x), formatVec(aw.lambda(x)), d.weyl().wordString(x.w), flag(table.thetaStable), flag(table.thetaFixed)});
    }
    tables.push_back(t);
    if (!failures.empty()) {
      printTables(tables, cfg, what, o);
      std::cerr << "theta-stable double cosets without theta-fixed minimal representative: " << failures.size() << "\n";
      return kFalsified;
    }
  } else if (what == "fourier") {
    IVec mu = d.dominantRep(requireVec(cfg.mu, d.rank(), "--mu"));
    MPoly f = fourierTransform(aw, CentralElement::orbitSum(d, mu), J);
    Table t{"fourier", {"jfixed_dimension", "transform", "weyl_invariant"}, {}};
    t.rows.push_back({std::to_string(jfixedDimension(aw, J)), f.pretty(), isWeylInvariant(f, d) ? "yes" : "no"});
    tables.push_back(t);
  } else if (what == "atiyah-bott") {
    IVec nu = requireVec(o.nu.empty() ? cfg.mu : o.nu, d.rank(), "--nu");
    BaseChangeContext ctx(d, theta);
    AtiyahBottResult r;
    try {
      r = atiyahBott(ctx, nu);
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(e.what());
    }
    Table t{"atiyah_bott", {"value", "fixed_points", "relative_weyl", "unit_denominators"}, {}};
    t.rows.push_back({r.value.pretty(), std::to_string(r.fixedPoints.size()), std::to_string(ctx.relative().relativeWeyl.size()),
                      std::to_string(r.unitDenominators.size())});
    tables.push_back(t);
    Table fp{"fixed_points", {"w", "unit_denominator"}, {}};
    for (int w : r.fixedPoints) {
      bool unit = std::find(r.unitDenominators.begin(), r.unitDenominators.end(), w) != r.unitDenominators.end();
      fp.rows.push_back({d.weyl().wordString(w), unit ? "yes" : "no"});
    }
    tables.push_back(fp);
  } else {
    throw std::invalid_argument("unknown compute target: " + what);
  }
  if (cache) cache->flush();
  printTables(tables, cfg, what, o);
  return kPass;
}

int runCache(const std::string& action, const Options& o, StructureCache& cache) {
  if (!cache.persistent()) throw std::invalid_argument("cache commands need --cache-dir or PARAHORIC_CACHE_DIR");
  if (action == "stat") {
    auto s = cache.stat();
    std::cout << "entries: " << s.entries << "\nbytes: " << s.bytes << "\n";
    for (const auto& [type, n] : s.perType) std::cout << "type " << type << ": " << n << "\n";
  } else if (action == "clear") {
    cache.clear();
    std::cout << "cleared\n";
  } else if (action == "warm") {
    AffineWeyl aw(RootDatum::build(o.cfg.type));
    HeckeAlgebra H(aw, {}, &cache);
    const auto ball = aw.ball(o.cfg.lengthCutoff / 2);
    for (const auto& x : ball)
      for (const auto& y : ball) H.basisProduct(x, y);
    cache.flush();
    std::cout << "warmed " << o.cfg.type << ": " << cache.stat().entries << " entries\n";
  } else {
    throw std::invalid_argument("unknown cache action: " + action);
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parahoric Hecke algebras, base change and cone combinatorics"};
  app.require_subcommand(1);
  Options o;
  RunConfig& c = o.cfg;
  std::string cacheDir = StructureCache::defaultDirectory();
  auto addCommon = [&](CLI::App* sc) {
    sc->add_option("--type", c.type, "root datum type")->capture_default_str();
    sc->add_option("--theta", c.theta, "diagram automorphism: id, flip or a permutation of simple labels")->capture_default_str();
    sc->add_option("--r", c.r, "extension degree")->capture_default_str();
    sc->add_option("--J", c.J, "parahoric: iwahori, K, or generators like s0,s1")->capture_default_str();
    sc->add_option("--P", c.P, "standard parabolic: B, G or alpha1,alpha2")->capture_default_str();
    sc->add_option("--mu", c.mu, "lattice vector, comma separated");
    sc->add_option("--nu", o.nu, "lattice vector for atiyah-bott");
    sc->add_option("--length-cutoff", c.lengthCutoff, "length window for enumerations")->capture_default_str();
    sc->add_option("--orbit-cutoff", c.orbitCutoff, "orbit-norm bound for z_mu sweeps")->capture_default_str();
    sc->add_option("--samples", c.samples, "random samples for sampled checks")->capture_default_str();
    sc->add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();
    sc->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}))->capture_default_str();
    sc->add_option("--cache-dir", cacheDir, "structure-constant cache directory (env PARAHORIC_CACHE_DIR)");
    sc->add_flag("--timing", o.timing, "include wall-clock time in reports");
  };

  std::string suite, target, action;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suiteNames();
  suites.push_back("all");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  addCommon(verify);
  auto* compute = app.add_subcommand("compute", "compute and print an object");
  compute->add_option("what", target, "zmu, bc, cosets, fourier or atiyah-bott")
      ->required()
      ->check(CLI::IsMember({"zmu", "bc", "cosets", "fourier", "atiyah-bott"}));
  addCommon(compute);
  auto* cachecmd = app.add_subcommand("cache", "manage the structure-constant cache");
  cachecmd->add_option("action", action, "stat, clear or warm")->required()->check(CLI::IsMember({"stat", "clear", "warm"}));
  addCommon(cachecmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    c.cacheDir = cacheDir;
    c.validate();
    StructureCache cache(cacheDir);
    if (verify->parsed()) {
      auto rep = runSuite(suite, c, &cache);
      printReport(rep, o);
      return rep.ok() ? kPass : kFalsified;
    }
    if (compute->parsed()) return runCompute(target, o, &cache);
    return runCache(action, o, cache);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFalsified;
  }
}
