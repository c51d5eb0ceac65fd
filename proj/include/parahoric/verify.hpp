#pragma once

#include "parahoric/cache.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace parahoric {

struct RunConfig {
  std::string type = "A1";
  std::string theta = "id";
  int r = 2;
  std::string J = "iwahori";
  std::string P = "B";
  std::string mu;
  int lengthCutoff = 8;
  int orbitCutoff = 3;
  int samples = 10000;
  std::uint64_t seed = 1;
  std::string cacheDir;

  // Throws std::invalid_argument on non-positive cutoffs or counts.
  void validate() const;
};

struct CheckRecord {
  std::string label;      // stable machine label, e.g. "bernstein-centrality"
  std::string statement;  // what was checked
  bool pass = true;
  long long cases = 0;
  std::string note;            // tallies and parameters worth echoing
  std::string counterexample;  // serialized inputs of the first failure
};

struct VerificationReport {
  std::string suite;
  RunConfig config;
  std::vector<CheckRecord> checks;
  double seconds = 0;
  bool ok() const;
};

const std::vector<std::string>& suiteNames();  // without "all"
// Runs one suite, or every suite for "all". Throws std::invalid_argument for
// unknown suites and invalid configurations.
VerificationReport runSuite(const std::string& suite, const RunConfig& cfg, StructureCache* cache = nullptr);

}  // namespace parahoric
