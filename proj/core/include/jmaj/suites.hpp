#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jmaj/algebra.hpp"

namespace jm {

// Configuration of one verification run. Defaults (empty algebras,
// trials < 0) resolve to per-suite values; trials == 0 is rejected.
struct SuiteConfig {
  std::string suite;
  std::vector<Algebra> algebras;
  int trials = -1;
  uint64_t seed = 0x6a6d616aULL;  // overridable via JM_SEED in the CLI
  double tol = -1.0;              // majorization tolerance override
  bool include_runtime = false;   // measured wall time in the JSON report
};

struct CheckRecord {
  std::string name;
  bool ok = false;
  double margin = 0.0;  // distance to the failure boundary
};

struct TrialRecord {
  int index = 0;
  std::string algebra;
  uint64_t seed = 0;
  std::string digest;  // FNV-1a hash of the generated inputs
  std::string status;  // pass | fail | inconclusive
  std::vector<CheckRecord> checks;
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<TrialRecord> trials;
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  long long runtime_ms = 0;

  // Canonical serialization: identical configs yield identical bytes.
  // runtime_ms is reported as 0 unless config.include_runtime is set.
  std::string to_json(int indent = -1) const;
  std::string to_csv() const;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  int default_trials = 0;
};

const std::vector<SuiteInfo>& suite_catalog();
bool has_suite(const std::string& name);

// Default desk-scale algebra set (RealSym(4), ComplexHerm(3), Spin(5),
// RealSym(2)+Spin(3)).
std::vector<Algebra> default_algebras();

Report run_suite(const SuiteConfig& config);

}  // namespace jm
