// Acceptance battery: one line per criterion, exit 0 only if all pass.
// Trial counts, tolerances, and time limits are pinned here; the underlying
// checks live in the suite implementations.

#include <cstdio>
#include <string>

#include "jmaj/suites.hpp"

namespace {

using namespace jm;

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %s  %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

Report run(const std::string& suite, int trials_per_algebra,
           std::vector<Algebra> algebras = {}) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials_per_algebra;
  cfg.seed = 0x41435450ULL;  // fixed acceptance seed
  if (!algebras.empty()) cfg.algebras = std::move(algebras);
  return run_suite(cfg);
}

std::string summary(const Report& r) {
  return "pass=" + std::to_string(r.pass) + " fail=" + std::to_string(r.fail) +
         " inconclusive=" + std::to_string(r.inconclusive) + " in " +
         std::to_string(r.runtime_ms) + " ms";
}

bool clean(const Report& r) { return r.fail == 0 && r.inconclusive == 0; }

}  // namespace

int main() {
  // AC1: algebra axioms, 200 trials per algebra, < 5 s.
  {
    const Report r = run("algebra-axioms", 200);
    report("AC1 algebra-axioms", clean(r) && r.runtime_ms < 5000, summary(r));
  }

  // AC2: Theorem 3 forward across all four correlation recipes,
  // 500 trials per algebra, < 10 s.
  {
    const Report r = run("thm3-correlation", 500);
    report("AC2 thm3-correlation", clean(r) && r.runtime_ms < 10000, summary(r));
  }

  // AC3: Theorem 4 and the P_a/L_{a^2} chain for k in {1,2,3} plus the
  // inverse-power reversal; 300 trials each, < 10 s.
  {
    const Report r4 = run("thm4-schur-powers", 75);  // 75 x 4 algebras = 300
    report("AC3a thm4-schur-powers", clean(r4) && r4.trials.size() == 300 &&
                                         r4.runtime_ms < 10000,
           summary(r4));
    const Report r12 = run("eq12-pa-la", 75);
    report("AC3b eq12-pa-la", clean(r12) && r12.trials.size() == 300 && r12.runtime_ms < 10000,
           summary(r12));
  }

  // AC4: corollary bounds and the determinant battery on x >= 0,
  // 300 trials each at relative tolerance 1e-7.
  {
    const Report r13 = run("eq13-corollary", 75);
    report("AC4a eq13-corollary", clean(r13) && r13.trials.size() == 300, summary(r13));
    const Report r14 = run("eq14-det", 75);
    report("AC4b eq14-det", clean(r14) && r14.trials.size() == 300, summary(r14));
    const Report ro = run("schur-hadamard-oppenheim", 75);
    report("AC4c schur-hadamard-oppenheim", clean(ro) && ro.trials.size() == 300, summary(ro));
    const Report rf = run("fischer-split", 75);
    report("AC4d fischer-split", clean(rf) && rf.trials.size() == 300, summary(rf));
  }

  // AC5: mean chains (Eqs. 5, 16-19) with the 32-node quadrature identity,
  // 200 trials per chain battery.
  {
    const Report rm = run("mean-chains", 50);  // every chain link checked per trial
    report("AC5a mean-chains", clean(rm) && rm.trials.size() == 200, summary(rm));
    const Report rs = run("spin-means", 100);
    report("AC5b spin-means", clean(rs) && rs.trials.size() == 200, summary(rs));
  }

  // AC6: HLP and Birkhoff round trips on 200 generated pairs (n <= 8).
  {
    const Report r = run("hlp-birkhoff", 100);  // 100 x 2 matrix algebras
    report("AC6 hlp-birkhoff", clean(r) && r.trials.size() == 200, summary(r));
  }

  // AC7: the Section-5 battery: Eq. 20 + norm consequence + Koranyi
  // derivative (300), EMI lower bound on 200 pairs across 3 path families,
  // commuting-case equality, delta_2 metric checks.
  {
    const Report r20 = run("eq20-emi-local", 75);
    report("AC7a eq20-emi-local", clean(r20) && r20.trials.size() == 300, summary(r20));
    const Report rg = run("eq21-22-emi-global", 50);
    report("AC7b eq21-22-emi-global", clean(rg) && rg.trials.size() == 200, summary(rg));
    const Report rd = run("delta2-metric", 50);
    report("AC7c delta2-metric", clean(rd) && rd.trials.size() == 200, summary(rd));
  }

  // AC8: substochastic forward (diag <= 1) on 300 trials and the converse
  // witness search (one diagonal entry at 1.1, witness within 1000 draws).
  {
    const Report r = run("weak-substochastic", 75);
    report("AC8 weak-substochastic", clean(r) && r.trials.size() == 300, summary(r));
  }

  // AC9: byte-identical reports for identical configs.
  {
    SuiteConfig cfg;
    cfg.suite = "thm3-correlation";
    cfg.trials = 25;
    cfg.seed = 20250810;
    const std::string a = run_suite(cfg).to_json(2);
    const std::string b = run_suite(cfg).to_json(2);
    report("AC9 determinism", a == b && !a.empty(),
           a == b ? "reports identical (" + std::to_string(a.size()) + " bytes)"
                  : "reports differ");
  }

  // AC10: the full battery at default sizes finishes under 120 s with no
  // failures.
  {
    long long total_ms = 0;
    int fail = 0, inconclusive = 0, pass = 0;
    for (const SuiteInfo& info : suite_catalog()) {
      SuiteConfig cfg;
      cfg.suite = info.name;
      const Report r = run_suite(cfg);
      total_ms += r.runtime_ms;
      pass += r.pass;
      fail += r.fail;
      inconclusive += r.inconclusive;
    }
    report("AC10 full-battery",
           fail == 0 && total_ms < 120000,
           "pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) +
               " inconclusive=" + std::to_string(inconclusive) + " in " +
               std::to_string(total_ms) + " ms");
  }

  if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
