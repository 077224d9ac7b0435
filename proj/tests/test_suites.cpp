#include <doctest.h>

#include "jmaj/errors.hpp"
#include "jmaj/gen.hpp"
#include "jmaj/suites.hpp"

using namespace jm;

TEST_CASE("the catalog lists every documented suite") {
  const auto& cat = suite_catalog();
  CHECK(cat.size() >= 14);
  for (const char* name :
       {"thm1-positivity", "thm3-correlation", "thm4-schur-powers", "eq12-pa-la",
        "eq13-corollary", "eq14-det", "schur-hadamard-oppenheim", "fischer-split", "mean-chains",
        "spin-means", "eq20-emi-local", "eq21-22-emi-global", "delta2-metric",
        "weak-substochastic"}) {
    CHECK_MESSAGE(has_suite(name), name);
  }
}

TEST_CASE("run_suite validates its config") {
  SuiteConfig cfg;
  cfg.suite = "nosuch";
  CHECK_THROWS_AS(run_suite(cfg), usage_error);
  try {
    run_suite(cfg);
  } catch (const usage_error& e) {
    // The error lists the available suite names.
    CHECK(std::string(e.what()).find("thm3-correlation") != std::string::npos);
  }

  cfg.suite = "thm3-correlation";
  cfg.trials = 0;
  CHECK_THROWS_AS(run_suite(cfg), usage_error);
}

TEST_CASE("a small theorem run passes and aggregates add up") {
  SuiteConfig cfg;
  cfg.suite = "thm3-correlation";
  cfg.algebras = {Algebra::real_sym(4)};
  cfg.trials = 25;
  cfg.seed = 42;
  const Report r = run_suite(cfg);
  CHECK(r.pass == 25);
  CHECK(r.fail == 0);
  CHECK(r.trials.size() == 25);
  CHECK(r.pass + r.fail + r.inconclusive == static_cast<int>(r.trials.size()));
  for (const TrialRecord& t : r.trials) {
    CHECK(t.status == "pass");
    CHECK(!t.digest.empty());
    CHECK(!t.checks.empty());
  }
}

TEST_CASE("reports are byte-identical across reruns") {
  SuiteConfig cfg;
  cfg.suite = "eq12-pa-la";
  cfg.algebras = {Algebra::real_sym(3), Algebra::spin(4)};
  cfg.trials = 10;
  cfg.seed = 777;
  const std::string a = run_suite(cfg).to_json(2);
  const std::string b = run_suite(cfg).to_json(2);
  CHECK(a == b);
  // Different seeds change the digests.
  cfg.seed = 778;
  CHECK(run_suite(cfg).to_json(2) != a);
}

TEST_CASE("csv output carries one row per check") {
  SuiteConfig cfg;
  cfg.suite = "hlp-birkhoff";
  cfg.algebras = {Algebra::real_sym(3)};
  cfg.trials = 4;
  const Report r = run_suite(cfg);
  const std::string csv = r.to_csv();
  size_t rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  size_t checks = 0;
  for (const TrialRecord& t : r.trials) checks += t.checks.size();
  CHECK(rows == checks + 1);  // header included
}

TEST_CASE("trial seeds derive from the suite seed and index") {
  SuiteConfig cfg;
  cfg.suite = "eq14-det";
  cfg.algebras = {Algebra::real_sym(3)};
  cfg.trials = 3;
  const Report r = run_suite(cfg);
  CHECK(r.trials[0].seed == SplitMix64::derive(cfg.seed, 0));
  CHECK(r.trials[1].seed == SplitMix64::derive(cfg.seed, 1));
  CHECK(r.trials[2].seed != r.trials[1].seed);
}

TEST_CASE("runtime is zeroed in canonical reports and kept with include_runtime") {
  SuiteConfig cfg;
  cfg.suite = "eq14-det";
  cfg.algebras = {Algebra::real_sym(3)};
  cfg.trials = 2;
  const Report r = run_suite(cfg);
  CHECK(r.to_json().find("\"runtime_ms\":0") != std::string::npos);
  SuiteConfig timed = cfg;
  timed.include_runtime = true;
  const Report rt = run_suite(timed);
  CHECK(rt.to_json().find("\"runtime_ms\":") != std::string::npos);
}

TEST_CASE("the default algebra set matches the documented sizes") {
  const auto algs = default_algebras();
  REQUIRE(algs.size() == 4);
  CHECK(algs[0] == Algebra::real_sym(4));
  CHECK(algs[1] == Algebra::complex_herm(3));
  CHECK(algs[2] == Algebra::spin(5));
  CHECK(algs[3] == Algebra::direct_sum({Algebra::real_sym(2), Algebra::spin(3)}));
}

TEST_CASE("generator outputs satisfy their invariants") {
  SplitMix64 rng(90);
  for (const Algebra& alg : default_algebras()) {
    for (int t = 0; t < 50; ++t) {
      CHECK(is_psd_element(gen_psd(alg, rng)));
      CHECK(is_positive(gen_positive(alg, rng)));
      const Element c = gen_idempotent(alg, rng);
      CHECK((jordan_product(c, c) - c).norm2() < 1e-8);
      (void)gen_frame(alg, rng);  // validated on construction
    }
  }
  for (int t = 0; t < 50; ++t) {
    CHECK(is_correlation(gen_correlation(4, rng)));
    CHECK(coeff_eigenvalues(gen_psd_matrix(4, rng)).minCoeff() >= -1e-10);
    const CoeffMatrix capped = gen_psd_diag_capped(4, rng);
    for (int i = 0; i < 4; ++i) CHECK(capped(i, i) <= 1.0 + 1e-12);
  }
}

TEST_CASE("gen_majorized_pair asserts its own contract") {
  SplitMix64 rng(91);
  for (const Algebra& alg : {Algebra::real_sym(5), Algebra::complex_herm(3)}) {
    for (int t = 0; t < 30; ++t) {
      const auto [x, y] = gen_majorized_pair(alg, rng);
      REQUIRE(majorizes_elements(x, y).holds);
    }
  }
  CHECK_THROWS_AS(gen_majorized_pair(Algebra::spin(4), rng), usage_error);
}
