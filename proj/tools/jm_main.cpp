// jm: verification harness for Jordan-algebra majorization inequalities.
//
//   jm list                      suite catalog
//   jm check <suite> [options]   run one suite
//   jm all [options]             run the full battery
//   jm demo <name>               worked small examples
//
// Exit codes: 0 all pass, 1 any failure, 2 usage error, 3 only
// inconclusive results.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "jmaj/cone.hpp"
#include "jmaj/errors.hpp"
#include "jmaj/gen.hpp"
#include "jmaj/means.hpp"
#include "jmaj/serialize.hpp"
#include "jmaj/suites.hpp"

namespace {

using namespace jm;

Algebra parse_algebra_spec(const std::string& spec) {
  if (spec.rfind("sum[", 0) == 0 && spec.back() == ']') {
    std::vector<Algebra> parts;
    std::string inner = spec.substr(4, spec.size() - 5);
    size_t depth = 0, start = 0;
    for (size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
        parts.push_back(parse_algebra_spec(inner.substr(start, i - start)));
        start = i + 1;
      } else if (inner[i] == '[') {
        ++depth;
      } else if (inner[i] == ']') {
        --depth;
      }
    }
    return Algebra::direct_sum(std::move(parts));
  }
  const size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw usage_error("bad algebra spec '" + spec + "' (expected kind:n)");
  const std::string kind = spec.substr(0, colon);
  const int n = std::stoi(spec.substr(colon + 1));
  if (kind == "realsym") return Algebra::real_sym(n);
  if (kind == "complexherm") return Algebra::complex_herm(n);
  if (kind == "spin") return Algebra::spin(n);
  throw usage_error("bad algebra kind '" + kind + "' (realsym|complexherm|spin|sum[...])");
}

uint64_t default_seed() {
  if (const char* env = std::getenv("JM_SEED")) return std::strtoull(env, nullptr, 0);
  return SuiteConfig{}.seed;
}

void print_summary(const Report& r) {
  const char* tag = r.fail ? "[FAIL]" : (r.pass == 0 && r.inconclusive ? "[INCONCLUSIVE]" : "[PASS]");
  std::cout << tag << ' ' << r.suite << "  pass=" << r.pass << " fail=" << r.fail
            << " inconclusive=" << r.inconclusive << "  (" << r.runtime_ms << " ms)\n";
  int shown = 0;
  for (const TrialRecord& t : r.trials) {
    if (t.status != "fail" || shown >= 5) continue;
    std::cout << "  trial " << t.index << " (" << t.algebra << ", seed " << t.seed << "):";
    for (const CheckRecord& c : t.checks)
      if (!c.ok) std::cout << ' ' << c.name;
    std::cout << '\n';
    ++shown;
  }
}

int exit_code_for(int pass, int fail, int inconclusive) {
  if (fail > 0) return 1;
  if (pass == 0 && inconclusive > 0) return 3;
  return 0;
}

void write_output(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot open output file '" + path + "'");
  out << payload;
}

int run_check(const std::string& suite, const std::vector<std::string>& alg_specs, int trials,
              uint64_t seed, double tol, const std::string& out_path, const std::string& format,
              bool timing) {
  SuiteConfig cfg;
  cfg.suite = suite;
  for (const std::string& s : alg_specs) cfg.algebras.push_back(parse_algebra_spec(s));
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.tol = tol;
  cfg.include_runtime = timing;

  const Report report = run_suite(cfg);
  print_summary(report);
  if (!out_path.empty())
    write_output(out_path, format == "csv" ? report.to_csv() : report.to_json(2) + "\n");
  return exit_code_for(report.pass, report.fail, report.inconclusive);
}

int run_all(uint64_t seed, const std::string& out_path, bool timing) {
  int pass = 0, fail = 0, inconclusive = 0;
  std::string combined = "[\n";
  bool first = true;
  for (const SuiteInfo& info : suite_catalog()) {
    SuiteConfig cfg;
    cfg.suite = info.name;
    cfg.seed = seed;
    cfg.include_runtime = timing;
    const Report report = run_suite(cfg);
    print_summary(report);
    pass += report.pass;
    fail += report.fail;
    inconclusive += report.inconclusive;
    if (!out_path.empty()) {
      if (!first) combined += ",\n";
      combined += report.to_json(2);
      first = false;
    }
  }
  if (!out_path.empty()) write_output(out_path, combined + "\n]\n");
  std::cout << "total: pass=" << pass << " fail=" << fail << " inconclusive=" << inconclusive
            << '\n';
  return exit_code_for(pass, fail, inconclusive);
}

// ---------------------------------------------------------------------------
// Worked examples

void demo_schur() {
  const Algebra alg = Algebra::real_sym(2);
  const JordanFrame frame = JordanFrame::canonical(alg);
  Eigen::MatrixXd xm(2, 2);
  xm << 2, 1, 1, 2;
  const Element x = Element::from_sym(alg, xm);
  Eigen::MatrixXd am(2, 2);
  am << 1, 2, 2, 1;
  const CoeffMatrix a(am);

  std::cout << "x =\n" << xm << "\nA =\n" << am << "\n\n";
  const PeirceBlocks blocks = peirce_blocks(x, frame);
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j)
      std::cout << "x_" << i + 1 << j + 1 << " =\n" << blocks.block(i, j).sym() << "\n";
  const Element ax = schur_product(a, blocks);
  std::cout << "\nA.x =\n" << ax.sym() << "\n";
  std::cout << "Diag(x) =\n" << diag_part(x, frame).sym() << "\n";
  const MajorizationVerdict v = majorizes_elements(diag_part(x, frame), x);
  std::cout << "Diag(x) majorized by x: " << (v.holds ? "yes" : "no")
            << "  slacks = " << v.slacks.transpose() << "\n";
}

void demo_hlp() {
  Eigen::VectorXd p(2), q(2);
  p << 2, 2;
  q << 3, 1;
  std::cout << "p = " << p.transpose() << ", q = " << q.transpose() << "\n";
  const MajorizationVerdict v = majorizes(p, q);
  std::cout << "p majorized by q: " << (v.holds ? "yes" : "no")
            << "  slacks = " << v.slacks.transpose() << "\n\n";
  const TTransformChain chain = ds_transfer_matrix(p, q);
  std::cout << "T-transform count: " << chain.t_count << "\nD =\n" << chain.product << "\n";
  std::cout << "D q = " << (chain.product * q).transpose() << "\n\n";
  const BirkhoffDecomposition bd = birkhoff_decompose(chain.product);
  std::cout << "Birkhoff terms:\n";
  for (const BirkhoffTerm& t : bd.terms) {
    std::cout << "  weight " << t.weight << "  permutation (";
    for (size_t i = 0; i < t.permutation.size(); ++i)
      std::cout << t.permutation[i] << (i + 1 < t.permutation.size() ? " " : "");
    std::cout << ")\n";
  }
}

void demo_means() {
  const Algebra alg = Algebra::real_sym(2);
  Eigen::MatrixXd am(2, 2), xm(2, 2);
  am << 1, 0, 0, 3;
  xm << 0, 1, 1, 0;
  const Element a = Element::from_sym(alg, am);
  const Element x = Element::from_sym(alg, xm);
  std::cout << "a = diag(1,3), x = [[0,1],[1,0]]\n\n";
  for (MeanKind kind : {MeanKind::Harmonic, MeanKind::Geometric, MeanKind::Logarithmic,
                        MeanKind::Arithmetic}) {
    std::cout << mean_name(kind) << " m(1,3) = " << mean_value(kind, 1.0, 3.0)
              << ", transform(a,x) =\n" << mean_transform(kind, a, x).sym() << "\n";
  }
  std::cout << "(logarithmic off-diagonal coefficient = 2/ln 3 = " << 2.0 / std::log(3.0)
            << ")\n\nchain verdicts at t = 0.5:\n";
  for (const NamedVerdict& nv : check_mean_chain(a, x, 0.5))
    std::cout << "  " << nv.name << ": " << (nv.verdict.holds ? "holds" : "FAILS")
              << "  (worst slack " << nv.verdict.worst_slack() << ")\n";
}

void demo_emi() {
  const Algebra alg = Algebra::real_sym(2);
  Eigen::MatrixXd um(2, 2), vm(2, 2);
  um << 1, 0, 0, 1;
  vm << std::exp(2.0), 0, 0, 1;
  const Element u = Element::from_sym(alg, um);
  const Element v = Element::from_sym(alg, vm);
  std::cout << "u = I, v = diag(e^2, 1) (commuting pair)\n";
  std::cout << "delta_2(u,v) = " << delta2(u, v) << " (expected 2)\n";
  const ConePath geo = geodesic_path(u, v, 129);
  std::cout << "geodesic length (p=2) = " << path_length(geo, 2.0) << "\n\n";

  Eigen::MatrixXd wm(2, 2);
  wm << 2, 1, 1, 2;
  const Element w = Element::from_sym(alg, wm);
  std::cout << "non-commuting w = [[2,1],[1,2]]:\n";
  std::cout << "delta_2(u,w) = " << delta2(u, w)
            << ", ||log u - log w||_2 = " << p_norm(log_map(w), 2.0) << "\n";
  std::cout << "geodesic length (p=2) = " << path_length(geodesic_path(u, w, 129), 2.0) << "\n";
  std::cout << "operator_commute(u,w) = " << (operator_commute(u, w) ? "true" : "false") << "\n";
}

void demo_split() {
  const Algebra alg = Algebra::real_sym(2);
  Eigen::MatrixXd xm(2, 2), cm(2, 2);
  xm << 2, 1, 1, 2;
  cm << 1, 0, 0, 0;
  const Element x = Element::from_sym(alg, xm);
  const Element c = Element::from_sym(alg, cm);
  const IdempotentSplit s = idempotent_split(x, c);
  std::cout << "x =\n" << xm << "\nc = E_11\n\n";
  std::cout << "u =\n" << s.u.sym() << "\nv =\n" << s.v.sym() << "\nw =\n" << s.w.sym() << "\n";
  const MajorizationVerdict v = majorizes_elements(s.u + s.w, x);
  std::cout << "u + w majorized by x: " << (v.holds ? "yes" : "no")
            << "  slacks = " << v.slacks.transpose() << "\n";
  std::cout << "det(x) = " << determinant(x) << ", det(u)*det(w) within top-eigenvalue blocks = "
            << eigenvalues(s.u)(0) * eigenvalues(s.w)(0) << "\n";
}

int run_demo(const std::string& name) {
  if (name == "schur") {
    demo_schur();
  } else if (name == "hlp") {
    demo_hlp();
  } else if (name == "means") {
    demo_means();
  } else if (name == "emi") {
    demo_emi();
  } else if (name == "split") {
    demo_split();
  } else {
    std::cerr << "unknown demo '" << name << "'; available: schur hlp means emi split\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorization inequalities in Euclidean Jordan algebras"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "print the suite catalog");

  std::string suite;
  std::vector<std::string> alg_specs;
  int trials = -1;
  uint64_t seed = default_seed();
  double tol = -1.0;
  std::string out_path;
  std::string format = "json";
  bool timing = false;

  auto* check_cmd = app.add_subcommand("check", "run one verification suite");
  check_cmd->add_option("suite", suite, "suite name (see `jm list`)")->required();
  check_cmd->add_option("--alg", alg_specs,
                        "algebra spec kind:n (repeatable); e.g. realsym:4, spin:5, "
                        "sum[realsym:2,spin:3]");
  check_cmd->add_option("--trials", trials, "trials per algebra");
  check_cmd->add_option("--seed", seed, "64-bit suite seed (JM_SEED overrides the default)");
  check_cmd->add_option("--tol", tol, "majorization tolerance override");
  check_cmd->add_option("--out", out_path, "write the report to this path");
  check_cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  check_cmd->add_flag("--timing", timing, "include measured wall time in the JSON report");

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "print a worked small example");
  demo_cmd->add_option("name", demo_name, "schur | hlp | means | emi | split")->required();

  uint64_t all_seed = default_seed();
  std::string all_out;
  bool all_timing = false;
  auto* all_cmd = app.add_subcommand("all", "run the full battery with default sizes");
  all_cmd->add_option("--seed", all_seed, "64-bit battery seed");
  all_cmd->add_option("--out", all_out, "write all reports (JSON array) to this path");
  all_cmd->add_flag("--timing", all_timing, "include measured wall time in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list_cmd->parsed()) {
      for (const SuiteInfo& info : suite_catalog())
        std::cout << info.name << "  (default trials " << info.default_trials << ")\n    "
                  << info.summary << "\n";
      return 0;
    }
    if (check_cmd->parsed())
      return run_check(suite, alg_specs, trials, seed, tol, out_path, format, timing);
    if (demo_cmd->parsed()) return run_demo(demo_name);
    if (all_cmd->parsed()) return run_all(all_seed, all_out, all_timing);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
