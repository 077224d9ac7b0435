#include "jmaj/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "jmaj/cone.hpp"
#include "jmaj/errors.hpp"
#include "jmaj/gen.hpp"
#include "jmaj/means.hpp"
#include "jmaj/serialize.hpp"
#include "json_detail.hpp"

namespace jm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Trial plumbing

class Digest {
 public:
  void feed(double v) {
    uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    for (int b = 0; b < 8; ++b) {
      h_ ^= (bits >> (8 * b)) & 0xffULL;
      h_ *= 0x100000001b3ULL;
    }
  }
  void feed(const Element& x) {
    for (double v : x.flat()) feed(v);
  }
  void feed(const CoeffMatrix& m) {
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) feed(m(i, j));
  }
  void feed(const Eigen::VectorXd& v) {
    for (int i = 0; i < v.size(); ++i) feed(v(i));
  }
  void feed(const Eigen::MatrixXd& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) feed(m(i, j));
  }

  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  uint64_t h_ = 0xcbf29ce484222325ULL;
};

struct TrialContext {
  const Algebra& alg;
  SplitMix64& rng;
  double tol;  // majorization tolerance override; < 0 = per-op default

  Digest digest;
  std::vector<CheckRecord> checks;
  bool any_fail = false;
  bool any_inconclusive = false;

  void record(const std::string& name, bool ok, double margin) {
    checks.push_back({name, ok, margin});
    if (!ok) any_fail = true;
  }
  void verdict(const std::string& name, const MajorizationVerdict& v) {
    record(name, v.holds, v.worst_slack());
  }
  // lhs <= rhs + slack_tol
  void require_le(const std::string& name, double lhs, double rhs, double slack_tol) {
    record(name, lhs <= rhs + slack_tol, rhs + slack_tol - lhs);
  }
  void require_near(const std::string& name, double err, double near_tol) {
    record(name, err <= near_tol, near_tol - err);
  }
  void require(const std::string& name, bool ok) { record(name, ok, ok ? 1.0 : -1.0); }
  void inconclusive(const std::string& name) {
    checks.push_back({name, true, 0.0});
    any_inconclusive = true;
  }
};

using TrialFn = std::function<void(TrialContext&)>;

struct SuiteDef {
  std::string name;
  std::string summary;
  std::vector<Algebra> algebras;
  int trials = 0;
  TrialFn trial;
};

std::vector<Algebra> simple_algebras() {
  return {Algebra::real_sym(4), Algebra::complex_herm(3), Algebra::spin(5)};
}

std::vector<Algebra> matrix_algebras() {
  return {Algebra::real_sym(4), Algebra::complex_herm(3)};
}

double rel_scale(double base, const Element& x) { return base * std::max(1.0, x.norm2()); }

// ---------------------------------------------------------------------------
// Suite bodies

void trial_algebra_axioms(TrialContext& ctx) {
  const Element x = gen_any(ctx.alg, ctx.rng);
  const Element y = gen_any(ctx.alg, ctx.rng);
  const Element z = gen_any(ctx.alg, ctx.rng);
  ctx.digest.feed(x);
  ctx.digest.feed(y);
  ctx.digest.feed(z);

  const Element x2 = jordan_product(x, x);
  const Element lhs = jordan_product(x, jordan_product(x2, y));
  const Element rhs = jordan_product(x2, jordan_product(x, y));
  const double scale3 = std::max(1.0, x.norm2() * x.norm2() * y.norm2());
  ctx.require_near("jordan_identity", (lhs - rhs).norm2(), 1e-9 * scale3);

  const double assoc = std::abs(inner(jordan_product(x, y), z) - inner(x, jordan_product(y, z)));
  ctx.require_near("trace_form_assoc", assoc,
                   1e-9 * std::max(1.0, x.norm2() * y.norm2() * z.norm2()));

  const SpectralDecomposition d = spectral_decomposition(x);
  ctx.require_near("spectral_reconstruction", (d.synthesize() - x).norm2(),
                   rel_scale(1e-10, x));
  bool sorted = true;
  for (int i = 1; i < d.eigenvalues.size(); ++i)
    if (d.eigenvalues(i) > d.eigenvalues(i - 1)) sorted = false;
  ctx.require("eigenvalues_sorted", sorted);

  // Eigenvalue multiset of a spectral map.
  const Element ex = exp_map(x);
  Eigen::VectorXd mapped = eigenvalues(ex);
  Eigen::VectorXd expected(d.eigenvalues.size());
  for (int i = 0; i < expected.size(); ++i) expected(i) = std::exp(d.eigenvalues(i));
  std::sort(expected.data(), expected.data() + expected.size(), std::greater<double>());
  ctx.require_near("spectral_map_eigenvalues", (mapped - expected).cwiseAbs().maxCoeff(), 1e-8);

  if (ctx.alg.kind() == AlgebraKind::DirectSum) {
    Eigen::VectorXd merged(ctx.alg.rank());
    int at = 0;
    for (const Element& p : x.parts()) {
      Eigen::VectorXd sub = eigenvalues(p);
      merged.segment(at, sub.size()) = sub;
      at += static_cast<int>(sub.size());
    }
    std::sort(merged.data(), merged.data() + merged.size(), std::greater<double>());
    ctx.require_near("directsum_eigen_merge", (merged - eigenvalues(x)).cwiseAbs().maxCoeff(),
                     1e-12 * std::max(1.0, x.norm2()));
  }
}

void trial_thm1_positivity(TrialContext& ctx) {
  const int n = ctx.alg.rank();
  const CoeffMatrix a = gen_psd_matrix(n, ctx.rng);
  const Element x = gen_psd(ctx.alg, ctx.rng);
  const JordanFrame frame = gen_frame(ctx.alg, ctx.rng);
  ctx.digest.feed(a);
  ctx.digest.feed(x);

  ctx.require_le("gen:coeff_psd", 0.0, coeff_eigenvalues(a).minCoeff(), 1e-10);
  ctx.require_le("gen:x_psd", 0.0, lambda_min(x), rel_scale(1e-10, x));

  const Element ax = schur_product(a, x, frame);
  ctx.require_le("psd_preserved", -lambda_min(ax), rel_scale(1e-8, ax), 0.0);

  // Strict version: positive diagonal and x > 0.
  const CoeffMatrix b = gen_psd_diag_capped(n, ctx.rng);
  const Element xp = gen_positive(ctx.alg, ctx.rng);
  ctx.digest.feed(b);
  ctx.digest.feed(xp);
  const Element bx = schur_product(b, xp, frame);
  ctx.require("strict_positive", lambda_min(bx) > 0.0);
}

void trial_thm3_correlation(TrialContext& ctx) {
  const int n = ctx.alg.rank();
  const Element x = gen_any(ctx.alg, ctx.rng);
  const JordanFrame frame = gen_frame(ctx.alg, ctx.rng);
  ctx.digest.feed(x);

  std::vector<std::pair<std::string, CoeffMatrix>> recipes;
  recipes.emplace_back("normalize", gen_correlation(n, ctx.rng));

  Eigen::VectorXd inc(n);
  double acc = ctx.rng.uniform(0.2, 1.0);
  for (int i = 0; i < n; ++i) {
    inc(i) = acc;
    acc += ctx.rng.uniform(0.0, 2.0);
  }
  recipes.emplace_back("ratio", corr_ratio(inc));

  Eigen::VectorXd pts(n);
  for (int i = 0; i < n; ++i) pts(i) = ctx.rng.uniform(-2.0, 2.0);
  recipes.emplace_back("abs_diff", corr_abs_diff(pts));

  const PosDefFn fns[] = {PosDefFn::Cos, PosDefFn::Sinc, PosDefFn::TOverSinh, PosDefFn::ExpAbs};
  const PosDefFn fn = fns[ctx.rng.uniform_int(0, 3)];
  Eigen::VectorXd args(n);
  // cos/sinc need |a_i - a_j| small enough to stay PSD-safe scale; any reals work.
  for (int i = 0; i < n; ++i) args(i) = ctx.rng.uniform(-1.5, 1.5);
  recipes.emplace_back("posdef_fn", corr_posdef_fn(fn, args));

  const Element e = unit(ctx.alg);
  const PeirceBlocks blocks = peirce_blocks(x, frame);
  for (const auto& [name, c] : recipes) {
    ctx.digest.feed(c);
    ctx.require("gen:is_correlation:" + name, is_correlation(c));
    const Element cx = schur_product(c, blocks);
    ctx.verdict("majorized:" + name, majorizes_elements(cx, x, ctx.tol));
    ctx.require_near("unital:" + name, (schur_product(c, e, frame) - e).norm2(),
                     rel_scale(1e-10, e));
    ctx.require_near("trace_preserving:" + name, std::abs(trace(cx) - trace(x)),
                     rel_scale(1e-10, x));
  }
}

CoeffMatrix shrunk_correlation(int n, SplitMix64& rng) {
  // 0.7 * ones + 0.3 * C keeps every entry in [0.4, 1]: safe for Schur
  // inverses.
  const CoeffMatrix c = gen_correlation(n, rng);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = 0.7 + 0.3 * c(i, j);
  return CoeffMatrix(m);
}

void trial_thm4_schur_powers(TrialContext& ctx) {
  const int n = ctx.alg.rank();
  const CoeffMatrix c = shrunk_correlation(n, ctx.rng);
  Eigen::MatrixXd bm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double mag = 0.3 + std::abs(ctx.rng.normal());
      bm(i, j) = bm(j, i) = (ctx.rng.u01() < 0.5 ? -mag : mag);
    }
  const CoeffMatrix b(bm);
  Eigen::MatrixXd am(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) am(i, j) = c(i, j) * b(i, j);
  const CoeffMatrix a(am);

  const Element x = gen_any(ctx.alg, ctx.rng);
  const JordanFrame frame = gen_frame(ctx.alg, ctx.rng);
  ctx.digest.feed(a);
  ctx.digest.feed(b);
  ctx.digest.feed(x);

  ctx.require("gen:ratio_correlation", is_correlation(c));
  for (int k = 1; k <= 3; ++k) {
    const SchurMajorizationCheck fwd = check_schur_majorization(a, b, x, frame, k);
    ctx.verdict("forward_k" + std::to_string(k), fwd.verdict);
    for (const ConsequenceCheck& q : fwd.consequences)
      ctx.require("fwd_k" + std::to_string(k) + ":" + q.name, q.ok);

    const SchurMajorizationCheck rev =
        check_schur_majorization(schur_power(b, -1), schur_power(a, -1), x, frame, k);
    ctx.verdict("reverse_k" + std::to_string(k), rev.verdict);
  }
}

void trial_eq12_pa_la(TrialContext& ctx) {
  // Invertible a: |lambda| in [0.1, 3].
  const JordanFrame aframe = gen_frame(ctx.alg, ctx.rng);
  Element a = Element::zero(ctx.alg);
  for (int i = 0; i < aframe.size(); ++i) {
    const double mag = ctx.rng.uniform(0.1, 3.0);
    a += aframe[i] * (ctx.rng.u01() < 0.5 ? -mag : mag);
  }
  const Element x = gen_any(ctx.alg, ctx.rng);
  ctx.digest.feed(a);
  ctx.digest.feed(x);

  const SpectralDecomposition d = spectral_decomposition(a);
  const CoeffMatrix pa_kernel = product_kernel(d.eigenvalues);
  const CoeffMatrix la2_kernel = arithmetic_kernel(d.eigenvalues.cwiseProduct(d.eigenvalues));
  const Element a2 = jordan_product(a, a);

  Element pax = x, la2x = x;
  const PeirceBlocks blocks = peirce_blocks(x, d.frame);
  for (int k = 1; k <= 3; ++k) {
    pax = quad_rep(a, pax);
    la2x = lyapunov(a2, la2x);

    // Kernel route must agree with the iterated transformations.
    const Element pax_kernel = schur_product(schur_power(pa_kernel, k), blocks);
    const Element la2x_kernel = schur_product(schur_power(la2_kernel, k), blocks);
    ctx.require_near("kernel_route_pa_k" + std::to_string(k), (pax - pax_kernel).norm2(),
                     rel_scale(1e-9, pax_kernel));
    ctx.require_near("kernel_route_la_k" + std::to_string(k), (la2x - la2x_kernel).norm2(),
                     rel_scale(1e-9, la2x_kernel));
    ctx.verdict("pa_majorized_k" + std::to_string(k), majorizes_elements(pax, la2x, ctx.tol));
  }

  const SchurMajorizationCheck chk = check_schur_majorization(pa_kernel, la2_kernel, x, d.frame, 1);
  ctx.require("ratio_correlation", chk.ratio_is_correlation);
}

void trial_eq13_corollary(TrialContext& ctx) {
  const int n = ctx.alg.rank();
  const CoeffMatrix a = gen_psd_matrix(n, ctx.rng);
  const Element x = gen_any(ctx.alg, ctx.rng);
  const JordanFrame frame = gen_frame(ctx.alg, ctx.rng);
  ctx.digest.feed(a);
  ctx.digest.feed(x);

  Element adiag = Element::zero(ctx.alg);
  Eigen::MatrixXd bm(n, n);
  for (int i = 0; i < n; ++i) {
    adiag += frame[i] * a(i, i);
    for (int j = 0; j < n; ++j) bm(i, j) = std::sqrt(a(i, i)) * std::sqrt(a(j, j));
  }
  const CoeffMatrix b(bm);

  const PeirceBlocks blocks = peirce_blocks(x, frame);
  const Element ax = schur_product(a, blocks);
  const Element bx = schur_product(b, blocks);
  ctx.verdict("eq13_majorized", majorizes_elements(ax, bx, ctx.tol));

  const Element psa = quad_rep(sqrt_map(adiag), x);
  ctx.require_near("bx_is_p_sqrt_a", (bx - psa).norm2(), rel_scale(1e-9, bx));

  // det(P_sqrt(a)(x)) = det(a) det(x).
  const double lhs = determinant(psa);
  const double rhs = determinant(adiag) * determinant(x);
  ctx.require_near("det_quad_rep_identity", std::abs(lhs - rhs),
                   1e-7 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));

  // P_a(x) majorized by P_|a|(x).
  const Element asym = gen_any(ctx.alg, ctx.rng);
  ctx.digest.feed(asym);
  ctx.verdict("pa_majorized_pabs",
              majorizes_elements(quad_rep(asym, x), quad_rep(abs_map(asym), x), ctx.tol));

  // Norm bound with the largest diagonal entry.
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i));
  for (double p : {1.0, 2.0, kInf}) {
    const std::string label = std::isinf(p) ? "inf" : std::to_string(static_cast<int>(p));
    ctx.require_le("norm_bound_p" + label, p_norm(ax, p), max_diag * p_norm(x, p),
                   1e-8 * std::max(1.0, max_diag * p_norm(x, p)));
  }
}

void trial_eq14_det(TrialContext& ctx) {
  const int n = ctx.alg.rank();
  const CoeffMatrix a = gen_psd_matrix(n, ctx.rng);
  const Element x = gen_psd(ctx.alg, ctx.rng);
  const JordanFrame frame = gen_frame(ctx.alg, ctx.rng);
  ctx.digest.feed(a);
  ctx.digest.feed(x);

  double diag_prod = 1.0;
  for (int i = 0; i < n; ++i) diag_prod *= a(i, i);
  const double lhs = diag_prod * determinant(x);
  const double rhs = determinant(schur_product(a, x, frame));
  ctx.require_le("eq14_lower_bound", lhs, rhs, 1e-7 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
}

void trial_schur_hadamard_oppenheim(TrialContext& ctx) {
  const int n = ctx.alg.rank();
  const Element x = gen_psd(ctx.alg, ctx.rng);
  const JordanFrame frame = gen_frame(ctx.alg, ctx.rng);
  const CoeffMatrix a = gen_psd_matrix(n, ctx.rng);
  ctx.digest.feed(x);
  ctx.digest.feed(a);

  const Element dx = diag_part(x, frame);
  ctx.verdict("schur_inequality", majorizes_elements(dx, x, ctx.tol));
  ctx.require_near("diag_idempotent", (diag_part(dx, frame) - dx).norm2(), rel_scale(1e-10, dx));
  ctx.require_near("diag_trace_preserving", std::abs(trace(dx) - trace(x)), rel_scale(1e-10, x));

  const double det_x = determinant(x);
  const double det_diag = determinant(dx);
  const double dtol = 1e-7 * std::max({1.0, std::abs(det_x), std::abs(det_diag)});
  ctx.require_le("hadamard", det_x, det_diag, dtol);

  double diag_prod = 1.0;
  for (int i = 0; i < n; ++i) diag_prod *= a(i, i);
  const double det_ax = determinant(schur_product(a, x, frame));
  const double otol =
      1e-7 * std::max({1.0, std::abs(det_ax), std::abs(diag_prod * det_diag)});
  ctx.require_le("oppenheim_lower", diag_prod * det_x, det_ax, otol);
  ctx.require_le("oppenheim_upper", det_ax, diag_prod * det_diag, otol);
}

double det_top_k(const Element& u, int k) {
  const Eigen::VectorXd ev = eigenvalues(u);
  double d = 1.0;
  for (int i = 0; i < k; ++i) d *= ev(i);
  return d;
}

void trial_fischer_split(TrialContext& ctx) {
  if (ctx.alg.rank() < 2) return;
  const Element x = gen_psd(ctx.alg, ctx.rng);
  const Element c = gen_idempotent(ctx.alg, ctx.rng);
  ctx.digest.feed(x);
  ctx.digest.feed(c);

  const int k = static_cast<int>(std::lround(trace(c)));
  ctx.require("gen:proper_idempotent", k >= 1 && k <= ctx.alg.rank());

  const IdempotentSplit split = idempotent_split(x, c);
  ctx.require_near("split_reconstruction",
                   (split.u + split.v + split.w - x).norm2(), rel_scale(1e-10, x));
  ctx.require_near("eigen_eq_u", (jordan_product(split.u, c) - split.u).norm2(),
                   rel_scale(1e-8, x));
  ctx.require_near("eigen_eq_w", jordan_product(split.w, c).norm2(), rel_scale(1e-8, x));
  ctx.require_near("eigen_eq_v", (jordan_product(split.v, c) - split.v * 0.5).norm2(),
                   rel_scale(1e-8, x));

  ctx.verdict("u_plus_w_majorized", majorizes_elements(split.u + split.w, x, ctx.tol));

  if (k < ctx.alg.rank()) {
    const double det_x = determinant(x);
    const double rhs = det_top_k(split.u, k) * det_top_k(split.w, ctx.alg.rank() - k);
    ctx.require_le("fischer", det_x, rhs, 1e-7 * std::max({1.0, std::abs(det_x), std::abs(rhs)}));
  }
}

void trial_mean_chains(TrialContext& ctx) {
  const Element a = gen_positive(ctx.alg, ctx.rng);
  const Element x = gen_any(ctx.alg, ctx.rng);
  const double t = ctx.rng.u01();
  ctx.digest.feed(a);
  ctx.digest.feed(x);
  ctx.digest.feed(t);

  for (const NamedVerdict& nv : check_mean_chain(a, x, t)) ctx.verdict(nv.name, nv.verdict);

  // Quadrature route equals the closed-form logarithmic kernel.
  const Element quad = log_mean_integral(a, x, 32);
  const Element closed = mean_transform(MeanKind::Logarithmic, a, x);
  ctx.require_near("log_mean_quadrature", (quad - closed).norm2(), rel_scale(1e-9, closed));

  // Named cross-checks of the mean transforms.
  ctx.require_near("arith_is_lyapunov",
                   (mean_transform(MeanKind::Arithmetic, a, x) - lyapunov(a, x)).norm2(),
                   rel_scale(1e-9, x));
  ctx.require_near("geom_is_quad_rep",
                   (mean_transform(MeanKind::Geometric, a, x) - quad_rep(sqrt_map(a), x)).norm2(),
                   rel_scale(1e-9, x));
  const Element h = mean_transform(MeanKind::Harmonic, a, x);
  ctx.require_near("harmonic_round_trip", (lyapunov(inverse_map(a), h) - x).norm2(),
                   rel_scale(1e-8, x));
}

void trial_spin_means(TrialContext& ctx) {
  const Element a = gen_positive(ctx.alg, ctx.rng);
  const Element x = gen_any(ctx.alg, ctx.rng);
  ctx.digest.feed(a);
  ctx.digest.feed(x);

  const MeanKind order[] = {MeanKind::Harmonic, MeanKind::Geometric, MeanKind::Logarithmic,
                            MeanKind::Arithmetic};
  Element transformed[4] = {mean_transform(order[0], a, x), mean_transform(order[1], a, x),
                            mean_transform(order[2], a, x), mean_transform(order[3], a, x)};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      ctx.verdict(std::string(mean_name(order[i])) + "<" + mean_name(order[j]),
                  majorizes_elements(transformed[i], transformed[j], ctx.tol));
}

void trial_eq20_emi_local(TrialContext& ctx) {
  const Element a = gen_any(ctx.alg, ctx.rng);
  const Element x = gen_any(ctx.alg, ctx.rng);
  ctx.digest.feed(a);
  ctx.digest.feed(x);

  for (double p : {1.0, 2.0, kInf}) {
    const EmiLocalCheck chk = emi_local_check(a, x, p);
    const std::string label = std::isinf(p) ? "inf" : std::to_string(static_cast<int>(p));
    ctx.verdict("eq20_majorized_p" + label, chk.verdict);
    ctx.require("eq20_norm_p" + label, chk.norm_ok);
    ctx.require_near("kernel_agreement_p" + label, chk.kernel_agreement, 1e-9);
  }

  // Koranyi derivative against central finite differences.
  const LownerKernel expk = LownerKernel::exponential();
  const Element deriv = lowner_derivative(expk, a, x);
  const double h = 1e-5;
  const Element fd = (exp_map(a + x * h) - exp_map(a - x * h)) * (0.5 / h);
  ctx.require_near("koranyi_vs_fd", (deriv - fd).norm2(), rel_scale(1e-6, deriv));
}

struct MultiLength {
  double len[3] = {0.0, 0.0, 0.0};     // p = 1, 2, inf
  double budget[3] = {0.0, 0.0, 0.0};  // 10 h^2 max|f''| + floor
};

MultiLength multi_path_length(const ConePath& path) {
  const auto& samples = path.samples();
  const size_t m = samples.size();
  std::vector<double> f[3];
  std::vector<double> ts(m);
  for (size_t i = 0; i < m; ++i) {
    const Element w = quad_rep(power_map(samples[i].point, -0.5), samples[i].derivative);
    const Eigen::VectorXd ev = eigenvalues(w).cwiseAbs();
    f[0].push_back(ev.sum());
    f[1].push_back(ev.norm());
    f[2].push_back(ev.maxCoeff());
    ts[i] = samples[i].t;
  }
  MultiLength out;
  double hmax = 0.0;
  for (size_t i = 1; i < m; ++i) hmax = std::max(hmax, ts[i] - ts[i - 1]);
  for (int p = 0; p < 3; ++p) {
    double curv = 0.0;
    for (size_t i = 1; i < m; ++i) {
      out.len[p] += 0.5 * (f[p][i] + f[p][i - 1]) * (ts[i] - ts[i - 1]);
      if (i + 1 < m) {
        const double d1 = (f[p][i + 1] - f[p][i]) / (ts[i + 1] - ts[i]);
        const double d0 = (f[p][i] - f[p][i - 1]) / (ts[i] - ts[i - 1]);
        curv = std::max(curv, std::abs(d1 - d0) / (0.5 * (ts[i + 1] - ts[i - 1])));
      }
    }
    out.budget[p] = 10.0 * hmax * hmax * curv + 1e-7;
  }
  return out;
}

void trial_eq21_22_emi_global(TrialContext& ctx) {
  constexpr int kSamples = 129;
  const Element u = gen_positive(ctx.alg, ctx.rng);
  const Element v = gen_positive(ctx.alg, ctx.rng);
  ctx.digest.feed(u);
  ctx.digest.feed(v);

  const Element lu = log_map(u), lv = log_map(v);
  const double dist[3] = {p_norm(lv - lu, 1.0), p_norm(lv - lu, 2.0), p_norm(lv - lu, kInf)};
  const char* plabel[3] = {"1", "2", "inf"};

  // Family 1: log-linear geodesic candidate.
  const ConePath geo = geodesic_path(u, v, kSamples);
  ctx.require_near("geodesic_endpoint_u", (geo.samples().front().point - u).norm2(),
                   rel_scale(1e-9, u));
  ctx.require_near("geodesic_endpoint_v", (geo.samples().back().point - v).norm2(),
                   rel_scale(1e-9, v));

  // Family 2: straight segment in the cone.
  std::vector<PathSample> seg;
  for (int i = 0; i < kSamples; ++i) {
    const double t = static_cast<double>(i) / (kSamples - 1);
    seg.push_back({t, u * (1.0 - t) + v * t, v - u});
  }
  const ConePath straight{std::move(seg)};

  // Family 3: perturbed log-polyline through exp.
  Element bump = gen_any(ctx.alg, ctx.rng);
  bump = bump * (0.3 / std::max(1e-12, bump.norm2()));
  const LownerKernel expk = LownerKernel::exponential();
  std::vector<PathSample> pert;
  for (int i = 0; i < kSamples; ++i) {
    const double t = static_cast<double>(i) / (kSamples - 1);
    const Element phi = lu * (1.0 - t) + lv * t + bump * (t * (1.0 - t));
    const Element dphi = (lv - lu) + bump * (1.0 - 2.0 * t);
    pert.push_back({t, exp_map(phi), lowner_derivative(expk, phi, dphi)});
  }
  const ConePath polyline{std::move(pert)};

  const MultiLength mgeo = multi_path_length(geo);
  const MultiLength mseg = multi_path_length(straight);
  const MultiLength mpert = multi_path_length(polyline);
  for (int p = 0; p < 3; ++p) {
    ctx.require_le(std::string("emi_geodesic_p") + plabel[p], dist[p], mgeo.len[p],
                   mgeo.budget[p]);
    ctx.require_le(std::string("emi_segment_p") + plabel[p], dist[p], mseg.len[p],
                   mseg.budget[p]);
    ctx.require_le(std::string("emi_polyline_p") + plabel[p], dist[p], mpert.len[p],
                   mpert.budget[p]);
  }

  // Commuting endpoints: the geodesic length equals the log distance.
  const JordanFrame frame = gen_frame(ctx.alg, ctx.rng);
  Element cu = Element::zero(ctx.alg), cv = Element::zero(ctx.alg);
  for (int i = 0; i < frame.size(); ++i) {
    cu += frame[i] * std::exp(ctx.rng.uniform(-1.0, 1.0));
    cv += frame[i] * std::exp(ctx.rng.uniform(-1.0, 1.0));
  }
  ctx.digest.feed(cu);
  ctx.digest.feed(cv);
  ctx.require("gen:commuting", operator_commute(cu, cv));
  const Element cdist = log_map(cv) - log_map(cu);
  const ConePath cgeo = geodesic_path(cu, cv, kSamples);
  const MultiLength mc = multi_path_length(cgeo);
  const double cd[3] = {p_norm(cdist, 1.0), p_norm(cdist, 2.0), p_norm(cdist, kInf)};
  for (int p = 0; p < 3; ++p)
    ctx.require_near(std::string("commuting_equality_p") + plabel[p],
                     std::abs(mc.len[p] - cd[p]), 1e-6 * std::max(1.0, cd[p]));
}

void trial_delta2_metric(TrialContext& ctx) {
  const Element u = gen_positive(ctx.alg, ctx.rng);
  const Element v = gen_positive(ctx.alg, ctx.rng);
  const Element w = gen_positive(ctx.alg, ctx.rng);
  const Element r = gen_positive(ctx.alg, ctx.rng);
  ctx.digest.feed(u);
  ctx.digest.feed(v);
  ctx.digest.feed(w);
  ctx.digest.feed(r);

  const double duv = delta2(u, v);
  ctx.require_near("identity", delta2(u, u), 1e-8);
  ctx.require_near("symmetry", std::abs(duv - delta2(v, u)), 1e-8 * (1.0 + duv));

  const Element pu = quad_rep(r, u), pv = quad_rep(r, v);
  ctx.require_near("p_r_isometry", std::abs(delta2(pu, pv) - duv), 1e-8 * (1.0 + duv));

  ctx.require_le("triangle", delta2(u, w), delta2(u, v) + delta2(v, w), 1e-8);

  // The geodesic candidate's length bounds delta_2 from above.
  const ConePath geo = geodesic_path(u, v, 129);
  const MultiLength ml = multi_path_length(geo);
  ctx.require_le("delta2_vs_geodesic", duv, ml.len[1], ml.budget[1]);
}

void trial_weak_substochastic(TrialContext& ctx) {
  const int n = ctx.alg.rank();
  const CoeffMatrix a = gen_psd_diag_capped(n, ctx.rng);
  const Element x = gen_psd(ctx.alg, ctx.rng);
  const JordanFrame frame = gen_frame(ctx.alg, ctx.rng);
  ctx.digest.feed(a);
  ctx.digest.feed(x);

  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i));
  ctx.require("gen:diag_capped", max_diag <= 1.0 + 1e-12);
  ctx.verdict("weak_majorized", check_substochastic(a, x, frame, ctx.tol));

  // Converse: one diagonal entry above 1 must admit a failure witness.
  Eigen::MatrixXd bumped = a.entries();
  const int bump = ctx.rng.uniform_int(0, n - 1);
  const double target = 1.1;
  const double ratio = std::sqrt(target / a(bump, bump));
  bumped.row(bump) *= ratio;
  bumped.col(bump) *= ratio;
  const CoeffMatrix a2(bumped);

  bool found = false;
  for (int i = 0; i < n && !found; ++i)
    found = !check_substochastic(a2, frame[(bump + i) % n], frame, ctx.tol).holds;
  for (int t = 0; t < 1000 && !found; ++t)
    found = !check_substochastic(a2, gen_psd(ctx.alg, ctx.rng), frame, ctx.tol).holds;
  if (found)
    ctx.require("converse_witness", true);
  else
    ctx.inconclusive("converse_witness");
}

void trial_hlp_birkhoff(TrialContext& ctx) {
  const int n = ctx.rng.uniform_int(2, 8);
  Eigen::VectorXd q(n);
  for (int i = 0; i < n; ++i) q(i) = 2.0 * ctx.rng.normal();
  const Eigen::MatrixXd d0 = gen_doubly_stochastic(n, ctx.rng);
  const Eigen::VectorXd p = d0 * q;
  ctx.digest.feed(q);
  ctx.digest.feed(d0);

  ctx.require("gen:majorized", majorizes(p, q).holds);

  const TTransformChain chain = ds_transfer_matrix(p, q);
  const double q1 = std::max(1.0, q.cwiseAbs().sum());
  ctx.require_near("transfer_dq_eq_p", (chain.product * q - p).cwiseAbs().maxCoeff(), 1e-10 * q1);
  ctx.require("t_count_bound", chain.t_count <= n - 1);

  double ds_err = 0.0;
  for (int i = 0; i < n; ++i) {
    ds_err = std::max(ds_err, std::abs(chain.product.row(i).sum() - 1.0));
    ds_err = std::max(ds_err, std::abs(chain.product.col(i).sum() - 1.0));
    for (int j = 0; j < n; ++j) ds_err = std::max(ds_err, std::max(0.0, -chain.product(i, j)));
  }
  ctx.require_near("product_doubly_stochastic", ds_err, 1e-12);

  for (const Eigen::MatrixXd& fct : chain.factors) {
    double ferr = 0.0;
    for (int i = 0; i < n; ++i) {
      ferr = std::max(ferr, std::abs(fct.row(i).sum() - 1.0));
      ferr = std::max(ferr, std::abs(fct.col(i).sum() - 1.0));
    }
    ds_err = std::max(ds_err, ferr);
  }
  ctx.require_near("factors_doubly_stochastic", ds_err, 1e-12);

  const BirkhoffDecomposition bd = birkhoff_decompose(chain.product);
  double wsum = 0.0;
  for (const BirkhoffTerm& t : bd.terms) wsum += t.weight;
  ctx.require_near("birkhoff_weight_sum", std::abs(wsum - 1.0), 1e-12);
  ctx.require_near("birkhoff_reconstruction",
                   (bd.reconstruct(n) - chain.product).cwiseAbs().maxCoeff(), 1e-10);
  ctx.require("birkhoff_term_bound",
              static_cast<int>(bd.terms.size()) <= n * n - 2 * n + 2);

  // Element-level pairs close the loop with Theorem 2 (a) implies (c).
  if (ctx.alg.kind() == AlgebraKind::RealSym || ctx.alg.kind() == AlgebraKind::ComplexHerm) {
    const auto [xe, ye] = gen_majorized_pair(ctx.alg, ctx.rng);
    ctx.digest.feed(xe);
    ctx.digest.feed(ye);
    ctx.verdict("element_pair_majorized", majorizes_elements(xe, ye, ctx.tol));
  }
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = [] {
    std::vector<SuiteDef> v;
    v.push_back({"algebra-axioms",
                 "Jordan identity, trace-form associativity, spectral reconstruction",
                 default_algebras(), 200, trial_algebra_axioms});
    v.push_back({"thm1-positivity", "PSD coefficient matrices preserve the cone",
                 simple_algebras(), 500, trial_thm1_positivity});
    v.push_back({"thm3-correlation",
                 "correlation kernels give doubly stochastic Schur transforms",
                 default_algebras(), 500, trial_thm3_correlation});
    v.push_back({"thm4-schur-powers",
                 "A^(k).x majorized by B^(k).x when [a/b] is a correlation matrix",
                 default_algebras(), 75, trial_thm4_schur_powers});
    v.push_back({"eq12-pa-la", "P_a^k(x) majorized by L_{a^2}^k(x)", default_algebras(), 75,
                 trial_eq12_pa_la});
    v.push_back({"eq13-corollary", "A.x majorized by P_sqrt(diag).x and consequences",
                 default_algebras(), 75, trial_eq13_corollary});
    v.push_back({"eq14-det", "diagonal-product lower bound for det(A.x)", default_algebras(),
                 75, trial_eq14_det});
    v.push_back({"schur-hadamard-oppenheim",
                 "Diag(x) majorized by x; Hadamard and Oppenheim determinant bounds",
                 default_algebras(), 75, trial_schur_hadamard_oppenheim});
    v.push_back({"fischer-split", "idempotent split u+w majorized by x; Fischer bound",
                 default_algebras(), 75, trial_fischer_split});
    v.push_back({"mean-chains", "harmonic/geometric/logarithmic/arithmetic mean chains",
                 default_algebras(), 50, trial_mean_chains});
    v.push_back({"spin-means", "ordered means dominate in the rank-2 spin algebra",
                 {Algebra::spin(3), Algebra::spin(5)}, 100, trial_spin_means});
    v.push_back({"eq20-emi-local", "x majorized by P_c(G'(a)x) and the norm consequence",
                 default_algebras(), 75, trial_eq20_emi_local});
    v.push_back({"eq21-22-emi-global", "path lengths dominate the log distance",
                 default_algebras(), 50, trial_eq21_22_emi_global});
    v.push_back({"delta2-metric", "delta_2 symmetry, P_r isometry, triangle inequality",
                 default_algebras(), 50, trial_delta2_metric});
    v.push_back({"weak-substochastic",
                 "diag <= 1 gives weak majorization; diag > 1 admits witnesses",
                 default_algebras(), 75, trial_weak_substochastic});
    v.push_back({"hlp-birkhoff", "T-transform transfer chains and Birkhoff decompositions",
                 matrix_algebras(), 100, trial_hlp_birkhoff});
    return v;
  }();
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const SuiteDef& def : registry())
    if (def.name == name) return def;
  std::string names;
  for (const SuiteDef& def : registry()) names += "\n  " + def.name;
  throw usage_error("unknown suite '" + name + "'; available suites:" + names);
}

}  // namespace

std::vector<Algebra> default_algebras() {
  return {Algebra::real_sym(4), Algebra::complex_herm(3), Algebra::spin(5),
          Algebra::direct_sum({Algebra::real_sym(2), Algebra::spin(3)})};
}

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const SuiteDef& def : registry()) v.push_back({def.name, def.summary, def.trials});
    return v;
  }();
  return infos;
}

bool has_suite(const std::string& name) {
  for (const SuiteDef& def : registry())
    if (def.name == name) return true;
  return false;
}

Report run_suite(const SuiteConfig& config) {
  const SuiteDef& def = find_suite(config.suite);
  if (config.trials == 0) throw usage_error("run_suite: trials must be >= 1");

  SuiteConfig resolved = config;
  if (resolved.algebras.empty()) resolved.algebras = def.algebras;
  if (resolved.trials < 0) resolved.trials = def.trials;

  Report report;
  report.suite = def.name;
  report.config = resolved;

  const auto t0 = std::chrono::steady_clock::now();
  int index = 0;
  for (const Algebra& alg : resolved.algebras) {
    for (int t = 0; t < resolved.trials; ++t, ++index) {
      const uint64_t trial_seed = SplitMix64::derive(resolved.seed, static_cast<uint64_t>(index));
      SplitMix64 rng(trial_seed);
      TrialContext ctx{alg, rng, resolved.tol, {}, {}, false, false};
      try {
        def.trial(ctx);
      } catch (const std::exception& e) {
        ctx.record(std::string("exception: ") + e.what(), false, -1.0);
      }

      TrialRecord rec;
      rec.index = index;
      rec.algebra = alg.to_string();
      rec.seed = trial_seed;
      rec.digest = ctx.digest.hex();
      rec.checks = std::move(ctx.checks);
      rec.status = ctx.any_fail ? "fail" : (ctx.any_inconclusive ? "inconclusive" : "pass");
      if (ctx.any_fail)
        ++report.fail;
      else if (ctx.any_inconclusive)
        ++report.inconclusive;
      else
        ++report.pass;
      report.trials.push_back(std::move(rec));
    }
  }
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

std::string Report::to_json(int indent) const {
  detail::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  detail::ordered_json cfg;
  detail::ordered_json algs = detail::ordered_json::array();
  for (const Algebra& a : config.algebras) algs.push_back(a.to_string());
  cfg["algebras"] = algs;
  cfg["trials"] = config.trials;
  cfg["seed"] = config.seed;
  cfg["tol"] = config.tol;
  j["config"] = cfg;

  detail::ordered_json trial_arr = detail::ordered_json::array();
  for (const TrialRecord& t : trials) {
    detail::ordered_json tj;
    tj["i"] = t.index;
    tj["algebra"] = t.algebra;
    tj["seed"] = t.seed;
    tj["digest"] = t.digest;
    tj["status"] = t.status;
    detail::ordered_json checks = detail::ordered_json::array();
    for (const CheckRecord& c : t.checks) {
      detail::ordered_json cj;
      cj["name"] = c.name;
      cj["ok"] = c.ok;
      cj["margin"] = c.margin;
      checks.push_back(cj);
    }
    tj["checks"] = checks;
    trial_arr.push_back(tj);
  }
  j["trials"] = trial_arr;

  detail::ordered_json agg;
  agg["pass"] = pass;
  agg["fail"] = fail;
  agg["inconclusive"] = inconclusive;
  j["aggregate"] = agg;
  j["runtime_ms"] = config.include_runtime ? runtime_ms : 0;
  return j.dump(indent);
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "suite,algebra,trial,seed,digest,check,ok,margin\n";
  for (const TrialRecord& t : trials)
    for (const CheckRecord& c : t.checks) {
      out << suite << ',' << t.algebra << ',' << t.index << ',' << t.seed << ',' << t.digest
          << ',' << c.name << ',' << (c.ok ? 1 : 0) << ',';
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", c.margin);
      out << buf << '\n';
    }
  return out.str();
}

}  // namespace jm
