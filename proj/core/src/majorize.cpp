#include "jmaj/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jmaj/eig.hpp"
#include "jmaj/errors.hpp"

namespace jm {

namespace {

Eigen::VectorXd sorted_desc(const Eigen::VectorXd& v) {
  Eigen::VectorXd s = v;
  std::sort(s.data(), s.data() + s.size(), std::greater<double>());
  return s;
}

double default_major_tol(const Eigen::VectorXd& q) {
  return 1e-8 * std::max(1.0, q.cwiseAbs().sum());
}

MajorizationVerdict verdict_impl(const Eigen::VectorXd& p, const Eigen::VectorXd& q, double tol,
                                 bool weak) {
  if (p.size() != q.size()) throw usage_error("majorizes: length mismatch");
  if (tol < 0.0) tol = default_major_tol(q);
  const Eigen::VectorXd pd = sorted_desc(p), qd = sorted_desc(q);
  MajorizationVerdict v;
  v.tol_used = tol;
  v.slacks.resize(p.size());
  double sp = 0.0, sq = 0.0;
  for (int k = 0; k < p.size(); ++k) {
    sp += pd(k);
    sq += qd(k);
    v.slacks(k) = sq - sp;
  }
  v.trace_gap = p.size() ? v.slacks(p.size() - 1) : 0.0;
  v.holds = v.worst_slack() >= -tol && (weak || std::abs(v.trace_gap) <= tol);
  return v;
}

// Stable argsort by decreasing value (ties by original index).
std::vector<int> argsort_desc(const Eigen::VectorXd& v) {
  std::vector<int> idx(static_cast<size_t>(v.size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return v(i) > v(j); });
  return idx;
}

Eigen::MatrixXd permutation_matrix(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) r(i, order[static_cast<size_t>(i)]) = 1.0;
  return r;  // (R x)_i = x_order[i]
}

}  // namespace

MajorizationVerdict majorizes(const Eigen::VectorXd& p, const Eigen::VectorXd& q, double tol) {
  return verdict_impl(p, q, tol, /*weak=*/false);
}

MajorizationVerdict weak_majorizes(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                                   double tol) {
  return verdict_impl(p, q, tol, /*weak=*/true);
}

MajorizationVerdict majorizes_elements(const Element& x, const Element& y, double tol) {
  require_same_algebra(x, y, "majorizes_elements");
  return majorizes(eigenvalues(x), eigenvalues(y), tol);
}

MajorizationVerdict weak_majorizes_elements(const Element& x, const Element& y, double tol) {
  require_same_algebra(x, y, "weak_majorizes_elements");
  return weak_majorizes(eigenvalues(x), eigenvalues(y), tol);
}

TTransformChain ds_transfer_matrix(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                                   double tol) {
  const MajorizationVerdict pre = majorizes(p, q, tol);
  if (!pre.holds)
    throw domain_error("ds_transfer_matrix: p is not majorized by q (worst slack " +
                       std::to_string(pre.worst_slack()) + ", trace gap " +
                       std::to_string(pre.trace_gap) + ")");

  const int n = static_cast<int>(p.size());
  const std::vector<int> op = argsort_desc(p), oq = argsort_desc(q);
  const Eigen::MatrixXd rp = permutation_matrix(op), rq = permutation_matrix(oq);

  Eigen::VectorXd pd(n), c(n);
  for (int i = 0; i < n; ++i) {
    pd(i) = p(op[static_cast<size_t>(i)]);
    c(i) = q(oq[static_cast<size_t>(i)]);
  }

  const double eps = 1e-13 * std::max(1.0, q.cwiseAbs().sum());

  TTransformChain chain;
  Eigen::MatrixXd dsorted = Eigen::MatrixXd::Identity(n, n);

  // Leading permutation aligning the two sort orders.
  const Eigen::MatrixXd p0 = rp.transpose() * rq;
  if (!p0.isIdentity(0.0)) chain.factors.push_back(p0);

  for (int step = 0; step <= n; ++step) {
    int j = -1;
    for (int i = 0; i < n; ++i)
      if (c(i) - pd(i) > eps) {
        j = i;
        break;
      }
    if (j < 0) break;
    if (step == n)
      throw numeric_error("ds_transfer_matrix: transform count exceeded n (tolerance breakdown)");
    int k = -1;
    for (int i = j + 1; i < n; ++i)
      if (pd(i) - c(i) > eps) {
        k = i;
        break;
      }
    if (k < 0) throw numeric_error("ds_transfer_matrix: no receiving index (tolerance breakdown)");

    const double delta = std::min(c(j) - pd(j), pd(k) - c(k));
    const double lambda = 1.0 - delta / (c(j) - c(k));
    Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n, n);
    t(j, j) = t(k, k) = lambda;
    t(j, k) = t(k, j) = 1.0 - lambda;

    const double cj = c(j), ck = c(k);
    c(j) = lambda * cj + (1.0 - lambda) * ck;
    c(k) = lambda * ck + (1.0 - lambda) * cj;
    dsorted = t * dsorted;
    chain.factors.push_back(rp.transpose() * t * rp);
    ++chain.t_count;
  }

  chain.product = rp.transpose() * dsorted * rq;
  return chain;
}

Eigen::MatrixXd BirkhoffDecomposition::reconstruct(int n) const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (const BirkhoffTerm& t : terms)
    for (int i = 0; i < n; ++i) d(i, t.permutation[static_cast<size_t>(i)]) += t.weight;
  return d;
}

namespace {

// Kuhn augmenting-path matching over the support graph.
bool try_augment(int row, const std::vector<std::vector<int>>& adj, std::vector<bool>& seen,
                 std::vector<int>& match_col) {
  for (int col : adj[static_cast<size_t>(row)]) {
    if (seen[static_cast<size_t>(col)]) continue;
    seen[static_cast<size_t>(col)] = true;
    if (match_col[static_cast<size_t>(col)] < 0 ||
        try_augment(match_col[static_cast<size_t>(col)], adj, seen, match_col)) {
      match_col[static_cast<size_t>(col)] = row;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<int>> perfect_matching(const Eigen::MatrixXd& d, double supp_tol) {
  const int n = static_cast<int>(d.rows());
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d(i, j) > supp_tol) adj[static_cast<size_t>(i)].push_back(j);

  std::vector<int> match_col(static_cast<size_t>(n), -1);
  for (int row = 0; row < n; ++row) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    if (!try_augment(row, adj, seen, match_col)) return std::nullopt;
  }
  std::vector<int> perm(static_cast<size_t>(n));
  for (int col = 0; col < n; ++col) perm[static_cast<size_t>(match_col[static_cast<size_t>(col)])] = col;
  return perm;
}

}  // namespace

BirkhoffDecomposition birkhoff_decompose(const Eigen::MatrixXd& d, double tol) {
  const int n = static_cast<int>(d.rows());
  if (d.cols() != n) throw usage_error("birkhoff_decompose: matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (std::abs(d.row(i).sum() - 1.0) > tol || std::abs(d.col(i).sum() - 1.0) > tol)
      throw domain_error("birkhoff_decompose: row/column sums are not 1");
    for (int j = 0; j < n; ++j)
      if (d(i, j) < -tol) throw domain_error("birkhoff_decompose: negative entry");
  }

  constexpr double kSupport = 1e-12;
  Eigen::MatrixXd r = d.cwiseMax(0.0);
  BirkhoffDecomposition out;
  const int max_terms = n * n + 1;
  for (int iter = 0; iter < max_terms; ++iter) {
    if (r.maxCoeff() <= kSupport) break;
    auto perm = perfect_matching(r, kSupport);
    if (!perm) throw numeric_error("birkhoff_decompose: support admits no perfect matching");
    double w = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) w = std::min(w, r(i, (*perm)[static_cast<size_t>(i)]));
    for (int i = 0; i < n; ++i) {
      double& entry = r(i, (*perm)[static_cast<size_t>(i)]);
      entry = std::max(0.0, entry - w);
    }
    out.terms.push_back({w, std::move(*perm)});
  }
  if (r.maxCoeff() > kSupport)
    throw numeric_error("birkhoff_decompose: residual mass after term cap");
  return out;
}

bool is_correlation(const CoeffMatrix& c, double tol) {
  for (int i = 0; i < c.size(); ++i)
    if (std::abs(c(i, i) - 1.0) > tol) return false;
  return coeff_eigenvalues(c).minCoeff() >= -tol;
}

Eigen::VectorXd coeff_eigenvalues(const CoeffMatrix& c) {
  return jacobi_eig(c.entries()).eigenvalues;
}

CoeffMatrix schur_power(const CoeffMatrix& a, int k) {
  if (k == 0) throw usage_error("schur_power: k must be nonzero");
  const int n = a.size();
  if (k < 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a(i, j) == 0.0)
          throw domain_error("schur_power: zero entry with negative power at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
  }
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::pow(a(i, j), k);
  return CoeffMatrix(m);
}

CoeffMatrix corr_normalize(const CoeffMatrix& a) {
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    if (a(i, i) <= 0.0) throw domain_error("corr_normalize: nonpositive diagonal entry");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j) / (std::sqrt(a(i, i)) * std::sqrt(a(j, j)));
  return CoeffMatrix(m);
}

CoeffMatrix corr_ratio(const Eigen::VectorXd& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0 || a(0) <= 0.0) throw domain_error("corr_ratio: entries must be positive");
  for (int i = 1; i < n; ++i)
    if (a(i) < a(i - 1)) throw domain_error("corr_ratio: entries must be nondecreasing");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a(std::min(i, j)) / a(std::max(i, j));
  return CoeffMatrix(m);
}

CoeffMatrix corr_abs_diff(const Eigen::VectorXd& a) {
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = 1.0 / (1.0 + std::abs(a(i) - a(j)));
  return CoeffMatrix(m);
}

double posdef_fn_value(PosDefFn fn, double t) {
  switch (fn) {
    case PosDefFn::Cos:
      return std::cos(t);
    case PosDefFn::Sinc:
      if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
      }
      return std::sin(t) / t;
    case PosDefFn::TOverSinh:
      if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + 7.0 * t2 * t2 / 360.0;
      }
      return t / std::sinh(t);
    case PosDefFn::ExpAbs:
      return std::exp(-std::abs(t));
  }
  throw usage_error("posdef_fn_value: unknown function");
}

CoeffMatrix corr_posdef_fn(PosDefFn fn, const Eigen::VectorXd& a) {
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = posdef_fn_value(fn, a(i) - a(j));
  return CoeffMatrix(m);
}

SchurMajorizationCheck check_schur_majorization(const CoeffMatrix& a, const CoeffMatrix& b,
                                                const Element& x, const JordanFrame& frame,
                                                int k) {
  const int n = a.size();
  if (b.size() != n) throw usage_error("check_schur_majorization: size mismatch");
  Eigen::MatrixXd ratio(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (b(i, j) == 0.0)
        throw domain_error("check_schur_majorization: zero b entry at (" + std::to_string(i) +
                           "," + std::to_string(j) + ")");
      ratio(i, j) = a(i, j) / b(i, j);
    }

  SchurMajorizationCheck out;
  out.ratio_is_correlation = is_correlation(CoeffMatrix(ratio));

  const PeirceBlocks blocks = peirce_blocks(x, frame);
  const Element u = schur_product(schur_power(a, k), blocks);
  const Element v = schur_product(schur_power(b, k), blocks);
  out.verdict = majorizes_elements(u, v);

  const double tol = 1e-8 * std::max(1.0, v.norm2());
  auto add = [&](const std::string& name, double lhs, double rhs) {
    out.consequences.push_back({name, lhs, rhs, lhs <= rhs + tol});
  };
  add("lambda_max", lambda_max(u), lambda_max(v));
  add("lambda_min(rev)", lambda_min(v), lambda_min(u));
  for (int kk = 1; kk <= frame.size(); ++kk)
    add("sum_top_" + std::to_string(kk), sum_top_k(u, kk), sum_top_k(v, kk));
  for (double pp : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    const std::string label = std::isinf(pp) ? "inf" : std::to_string(static_cast<int>(pp));
    add("norm_p" + label, p_norm(u, pp), p_norm(v, pp));
  }
  return out;
}

namespace {

// PSD candidates used by the violation search, relative to the canonical
// frame of a simple algebra.
Element rank_one_candidate(const Algebra& alg, const Eigen::VectorXd& v, SplitMix64& rng,
                           bool randomize) {
  switch (alg.kind()) {
    case AlgebraKind::RealSym: {
      const int n = alg.rank();
      Eigen::VectorXd w = v;
      if (randomize)
        for (int i = 0; i < n; ++i) w(i) = rng.normal();
      return Element::from_sym(alg, Eigen::MatrixXd(w * w.transpose()));
    }
    case AlgebraKind::ComplexHerm: {
      const int n = alg.rank();
      Eigen::VectorXcd w(n);
      for (int i = 0; i < n; ++i)
        w(i) = randomize ? std::complex<double>(rng.normal(), rng.normal())
                         : std::complex<double>(v(i), 0.0);
      return Element::from_herm(alg, Eigen::MatrixXcd(w * w.adjoint()));
    }
    case AlgebraKind::Spin: {
      const int d = alg.spin_dim();
      // alpha e1 + beta e2 + z with ||z||^2 <= alpha*beta keeps x >= 0;
      // push z to the boundary where violations live.
      const double alpha = randomize ? rng.uniform(0.2, 1.0) : 1.0;
      const double beta = randomize ? rng.uniform(0.2, 1.0) : 1.0;
      Eigen::VectorXd z = Eigen::VectorXd::Zero(d - 1);
      if (d >= 3) {
        for (int i = 1; i < d - 1; ++i) z(i) = randomize ? rng.normal() : (i == 1 ? 1.0 : 0.0);
        const double zn = z.norm();
        if (zn > 0.0) z *= std::sqrt(alpha * beta) / zn;
      }
      Eigen::VectorXd bar = z;
      bar(0) = 0.5 * (alpha - beta);
      return Element::from_spin(alg, 0.5 * (alpha + beta), bar);
    }
    default:
      throw usage_error("find_positivity_violation: algebra must be simple");
  }
}

}  // namespace

std::optional<Element> find_positivity_violation(const CoeffMatrix& a, const Algebra& alg,
                                                 int trials, SplitMix64& rng) {
  if (!alg.simple()) throw usage_error("find_positivity_violation: algebra must be simple");
  if (alg.rank() != a.size())
    throw usage_error("find_positivity_violation: coefficient matrix rank mismatch");

  const SymEig ae = jacobi_eig(a.entries());
  if (ae.eigenvalues.minCoeff() >= -1e-10) return std::nullopt;  // Theorem-1 forward regime
  const Eigen::VectorXd v = ae.vectors.col(ae.eigenvalues.size() - 1);

  const JordanFrame frame = JordanFrame::canonical(alg);
  auto violates = [&](const Element& x) -> bool {
    if (!is_psd_element(x)) return false;
    const Element ax = schur_product(a, x, frame);
    const double tol = 1e-9 * std::max(1.0, ax.norm2());
    return lambda_min(ax) < -10.0 * tol;
  };

  // Deterministic eigenvector-aligned candidate first; diagonal idempotents
  // catch negative diagonal entries of A.
  Element aligned = rank_one_candidate(alg, v, rng, /*randomize=*/false);
  if (violates(aligned)) return aligned;
  for (int i = 0; i < alg.rank(); ++i)
    if (a(i, i) < 0.0 && violates(frame[i])) return frame[i];

  for (int t = 0; t < trials; ++t) {
    Element x = rank_one_candidate(alg, v, rng, /*randomize=*/true);
    if (violates(x)) return x;
  }
  return std::nullopt;
}

MajorizationVerdict check_substochastic(const CoeffMatrix& a, const Element& x,
                                        const JordanFrame& frame, double tol) {
  return weak_majorizes_elements(schur_product(a, x, frame), x, tol);
}

}  // namespace jm
