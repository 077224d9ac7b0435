#include "jmaj/eig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "jmaj/errors.hpp"

namespace jm {

namespace {

constexpr int kMaxSweeps = 40;
constexpr double kOffTol = 1e-12;

template <typename Scalar>
double off_diagonal_norm(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One cyclic sweep of (p,q) rotations; updates a and accumulates into q_acc.
// The same code covers the real case (phase == +-1) and the Hermitian case.
template <typename Scalar>
void jacobi_sweep(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& q_acc) {
  const int n = static_cast<int>(a.rows());
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double w = std::abs(a(p, q));
      if (w <= 0.0) continue;
      const Scalar phase = a(p, q) / w;  // a_pq = w * phase

      const double app = std::real(a(p, p));
      const double aqq = std::real(a(q, q));
      const double theta = (aqq - app) / (2.0 * w);
      double t;
      if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);
      } else {
        t = ((theta >= 0.0) ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
      }
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;

      // R is identity except R(p,p)=c, R(p,q)=s, R(q,p)=-s*conj(phase),
      // R(q,q)=c*conj(phase); apply a <- R^H a R, q_acc <- q_acc R.
      const Scalar cphase = Scalar(1) / phase;  // conj(phase) for unit modulus
      for (int i = 0; i < n; ++i) {
        const Scalar aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - s * (cphase * aiq);
        a(i, q) = s * aip + c * (cphase * aiq);
      }
      for (int j = 0; j < n; ++j) {
        const Scalar apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - s * (phase * aqj);
        a(q, j) = s * apj + c * (phase * aqj);
      }
      // Pivot entries are zero by construction; pin them to kill drift.
      a(p, q) = Scalar(0);
      a(q, p) = Scalar(0);
      a(p, p) = Scalar(std::real(a(p, p)));
      a(q, q) = Scalar(std::real(a(q, q)));

      for (int i = 0; i < n; ++i) {
        const Scalar qip = q_acc(i, p), qiq = q_acc(i, q);
        q_acc(i, p) = c * qip - s * (cphase * qiq);
        q_acc(i, q) = s * qip + c * (cphase * qiq);
      }
    }
  }
}

template <typename Scalar>
std::pair<Eigen::VectorXd, Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> jacobi_impl(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = static_cast<int>(a.rows());
  Mat q = Mat::Identity(n, n);

  const double norm0 = a.norm();
  const double target = kOffTol * norm0;

  bool converged = off_diagonal_norm(a) <= target;
  for (int sweep = 0; !converged && sweep < kMaxSweeps; ++sweep) {
    jacobi_sweep(a, q);
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged) throw numeric_error("jacobi_eig: no convergence within sweep cap");

  Eigen::VectorXd evals(n);
  for (int i = 0; i < n; ++i) evals(i) = std::real(a(i, i));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return evals(i) > evals(j); });

  Eigen::VectorXd sorted(n);
  Mat vecs(n, n);
  for (int i = 0; i < n; ++i) {
    sorted(i) = evals(order[i]);
    vecs.col(i) = q.col(order[i]);
  }
  return {sorted, vecs};
}

}  // namespace

SymEig jacobi_eig(const Eigen::MatrixXd& a) {
  auto [evals, vecs] = jacobi_impl<double>(a);
  return {std::move(evals), std::move(vecs)};
}

HermEig jacobi_eig(const Eigen::MatrixXcd& a) {
  auto [evals, vecs] = jacobi_impl<std::complex<double>>(a);
  return {std::move(evals), std::move(vecs)};
}

}  // namespace jm
