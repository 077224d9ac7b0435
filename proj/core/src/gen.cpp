#include "jmaj/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jmaj/errors.hpp"

namespace jm {

namespace {

Element gaussian_element(const Algebra& alg, SplitMix64& rng) {
  switch (alg.kind()) {
    case AlgebraKind::RealSym: {
      const int n = alg.rank();
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
      return Element::from_sym(alg, m);
    }
    case AlgebraKind::ComplexHerm: {
      const int n = alg.rank();
      Eigen::MatrixXcd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = std::complex<double>(rng.normal(), rng.normal());
      return Element::from_herm(alg, m);
    }
    case AlgebraKind::Spin: {
      const int d = alg.spin_dim();
      Eigen::VectorXd bar(d - 1);
      for (int i = 0; i < d - 1; ++i) bar(i) = rng.normal();
      return Element::from_spin(alg, rng.normal(), bar);
    }
    case AlgebraKind::DirectSum: {
      std::vector<Element> ps;
      for (const Algebra& p : alg.parts()) ps.push_back(gaussian_element(p, rng));
      return Element::from_parts(alg, std::move(ps));
    }
  }
  throw usage_error("gaussian_element: unknown algebra kind");
}

// Synthesizes sum lambda_i e_i over a random frame; duplicates one
// eigenvalue in ~10% of draws.
Element synthesize_spectrum(const Algebra& alg, SplitMix64& rng,
                            const std::function<double()>& draw) {
  const JordanFrame frame = gen_frame(alg, rng);
  const int n = frame.size();
  std::vector<double> lambda(static_cast<size_t>(n));
  for (double& l : lambda) l = draw();
  if (n >= 2 && rng.u01() < 0.1) {
    const int src = rng.uniform_int(0, n - 1);
    int dst = rng.uniform_int(0, n - 2);
    if (dst >= src) ++dst;
    lambda[static_cast<size_t>(dst)] = lambda[static_cast<size_t>(src)];
  }
  Element x = Element::zero(alg);
  for (int i = 0; i < n; ++i) x += frame[i] * lambda[static_cast<size_t>(i)];
  return x;
}

}  // namespace

Element gen_any(const Algebra& alg, SplitMix64& rng) {
  return synthesize_spectrum(alg, rng, [&rng] { return rng.uniform(-3.0, 3.0); });
}

Element gen_psd(const Algebra& alg, SplitMix64& rng) {
  return synthesize_spectrum(alg, rng, [&rng] {
    return rng.u01() < 0.1 ? 0.0 : rng.uniform(0.0, 4.0);
  });
}

Element gen_positive(const Algebra& alg, SplitMix64& rng) {
  return synthesize_spectrum(alg, rng, [&rng] {
    return std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
  });
}

Element gen_idempotent(const Algebra& alg, SplitMix64& rng) {
  const JordanFrame frame = gen_frame(alg, rng);
  const int n = frame.size();
  if (n == 1) return frame[0];
  const int k = rng.uniform_int(1, n - 1);
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<size_t>(i)],
                                            order[static_cast<size_t>(rng.uniform_int(0, i))]);
  Element c = Element::zero(alg);
  for (int i = 0; i < k; ++i) c += frame[order[static_cast<size_t>(i)]];
  return c;
}

JordanFrame gen_frame(const Algebra& alg, SplitMix64& rng) {
  return spectral_decomposition(gaussian_element(alg, rng)).frame;
}

CoeffMatrix gen_correlation(int n, SplitMix64& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  Eigen::MatrixXd a = g * g.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
  return corr_normalize(CoeffMatrix(a));
}

CoeffMatrix gen_psd_matrix(int n, SplitMix64& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  return CoeffMatrix(Eigen::MatrixXd(g * g.transpose() / n));
}

CoeffMatrix gen_psd_diag_capped(int n, SplitMix64& rng) {
  const CoeffMatrix c = gen_correlation(n, rng);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = rng.uniform(0.2, 1.0);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::sqrt(d(i)) * std::sqrt(d(j)) * c(i, j);
  return CoeffMatrix(m);
}

namespace {

Eigen::MatrixXd random_orthogonal(int n, SplitMix64& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  return q;
}

Eigen::MatrixXcd random_unitary(int n, SplitMix64& rng) {
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = std::complex<double>(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const std::complex<double> rii = r(i, i);
    if (std::abs(rii) > 0.0) q.col(i) *= rii / std::abs(rii);
  }
  return q;
}

std::vector<double> simplex_weights(int k, SplitMix64& rng) {
  std::vector<double> w(static_cast<size_t>(k));
  double s = 0.0;
  for (double& wi : w) {
    wi = -std::log(1.0 - rng.u01());
    s += wi;
  }
  for (double& wi : w) wi /= s;
  return w;
}

}  // namespace

std::pair<Element, Element> gen_majorized_pair(const Algebra& alg, SplitMix64& rng, int terms) {
  if (alg.kind() != AlgebraKind::RealSym && alg.kind() != AlgebraKind::ComplexHerm)
    throw usage_error("gen_majorized_pair: matrix algebras only");
  const Element y = gen_any(alg, rng);
  const int n = alg.rank();
  const std::vector<double> w = simplex_weights(terms, rng);

  Element x = Element::zero(alg);
  for (int k = 0; k < terms; ++k) {
    if (alg.kind() == AlgebraKind::RealSym) {
      const Eigen::MatrixXd q = random_orthogonal(n, rng);
      x += Element::from_sym(alg, Eigen::MatrixXd(q * y.sym() * q.transpose())) *
           w[static_cast<size_t>(k)];
    } else {
      const Eigen::MatrixXcd q = random_unitary(n, rng);
      x += Element::from_herm(alg, Eigen::MatrixXcd(q * y.herm() * q.adjoint())) *
           w[static_cast<size_t>(k)];
    }
  }
  if (!majorizes_elements(x, y).holds)
    throw numeric_error("gen_majorized_pair: generated pair fails majorization");
  return {x, y};
}

Eigen::MatrixXd gen_doubly_stochastic(int n, SplitMix64& rng, int terms) {
  const std::vector<double> w = simplex_weights(terms, rng);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.uniform_int(0, i))]);
    for (int i = 0; i < n; ++i) d(i, perm[static_cast<size_t>(i)]) += w[static_cast<size_t>(k)];
  }
  return d;
}

}  // namespace jm
