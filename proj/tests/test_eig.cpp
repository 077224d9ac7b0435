#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "jmaj/eig.hpp"
#include "jmaj/rng.hpp"

using namespace jm;

namespace {

Eigen::MatrixXd random_sym(int n, SplitMix64& rng) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
  return 0.5 * (m + m.transpose());
}

Eigen::MatrixXcd random_herm(int n, SplitMix64& rng) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::complex<double>(rng.normal(), rng.normal());
  return 0.5 * (m + m.adjoint());
}

}  // namespace

TEST_CASE("jacobi eigenvalues match an independent dense solver (real)") {
  SplitMix64 rng(1);
  for (int n : {1, 2, 3, 5, 8, 16}) {
    for (int t = 0; t < 20; ++t) {
      const Eigen::MatrixXd a = random_sym(n, rng);
      const SymEig mine = jacobi_eig(a);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
      Eigen::VectorXd expected = ref.eigenvalues().reverse();
      REQUIRE((mine.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-11 * std::max(1.0, a.norm()));
      // Reconstruction and orthogonality.
      const Eigen::MatrixXd rec =
          mine.vectors * mine.eigenvalues.asDiagonal() * mine.vectors.transpose();
      REQUIRE((rec - a).norm() < 1e-11 * std::max(1.0, a.norm()));
      REQUIRE((mine.vectors.transpose() * mine.vectors -
               Eigen::MatrixXd::Identity(n, n)).norm() < 1e-12 * n);
    }
  }
}

TEST_CASE("jacobi eigenvalues match an independent dense solver (hermitian)") {
  SplitMix64 rng(2);
  for (int n : {1, 2, 3, 4, 6}) {
    for (int t = 0; t < 20; ++t) {
      const Eigen::MatrixXcd a = random_herm(n, rng);
      const HermEig mine = jacobi_eig(a);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(a);
      Eigen::VectorXd expected = ref.eigenvalues().reverse();
      REQUIRE((mine.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-11 * std::max(1.0, a.norm()));
      const Eigen::MatrixXcd rec =
          mine.vectors * mine.eigenvalues.asDiagonal() * mine.vectors.adjoint();
      REQUIRE((rec - a).norm() < 1e-11 * std::max(1.0, a.norm()));
      REQUIRE((mine.vectors.adjoint() * mine.vectors -
               Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12 * n);
    }
  }
}

TEST_CASE("degenerate and trivial spectra") {
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(4, 4);
  CHECK(jacobi_eig(zero).eigenvalues.cwiseAbs().maxCoeff() == 0.0);

  Eigen::MatrixXd ident = Eigen::MatrixXd::Identity(5, 5);
  const SymEig e = jacobi_eig(ident);
  CHECK(e.eigenvalues.minCoeff() == doctest::Approx(1.0));
  CHECK(e.eigenvalues.maxCoeff() == doctest::Approx(1.0));

  // Repeated eigenvalue with an off-diagonal block.
  Eigen::MatrixXd m(3, 3);
  m << 2, 1, 0, 1, 2, 0, 0, 0, 3;
  const SymEig d = jacobi_eig(m);
  CHECK(d.eigenvalues(0) == doctest::Approx(3.0));
  CHECK(d.eigenvalues(1) == doctest::Approx(3.0));
  CHECK(d.eigenvalues(2) == doctest::Approx(1.0));
}

TEST_CASE("eigenvalues come out sorted decreasing") {
  SplitMix64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const SymEig e = jacobi_eig(random_sym(6, rng));
    for (int i = 1; i < 6; ++i) REQUIRE(e.eigenvalues(i) <= e.eigenvalues(i - 1));
  }
}

TEST_CASE("huge scale separation stays stable") {
  Eigen::MatrixXd m(2, 2);
  m << 1e10, 1e-8, 1e-8, -1e10;
  const SymEig e = jacobi_eig(m);
  CHECK(e.eigenvalues(0) == doctest::Approx(1e10));
  CHECK(e.eigenvalues(1) == doctest::Approx(-1e10));
}
