#pragma once

#include <Eigen/Dense>

namespace jm {

// Dense symmetric/Hermitian eigensolvers built on cyclic Jacobi sweeps.
// Convergence: off-diagonal Frobenius norm <= 1e-12 * ||input||_F.
// Throws numeric_error if 40 sweeps do not converge.
//
// Eigenvalues are returned in decreasing order; the i-th column of
// `vectors` is a unit eigenvector for eigenvalues[i].

struct SymEig {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd vectors;
};

struct HermEig {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd vectors;
};

SymEig jacobi_eig(const Eigen::MatrixXd& a);
HermEig jacobi_eig(const Eigen::MatrixXcd& a);

}  // namespace jm
