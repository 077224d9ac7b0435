#pragma once

#include "jmaj/frame.hpp"

namespace jm {

// Real symmetric matrix of Schur-product coefficients (correlation
// matrices, mean matrices, Loewner matrices). Symmetrized on construction.
class CoeffMatrix {
 public:
  explicit CoeffMatrix(const Eigen::MatrixXd& entries);

  static CoeffMatrix identity(int n);
  static CoeffMatrix ones(int n);

  int size() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& entries() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

// Kernels [ (a_i + a_j)/2 ] and [ a_i a_j ] of a spectrum vector; these are
// the Schur coefficients of L_a and P_a relative to a's frame.
CoeffMatrix arithmetic_kernel(const Eigen::VectorXd& spectrum);
CoeffMatrix product_kernel(const Eigen::VectorXd& spectrum);

// The decomposition x = sum_{i<=j} x_ij relative to a frame.
class PeirceBlocks {
 public:
  PeirceBlocks(JordanFrame frame, std::vector<Element> blocks);

  const JordanFrame& frame() const { return frame_; }
  int rank() const { return frame_.size(); }
  // Block x_ij; arguments in either order.
  const Element& block(int i, int j) const;
  // Reassembles sum of blocks.
  Element sum() const;

 private:
  JordanFrame frame_;
  std::vector<Element> blocks_;  // packed i <= j
};

// Projects x onto its Peirce blocks: x_ii = P_{e_i}(x),
// x_ij = 4 L_{e_i} L_{e_j} (x) for i < j.
PeirceBlocks peirce_blocks(const Element& x, const JordanFrame& frame);

// Schur (bullet) product A . x = sum_{i<=j} a_ij x_ij.
Element schur_product(const CoeffMatrix& a, const Element& x, const JordanFrame& frame);
Element schur_product(const CoeffMatrix& a, const PeirceBlocks& blocks);

// Lyapunov transformation L_a(x) = a o x.
Element lyapunov(const Element& a, const Element& x);

// Quadratic representation P_a(x) = 2 a o (a o x) - a^2 o x.
Element quad_rep(const Element& a, const Element& x);

// P_{u,v} = L_u L_v + L_v L_u - L_{u o v}; P_{u,u} = P_u.
Element quad_rep2(const Element& u, const Element& v, const Element& x);

// Diagonal part sum_i x_ii relative to the frame.
Element diag_part(const Element& x, const JordanFrame& frame);

// x = u + v + w with u in V(c,1), v in V(c,1/2), w in V(c,0).
struct IdempotentSplit {
  Element u, v, w;
};

// c must be a nonzero idempotent (c^2 = c within tol).
IdempotentSplit idempotent_split(const Element& x, const Element& c, double tol = 1e-8);

}  // namespace jm
