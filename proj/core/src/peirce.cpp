#include "jmaj/peirce.hpp"

#include <cmath>
#include <string>

#include "jmaj/errors.hpp"

namespace jm {

namespace {

// Packed index for i <= j among the n(n+1)/2 upper blocks.
size_t packed_index(int i, int j, int n) {
  return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i - 1) / 2 +
         static_cast<size_t>(j - i);
}

}  // namespace

CoeffMatrix::CoeffMatrix(const Eigen::MatrixXd& entries) {
  if (entries.rows() != entries.cols()) throw usage_error("CoeffMatrix: matrix must be square");
  m_ = 0.5 * (entries + entries.transpose());
}

CoeffMatrix CoeffMatrix::identity(int n) { return CoeffMatrix(Eigen::MatrixXd::Identity(n, n)); }

CoeffMatrix CoeffMatrix::ones(int n) { return CoeffMatrix(Eigen::MatrixXd::Ones(n, n)); }

CoeffMatrix arithmetic_kernel(const Eigen::VectorXd& spectrum) {
  const int n = static_cast<int>(spectrum.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = 0.5 * (spectrum(i) + spectrum(j));
  return CoeffMatrix(m);
}

CoeffMatrix product_kernel(const Eigen::VectorXd& spectrum) {
  const int n = static_cast<int>(spectrum.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = spectrum(i) * spectrum(j);
  return CoeffMatrix(m);
}

PeirceBlocks::PeirceBlocks(JordanFrame frame, std::vector<Element> blocks)
    : frame_(std::move(frame)), blocks_(std::move(blocks)) {
  const int n = frame_.size();
  if (blocks_.size() != static_cast<size_t>(n) * (n + 1) / 2)
    throw usage_error("PeirceBlocks: wrong number of blocks");
}

const Element& PeirceBlocks::block(int i, int j) const {
  if (i > j) std::swap(i, j);
  const int n = rank();
  if (i < 0 || j >= n) throw usage_error("PeirceBlocks: index out of range");
  return blocks_[packed_index(i, j, n)];
}

Element PeirceBlocks::sum() const {
  Element s = Element::zero(frame_.algebra());
  for (const Element& b : blocks_) s += b;
  return s;
}

PeirceBlocks peirce_blocks(const Element& x, const JordanFrame& frame) {
  if (frame.algebra() != x.algebra())
    throw usage_error("peirce_blocks: frame belongs to a different algebra");
  const int n = frame.size();
  std::vector<Element> blocks;
  blocks.reserve(static_cast<size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (i == j) {
        blocks.push_back(quad_rep(frame[i], x));
      } else {
        blocks.push_back(4.0 * jordan_product(frame[i], jordan_product(frame[j], x)));
      }
    }
  }
  return PeirceBlocks(frame, std::move(blocks));
}

Element schur_product(const CoeffMatrix& a, const Element& x, const JordanFrame& frame) {
  return schur_product(a, peirce_blocks(x, frame));
}

Element schur_product(const CoeffMatrix& a, const PeirceBlocks& blocks) {
  const int n = blocks.rank();
  if (a.size() != n)
    throw usage_error("schur_product: coefficient matrix is " + std::to_string(a.size()) +
                      "x" + std::to_string(a.size()) + " but the algebra has rank " +
                      std::to_string(n));
  Element y = Element::zero(blocks.frame().algebra());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) y += blocks.block(i, j) * a(i, j);
  return y;
}

Element lyapunov(const Element& a, const Element& x) { return jordan_product(a, x); }

Element quad_rep(const Element& a, const Element& x) {
  require_same_algebra(a, x, "quad_rep");
  const Element ax = jordan_product(a, x);
  return 2.0 * jordan_product(a, ax) - jordan_product(jordan_product(a, a), x);
}

Element quad_rep2(const Element& u, const Element& v, const Element& x) {
  require_same_algebra(u, v, "quad_rep2");
  require_same_algebra(u, x, "quad_rep2");
  return jordan_product(u, jordan_product(v, x)) + jordan_product(v, jordan_product(u, x)) -
         jordan_product(jordan_product(u, v), x);
}

Element diag_part(const Element& x, const JordanFrame& frame) {
  if (frame.algebra() != x.algebra())
    throw usage_error("diag_part: frame belongs to a different algebra");
  Element d = Element::zero(x.algebra());
  for (int i = 0; i < frame.size(); ++i) d += quad_rep(frame[i], x);
  return d;
}

IdempotentSplit idempotent_split(const Element& x, const Element& c, double tol) {
  require_same_algebra(x, c, "idempotent_split");
  const double scale = std::max(1.0, c.norm2());
  if (c.norm2() <= tol) throw usage_error("idempotent_split: c is zero");
  if ((jordan_product(c, c) - c).norm2() > tol * scale)
    throw usage_error("idempotent_split: c is not idempotent");
  const Element u = quad_rep(c, x);
  const Element w = quad_rep(unit(x.algebra()) - c, x);
  return {u, x - u - w, w};
}

}  // namespace jm
