#pragma once

#include <Eigen/Dense>
#include <vector>

#include "jmaj/algebra.hpp"

namespace jm {

// A point of a Euclidean Jordan algebra in native coordinates.
//
// Matrix coordinates are symmetrized/hermitized on construction, so
// sym() == sym().transpose() holds exactly. Values are immutable in
// practice: all operations return fresh elements.
class Element {
 public:
  static Element from_sym(const Algebra& alg, const Eigen::MatrixXd& m);
  static Element from_herm(const Algebra& alg, const Eigen::MatrixXcd& m);
  static Element from_spin(const Algebra& alg, double x0, const Eigen::VectorXd& xbar);
  static Element from_parts(const Algebra& alg, std::vector<Element> parts);
  static Element zero(const Algebra& alg);

  const Algebra& algebra() const { return alg_; }

  const Eigen::MatrixXd& sym() const;
  const Eigen::MatrixXcd& herm() const;
  double spin0() const;
  const Eigen::VectorXd& spin_bar() const;
  const std::vector<Element>& parts() const;

  // Flat coordinate view used by serialization and digests: row-major,
  // complex entries interleaved re/im, direct sums concatenated.
  std::vector<double> flat() const;
  static Element from_flat(const Algebra& alg, const std::vector<double>& coords);

  Element operator+(const Element& y) const;
  Element operator-(const Element& y) const;
  Element operator-() const;
  Element operator*(double s) const;
  Element& operator+=(const Element& y);

  // Trace-form norm sqrt(<x,x>); equals the spectral 2-norm.
  double norm2() const;

 private:
  explicit Element(const Algebra& alg) : alg_(alg) {}

  Algebra alg_;
  Eigen::MatrixXd sym_;
  Eigen::MatrixXcd herm_;
  double spin0_ = 0.0;
  Eigen::VectorXd spin_bar_;
  std::vector<Element> parts_;
};

inline Element operator*(double s, const Element& x) { return x * s; }

// Jordan product x o y. Same-algebra operands only.
Element jordan_product(const Element& x, const Element& y);

// Unit element e of the algebra.
Element unit(const Algebra& alg);

// Trace inner product <x,y> = tr(x o y).
double inner(const Element& x, const Element& y);

// Jordan trace: sum of eigenvalues. Equals <x,e>.
double trace(const Element& x);

void require_same_algebra(const Element& x, const Element& y, const char* op);

}  // namespace jm
