#pragma once

#include <vector>

#include "jmaj/element.hpp"

namespace jm {

// An ordered complete system of orthogonal primitive idempotents.
// Validated eagerly on construction: c_i o c_i = c_i, c_i o c_j = 0,
// sum c_i = e, tr(c_i) = 1, all within `tol`.
class JordanFrame {
 public:
  JordanFrame(const Algebra& alg, std::vector<Element> idempotents, double tol = 1e-8);

  static JordanFrame canonical(const Algebra& alg);

  const Algebra& algebra() const { return alg_; }
  int size() const { return static_cast<int>(idems_.size()); }
  const Element& operator[](int i) const { return idems_[static_cast<size_t>(i)]; }
  const std::vector<Element>& idempotents() const { return idems_; }

 private:
  Algebra alg_;
  std::vector<Element> idems_;
};

// Embeds an element of the k-th component of a direct sum into the sum
// (zeros elsewhere).
Element embed_component(const Algebra& sum_alg, size_t k, const Element& x);

// Orthonormal basis of the algebra under the trace inner product.
std::vector<Element> ambient_basis(const Algebra& alg);

}  // namespace jm
