#include "jmaj/frame.hpp"

#include <cmath>
#include <string>

#include "jmaj/errors.hpp"

namespace jm {

JordanFrame::JordanFrame(const Algebra& alg, std::vector<Element> idempotents, double tol)
    : alg_(alg), idems_(std::move(idempotents)) {
  const int n = alg_.rank();
  if (static_cast<int>(idems_.size()) != n)
    throw usage_error("JordanFrame: expected " + std::to_string(n) + " idempotents, got " +
                      std::to_string(idems_.size()));
  for (const Element& c : idems_)
    if (c.algebra() != alg_) throw usage_error("JordanFrame: idempotent from a different algebra");

  Element sum = Element::zero(alg_);
  for (int i = 0; i < n; ++i) {
    const Element& ci = idems_[static_cast<size_t>(i)];
    if ((jordan_product(ci, ci) - ci).norm2() > tol)
      throw usage_error("JordanFrame: element " + std::to_string(i) + " is not idempotent");
    if (std::abs(trace(ci) - 1.0) > tol)
      throw usage_error("JordanFrame: element " + std::to_string(i) + " is not primitive (trace != 1)");
    for (int j = i + 1; j < n; ++j) {
      if (jordan_product(ci, idems_[static_cast<size_t>(j)]).norm2() > tol)
        throw usage_error("JordanFrame: idempotents " + std::to_string(i) + "," +
                          std::to_string(j) + " are not orthogonal");
    }
    sum += ci;
  }
  if ((sum - unit(alg_)).norm2() > tol * n)
    throw usage_error("JordanFrame: idempotents do not sum to the unit");
}

JordanFrame JordanFrame::canonical(const Algebra& alg) {
  std::vector<Element> idems;
  switch (alg.kind()) {
    case AlgebraKind::RealSym: {
      const int n = alg.rank();
      for (int i = 0; i < n; ++i) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        m(i, i) = 1.0;
        idems.push_back(Element::from_sym(alg, m));
      }
      break;
    }
    case AlgebraKind::ComplexHerm: {
      const int n = alg.rank();
      for (int i = 0; i < n; ++i) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
        m(i, i) = 1.0;
        idems.push_back(Element::from_herm(alg, m));
      }
      break;
    }
    case AlgebraKind::Spin: {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(alg.spin_dim() - 1);
      u(0) = 1.0;
      idems.push_back(Element::from_spin(alg, 0.5, 0.5 * u));
      idems.push_back(Element::from_spin(alg, 0.5, -0.5 * u));
      break;
    }
    case AlgebraKind::DirectSum: {
      for (size_t k = 0; k < alg.parts().size(); ++k) {
        JordanFrame sub = canonical(alg.parts()[k]);
        for (const Element& c : sub.idempotents()) idems.push_back(embed_component(alg, k, c));
      }
      break;
    }
  }
  return JordanFrame(alg, std::move(idems));
}

Element embed_component(const Algebra& sum_alg, size_t k, const Element& x) {
  if (sum_alg.kind() != AlgebraKind::DirectSum)
    throw usage_error("embed_component: not a direct sum");
  const auto& parts = sum_alg.parts();
  if (k >= parts.size()) throw usage_error("embed_component: component index out of range");
  if (x.algebra() != parts[k]) throw usage_error("embed_component: component algebra mismatch");
  std::vector<Element> ps;
  ps.reserve(parts.size());
  for (size_t i = 0; i < parts.size(); ++i)
    ps.push_back(i == k ? x : Element::zero(parts[i]));
  return Element::from_parts(sum_alg, std::move(ps));
}

std::vector<Element> ambient_basis(const Algebra& alg) {
  std::vector<Element> basis;
  switch (alg.kind()) {
    case AlgebraKind::RealSym: {
      const int n = alg.rank();
      const double r = 1.0 / std::sqrt(2.0);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
          if (i == j)
            m(i, i) = 1.0;
          else
            m(i, j) = m(j, i) = r;
          basis.push_back(Element::from_sym(alg, m));
        }
      break;
    }
    case AlgebraKind::ComplexHerm: {
      const int n = alg.rank();
      const double r = 1.0 / std::sqrt(2.0);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          if (i == j) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
            m(i, i) = 1.0;
            basis.push_back(Element::from_herm(alg, m));
          } else {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
            m(i, j) = m(j, i) = r;
            basis.push_back(Element::from_herm(alg, m));
            m.setZero();
            m(i, j) = std::complex<double>(0.0, r);
            m(j, i) = std::complex<double>(0.0, -r);
            basis.push_back(Element::from_herm(alg, m));
          }
        }
      break;
    }
    case AlgebraKind::Spin: {
      const int d = alg.spin_dim();
      const double r = 1.0 / std::sqrt(2.0);
      basis.push_back(Element::from_spin(alg, r, Eigen::VectorXd::Zero(d - 1)));
      for (int i = 0; i < d - 1; ++i) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(d - 1);
        v(i) = r;
        basis.push_back(Element::from_spin(alg, 0.0, v));
      }
      break;
    }
    case AlgebraKind::DirectSum: {
      for (size_t k = 0; k < alg.parts().size(); ++k)
        for (const Element& b : ambient_basis(alg.parts()[k]))
          basis.push_back(embed_component(alg, k, b));
      break;
    }
  }
  return basis;
}

}  // namespace jm
