#include "jmaj/element.hpp"

#include <cmath>

#include "jmaj/errors.hpp"

namespace jm {

void require_same_algebra(const Element& x, const Element& y, const char* op) {
  if (x.algebra() != y.algebra())
    throw usage_error(std::string(op) + ": algebra mismatch (" + x.algebra().to_string() +
                      " vs " + y.algebra().to_string() + ")");
}

Element Element::from_sym(const Algebra& alg, const Eigen::MatrixXd& m) {
  if (alg.kind() != AlgebraKind::RealSym) throw usage_error("from_sym: algebra is not RealSym");
  const int n = alg.matrix_size();
  if (m.rows() != n || m.cols() != n) throw usage_error("from_sym: wrong matrix size");
  Element x(alg);
  x.sym_ = 0.5 * (m + m.transpose());
  return x;
}

Element Element::from_herm(const Algebra& alg, const Eigen::MatrixXcd& m) {
  if (alg.kind() != AlgebraKind::ComplexHerm)
    throw usage_error("from_herm: algebra is not ComplexHerm");
  const int n = alg.matrix_size();
  if (m.rows() != n || m.cols() != n) throw usage_error("from_herm: wrong matrix size");
  Element x(alg);
  x.herm_ = 0.5 * (m + m.adjoint());
  return x;
}

Element Element::from_spin(const Algebra& alg, double x0, const Eigen::VectorXd& xbar) {
  if (alg.kind() != AlgebraKind::Spin) throw usage_error("from_spin: algebra is not Spin");
  if (xbar.size() != alg.spin_dim() - 1) throw usage_error("from_spin: wrong vector length");
  Element x(alg);
  x.spin0_ = x0;
  x.spin_bar_ = xbar;
  return x;
}

Element Element::from_parts(const Algebra& alg, std::vector<Element> parts) {
  if (alg.kind() != AlgebraKind::DirectSum) throw usage_error("from_parts: algebra is not DirectSum");
  const auto& specs = alg.parts();
  if (parts.size() != specs.size()) throw usage_error("from_parts: wrong component count");
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i].algebra() != specs[i]) throw usage_error("from_parts: component algebra mismatch");
  Element x(alg);
  x.parts_ = std::move(parts);
  return x;
}

Element Element::zero(const Algebra& alg) {
  switch (alg.kind()) {
    case AlgebraKind::RealSym:
      return from_sym(alg, Eigen::MatrixXd::Zero(alg.rank(), alg.rank()));
    case AlgebraKind::ComplexHerm:
      return from_herm(alg, Eigen::MatrixXcd::Zero(alg.rank(), alg.rank()));
    case AlgebraKind::Spin:
      return from_spin(alg, 0.0, Eigen::VectorXd::Zero(alg.spin_dim() - 1));
    case AlgebraKind::DirectSum: {
      std::vector<Element> ps;
      ps.reserve(alg.parts().size());
      for (const Algebra& p : alg.parts()) ps.push_back(zero(p));
      return from_parts(alg, std::move(ps));
    }
  }
  throw usage_error("zero: unknown algebra kind");
}

const Eigen::MatrixXd& Element::sym() const {
  if (alg_.kind() != AlgebraKind::RealSym) throw usage_error("sym(): not a RealSym element");
  return sym_;
}

const Eigen::MatrixXcd& Element::herm() const {
  if (alg_.kind() != AlgebraKind::ComplexHerm) throw usage_error("herm(): not a ComplexHerm element");
  return herm_;
}

double Element::spin0() const {
  if (alg_.kind() != AlgebraKind::Spin) throw usage_error("spin0(): not a Spin element");
  return spin0_;
}

const Eigen::VectorXd& Element::spin_bar() const {
  if (alg_.kind() != AlgebraKind::Spin) throw usage_error("spin_bar(): not a Spin element");
  return spin_bar_;
}

const std::vector<Element>& Element::parts() const {
  if (alg_.kind() != AlgebraKind::DirectSum) throw usage_error("parts(): not a DirectSum element");
  return parts_;
}

std::vector<double> Element::flat() const {
  std::vector<double> out;
  switch (alg_.kind()) {
    case AlgebraKind::RealSym: {
      out.reserve(sym_.size());
      for (int i = 0; i < sym_.rows(); ++i)
        for (int j = 0; j < sym_.cols(); ++j) out.push_back(sym_(i, j));
      break;
    }
    case AlgebraKind::ComplexHerm: {
      out.reserve(2 * herm_.size());
      for (int i = 0; i < herm_.rows(); ++i)
        for (int j = 0; j < herm_.cols(); ++j) {
          out.push_back(herm_(i, j).real());
          out.push_back(herm_(i, j).imag());
        }
      break;
    }
    case AlgebraKind::Spin: {
      out.reserve(1 + spin_bar_.size());
      out.push_back(spin0_);
      for (int i = 0; i < spin_bar_.size(); ++i) out.push_back(spin_bar_(i));
      break;
    }
    case AlgebraKind::DirectSum: {
      for (const Element& p : parts_) {
        auto sub = p.flat();
        out.insert(out.end(), sub.begin(), sub.end());
      }
      break;
    }
  }
  return out;
}

namespace {

size_t flat_len(const Algebra& alg) {
  switch (alg.kind()) {
    case AlgebraKind::RealSym:
      return static_cast<size_t>(alg.rank()) * alg.rank();
    case AlgebraKind::ComplexHerm:
      return 2 * static_cast<size_t>(alg.rank()) * alg.rank();
    case AlgebraKind::Spin:
      return static_cast<size_t>(alg.spin_dim());
    case AlgebraKind::DirectSum: {
      size_t s = 0;
      for (const Algebra& p : alg.parts()) s += flat_len(p);
      return s;
    }
  }
  return 0;
}

Element from_flat_span(const Algebra& alg, const double* c, size_t len) {
  if (len != flat_len(alg)) throw usage_error("from_flat: bad coordinate length");
  switch (alg.kind()) {
    case AlgebraKind::RealSym: {
      const int n = alg.rank();
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = c[i * n + j];
      return Element::from_sym(alg, m);
    }
    case AlgebraKind::ComplexHerm: {
      const int n = alg.rank();
      Eigen::MatrixXcd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m(i, j) = std::complex<double>(c[2 * (i * n + j)], c[2 * (i * n + j) + 1]);
      return Element::from_herm(alg, m);
    }
    case AlgebraKind::Spin: {
      const int d = alg.spin_dim();
      Eigen::VectorXd bar(d - 1);
      for (int i = 0; i < d - 1; ++i) bar(i) = c[1 + i];
      return Element::from_spin(alg, c[0], bar);
    }
    case AlgebraKind::DirectSum: {
      std::vector<Element> ps;
      size_t off = 0;
      for (const Algebra& p : alg.parts()) {
        const size_t need = flat_len(p);
        ps.push_back(from_flat_span(p, c + off, need));
        off += need;
      }
      return Element::from_parts(alg, std::move(ps));
    }
  }
  throw usage_error("from_flat: unknown algebra kind");
}

}  // namespace

Element Element::from_flat(const Algebra& alg, const std::vector<double>& coords) {
  return from_flat_span(alg, coords.data(), coords.size());
}

Element Element::operator+(const Element& y) const {
  require_same_algebra(*this, y, "operator+");
  Element r(alg_);
  switch (alg_.kind()) {
    case AlgebraKind::RealSym:
      r.sym_ = sym_ + y.sym_;
      break;
    case AlgebraKind::ComplexHerm:
      r.herm_ = herm_ + y.herm_;
      break;
    case AlgebraKind::Spin:
      r.spin0_ = spin0_ + y.spin0_;
      r.spin_bar_ = spin_bar_ + y.spin_bar_;
      break;
    case AlgebraKind::DirectSum:
      r.parts_.reserve(parts_.size());
      for (size_t i = 0; i < parts_.size(); ++i) r.parts_.push_back(parts_[i] + y.parts_[i]);
      break;
  }
  return r;
}

Element Element::operator-(const Element& y) const { return *this + (y * -1.0); }

Element Element::operator-() const { return *this * -1.0; }

Element Element::operator*(double s) const {
  Element r(alg_);
  switch (alg_.kind()) {
    case AlgebraKind::RealSym:
      r.sym_ = s * sym_;
      break;
    case AlgebraKind::ComplexHerm:
      r.herm_ = s * herm_;
      break;
    case AlgebraKind::Spin:
      r.spin0_ = s * spin0_;
      r.spin_bar_ = s * spin_bar_;
      break;
    case AlgebraKind::DirectSum:
      r.parts_.reserve(parts_.size());
      for (const Element& p : parts_) r.parts_.push_back(p * s);
      break;
  }
  return r;
}

Element& Element::operator+=(const Element& y) {
  *this = *this + y;
  return *this;
}

double Element::norm2() const { return std::sqrt(std::max(0.0, inner(*this, *this))); }

Element jordan_product(const Element& x, const Element& y) {
  require_same_algebra(x, y, "jordan_product");
  const Algebra& alg = x.algebra();
  switch (alg.kind()) {
    case AlgebraKind::RealSym:
      return Element::from_sym(alg, 0.5 * (x.sym() * y.sym() + y.sym() * x.sym()));
    case AlgebraKind::ComplexHerm:
      return Element::from_herm(alg, 0.5 * (x.herm() * y.herm() + y.herm() * x.herm()));
    case AlgebraKind::Spin: {
      const double x0 = x.spin0(), y0 = y.spin0();
      return Element::from_spin(alg, x0 * y0 + x.spin_bar().dot(y.spin_bar()),
                                x0 * y.spin_bar() + y0 * x.spin_bar());
    }
    case AlgebraKind::DirectSum: {
      std::vector<Element> ps;
      ps.reserve(x.parts().size());
      for (size_t i = 0; i < x.parts().size(); ++i)
        ps.push_back(jordan_product(x.parts()[i], y.parts()[i]));
      return Element::from_parts(alg, std::move(ps));
    }
  }
  throw usage_error("jordan_product: unknown algebra kind");
}

Element unit(const Algebra& alg) {
  switch (alg.kind()) {
    case AlgebraKind::RealSym:
      return Element::from_sym(alg, Eigen::MatrixXd::Identity(alg.rank(), alg.rank()));
    case AlgebraKind::ComplexHerm:
      return Element::from_herm(alg, Eigen::MatrixXcd::Identity(alg.rank(), alg.rank()));
    case AlgebraKind::Spin:
      return Element::from_spin(alg, 1.0, Eigen::VectorXd::Zero(alg.spin_dim() - 1));
    case AlgebraKind::DirectSum: {
      std::vector<Element> ps;
      ps.reserve(alg.parts().size());
      for (const Algebra& p : alg.parts()) ps.push_back(unit(p));
      return Element::from_parts(alg, std::move(ps));
    }
  }
  throw usage_error("unit: unknown algebra kind");
}

double inner(const Element& x, const Element& y) {
  require_same_algebra(x, y, "inner");
  switch (x.algebra().kind()) {
    case AlgebraKind::RealSym:
      return x.sym().cwiseProduct(y.sym()).sum();
    case AlgebraKind::ComplexHerm:
      // tr(XY) for Hermitian X, Y is real.
      return x.herm().conjugate().cwiseProduct(y.herm()).sum().real();
    case AlgebraKind::Spin:
      return 2.0 * (x.spin0() * y.spin0() + x.spin_bar().dot(y.spin_bar()));
    case AlgebraKind::DirectSum: {
      double s = 0.0;
      for (size_t i = 0; i < x.parts().size(); ++i) s += inner(x.parts()[i], y.parts()[i]);
      return s;
    }
  }
  throw usage_error("inner: unknown algebra kind");
}

double trace(const Element& x) {
  switch (x.algebra().kind()) {
    case AlgebraKind::RealSym:
      return x.sym().trace();
    case AlgebraKind::ComplexHerm:
      return x.herm().trace().real();
    case AlgebraKind::Spin:
      return 2.0 * x.spin0();
    case AlgebraKind::DirectSum: {
      double s = 0.0;
      for (const Element& p : x.parts()) s += trace(p);
      return s;
    }
  }
  throw usage_error("trace: unknown algebra kind");
}

}  // namespace jm
