#include "jmaj/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "jmaj/eig.hpp"
#include "jmaj/errors.hpp"

namespace jm {

namespace {

// Spin degeneracy cutoff for the frame direction.
constexpr double kSpinDegenerate = 1e-14;

Element renormalize_idempotent(Element c) {
  const double t = trace(c);
  if (std::abs(t - 1.0) > 1e-12 && t != 0.0) c = c * (1.0 / t);
  return c;
}

Eigen::VectorXd spin_eigenvalues(const Element& x) {
  const double r = x.spin_bar().norm();
  Eigen::VectorXd ev(2);
  ev(0) = x.spin0() + r;
  ev(1) = x.spin0() - r;
  return ev;
}

void merge_sorted_desc(std::vector<std::pair<double, Element>>& items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
}

}  // namespace

Element SpectralDecomposition::synthesize() const {
  Element x = Element::zero(frame.algebra());
  for (int i = 0; i < frame.size(); ++i) x += frame[i] * eigenvalues(i);
  return x;
}

SpectralDecomposition spectral_decomposition(const Element& x) {
  const Algebra& alg = x.algebra();
  switch (alg.kind()) {
    case AlgebraKind::RealSym: {
      SymEig e = jacobi_eig(x.sym());
      std::vector<Element> idems;
      idems.reserve(alg.rank());
      for (int i = 0; i < alg.rank(); ++i) {
        Eigen::MatrixXd c = e.vectors.col(i) * e.vectors.col(i).transpose();
        idems.push_back(renormalize_idempotent(Element::from_sym(alg, c)));
      }
      return {e.eigenvalues, JordanFrame(alg, std::move(idems))};
    }
    case AlgebraKind::ComplexHerm: {
      HermEig e = jacobi_eig(x.herm());
      std::vector<Element> idems;
      idems.reserve(alg.rank());
      for (int i = 0; i < alg.rank(); ++i) {
        Eigen::MatrixXcd c = e.vectors.col(i) * e.vectors.col(i).adjoint();
        idems.push_back(renormalize_idempotent(Element::from_herm(alg, c)));
      }
      return {e.eigenvalues, JordanFrame(alg, std::move(idems))};
    }
    case AlgebraKind::Spin: {
      const double r = x.spin_bar().norm();
      Eigen::VectorXd dir;
      if (r <= kSpinDegenerate * std::max(1.0, std::abs(x.spin0()))) {
        dir = Eigen::VectorXd::Zero(alg.spin_dim() - 1);
        dir(0) = 1.0;
      } else {
        dir = x.spin_bar() / r;
      }
      std::vector<Element> idems;
      idems.push_back(Element::from_spin(alg, 0.5, 0.5 * dir));
      idems.push_back(Element::from_spin(alg, 0.5, -0.5 * dir));
      return {spin_eigenvalues(x), JordanFrame(alg, std::move(idems))};
    }
    case AlgebraKind::DirectSum: {
      std::vector<std::pair<double, Element>> items;
      for (size_t k = 0; k < x.parts().size(); ++k) {
        SpectralDecomposition sub = spectral_decomposition(x.parts()[k]);
        for (int i = 0; i < sub.frame.size(); ++i)
          items.emplace_back(sub.eigenvalues(i), embed_component(alg, k, sub.frame[i]));
      }
      merge_sorted_desc(items);
      Eigen::VectorXd ev(alg.rank());
      std::vector<Element> idems;
      idems.reserve(items.size());
      for (size_t i = 0; i < items.size(); ++i) {
        ev(static_cast<int>(i)) = items[i].first;
        idems.push_back(std::move(items[i].second));
      }
      return {ev, JordanFrame(alg, std::move(idems))};
    }
  }
  throw usage_error("spectral_decomposition: unknown algebra kind");
}

Eigen::VectorXd eigenvalues(const Element& x) {
  const Algebra& alg = x.algebra();
  switch (alg.kind()) {
    case AlgebraKind::RealSym:
      return jacobi_eig(x.sym()).eigenvalues;
    case AlgebraKind::ComplexHerm:
      return jacobi_eig(x.herm()).eigenvalues;
    case AlgebraKind::Spin:
      return spin_eigenvalues(x);
    case AlgebraKind::DirectSum: {
      Eigen::VectorXd ev(alg.rank());
      int at = 0;
      for (const Element& p : x.parts()) {
        Eigen::VectorXd sub = eigenvalues(p);
        ev.segment(at, sub.size()) = sub;
        at += static_cast<int>(sub.size());
      }
      std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
      return ev;
    }
  }
  throw usage_error("eigenvalues: unknown algebra kind");
}

Element spectral_map(const Element& x, const std::function<double(double)>& g, double lo,
                     double hi) {
  SpectralDecomposition d = spectral_decomposition(x);
  Element y = Element::zero(x.algebra());
  for (int i = 0; i < d.frame.size(); ++i) {
    const double li = d.eigenvalues(i);
    if (li < lo || li > hi)
      throw domain_error("spectral_map: eigenvalue " + std::to_string(li) +
                         " outside domain [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    y += d.frame[i] * g(li);
  }
  return y;
}

namespace {

double spectral_atol(const Element& x) { return 1e-12 * std::max(1.0, x.norm2()); }

Element map_with_clamp(const Element& x, double atol, const std::function<double(double)>& g,
                       const char* name) {
  SpectralDecomposition d = spectral_decomposition(x);
  Element y = Element::zero(x.algebra());
  for (int i = 0; i < d.frame.size(); ++i) {
    double li = d.eigenvalues(i);
    if (li < -atol)
      throw domain_error(std::string(name) + ": negative eigenvalue " + std::to_string(li));
    if (li < 0.0) li = 0.0;
    y += d.frame[i] * g(li);
  }
  return y;
}

}  // namespace

Element sqrt_map(const Element& x) {
  return map_with_clamp(x, spectral_atol(x), [](double t) { return std::sqrt(t); }, "sqrt_map");
}

Element abs_map(const Element& x) {
  return spectral_map(x, [](double t) { return std::abs(t); });
}

Element inverse_map(const Element& x) {
  const double atol = spectral_atol(x);
  SpectralDecomposition d = spectral_decomposition(x);
  Element y = Element::zero(x.algebra());
  for (int i = 0; i < d.frame.size(); ++i) {
    const double li = d.eigenvalues(i);
    if (std::abs(li) <= atol)
      throw domain_error("inverse_map: eigenvalue " + std::to_string(li) + " too close to zero");
    y += d.frame[i] * (1.0 / li);
  }
  return y;
}

Element power_map(const Element& x, double t) {
  const bool integral = (t == std::floor(t));
  if (integral && t >= 0.0)
    return spectral_map(x, [t](double s) { return std::pow(s, t); });
  const double atol = spectral_atol(x);
  if (t < 0.0) {
    SpectralDecomposition d = spectral_decomposition(x);
    Element y = Element::zero(x.algebra());
    for (int i = 0; i < d.frame.size(); ++i) {
      const double li = d.eigenvalues(i);
      if (li <= atol)
        throw domain_error("power_map: nonpositive eigenvalue " + std::to_string(li) +
                           " with negative exponent");
      y += d.frame[i] * std::pow(li, t);
    }
    return y;
  }
  return map_with_clamp(x, atol, [t](double s) { return std::pow(s, t); }, "power_map");
}

Element exp_map(const Element& x) {
  return spectral_map(x, [](double t) { return std::exp(t); });
}

Element log_map(const Element& x) {
  const double atol = spectral_atol(x);
  SpectralDecomposition d = spectral_decomposition(x);
  Element y = Element::zero(x.algebra());
  for (int i = 0; i < d.frame.size(); ++i) {
    const double li = d.eigenvalues(i);
    if (li <= atol)
      throw domain_error("log_map: nonpositive eigenvalue " + std::to_string(li));
    y += d.frame[i] * std::log(li);
  }
  return y;
}

double determinant(const Element& x) {
  Eigen::VectorXd ev = eigenvalues(x);
  double d = 1.0;
  for (int i = 0; i < ev.size(); ++i) d *= ev(i);
  return d;
}

double p_norm(const Element& x, double p) {
  if (p < 1.0) throw usage_error("p_norm: p must be >= 1");
  Eigen::VectorXd ev = eigenvalues(x);
  if (std::isinf(p)) return ev.cwiseAbs().maxCoeff();
  double s = 0.0;
  for (int i = 0; i < ev.size(); ++i) s += std::pow(std::abs(ev(i)), p);
  return std::pow(s, 1.0 / p);
}

double lambda_max(const Element& x) { return eigenvalues(x)(0); }

double lambda_min(const Element& x) {
  Eigen::VectorXd ev = eigenvalues(x);
  return ev(ev.size() - 1);
}

double sum_top_k(const Element& x, int k) {
  Eigen::VectorXd ev = eigenvalues(x);
  if (k < 1 || k > ev.size()) throw usage_error("sum_top_k: k out of range");
  return ev.head(k).sum();
}

namespace {
double psd_tol(const Element& x, double tol) {
  return tol >= 0.0 ? tol : 1e-9 * std::max(1.0, x.norm2());
}
}  // namespace

bool is_psd_element(const Element& x, double tol) { return lambda_min(x) >= -psd_tol(x, tol); }

bool is_positive(const Element& x, double tol) { return lambda_min(x) > psd_tol(x, tol); }

}  // namespace jm
