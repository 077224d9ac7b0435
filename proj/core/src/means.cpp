#include "jmaj/means.hpp"

#include <cmath>

#include "jmaj/errors.hpp"
#include "jmaj/quadrature.hpp"

namespace jm {

const char* mean_name(MeanKind kind) {
  switch (kind) {
    case MeanKind::Arithmetic:
      return "arithmetic";
    case MeanKind::Geometric:
      return "geometric";
    case MeanKind::Harmonic:
      return "harmonic";
    case MeanKind::Logarithmic:
      return "logarithmic";
  }
  return "?";
}

// The logarithmic mean reads (t-s)/(log t - log s), interpreted as t at
// t = s; all four means agree to O((t-s)^2) near the diagonal.
double mean_value(MeanKind kind, double t, double s) {
  if (t <= 0.0 || s <= 0.0) throw domain_error("mean_value: arguments must be positive");
  switch (kind) {
    case MeanKind::Arithmetic:
      return 0.5 * (t + s);
    case MeanKind::Geometric:
      return std::sqrt(t) * std::sqrt(s);
    case MeanKind::Harmonic:
      return 2.0 / (1.0 / t + 1.0 / s);
    case MeanKind::Logarithmic: {
      // (hi-lo)/log(hi/lo) through log1p: the naive log difference loses
      // enough precision for gaps below ~1e-5 to break the G <= L <= A
      // ordering.
      const double hi = std::max(t, s), lo = std::min(t, s);
      const double diff = hi - lo;
      if (diff <= 1e-14 * hi) return 0.5 * (hi + lo);
      return diff / std::log1p(diff / lo);
    }
  }
  throw usage_error("mean_value: unknown mean kind");
}

CoeffMatrix mean_matrix(MeanKind kind, const Eigen::VectorXd& spectrum) {
  const int n = static_cast<int>(spectrum.size());
  for (int i = 0; i < n; ++i)
    if (spectrum(i) <= 0.0) throw domain_error("mean_matrix: spectrum must be positive");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = spectrum(i);
    for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = mean_value(kind, spectrum(i), spectrum(j));
  }
  return CoeffMatrix(m);
}

Element mean_transform(MeanKind kind, const Element& a, const Element& x) {
  require_same_algebra(a, x, "mean_transform");
  if (!is_positive(a)) throw domain_error("mean_transform: a must be positive");
  const SpectralDecomposition d = spectral_decomposition(a);
  return schur_product(mean_matrix(kind, d.eigenvalues), x, d.frame);
}

Element log_mean_integral(const Element& a, const Element& x, int nodes) {
  require_same_algebra(a, x, "log_mean_integral");
  if (nodes < 2) throw usage_error("log_mean_integral: nodes must be >= 2");
  if (!is_positive(a)) throw domain_error("log_mean_integral: a must be positive");
  Element acc = Element::zero(x.algebra());
  for (const QuadNode& node : gauss_legendre_01(nodes)) {
    const Element at = power_map(a, node.t);
    const Element a1t = power_map(a, 1.0 - node.t);
    acc += quad_rep2(at, a1t, x) * node.w;
  }
  return acc;
}

std::vector<NamedVerdict> check_mean_chain(const Element& a, const Element& x, double t) {
  require_same_algebra(a, x, "check_mean_chain");
  if (t < 0.0 || t > 1.0) throw usage_error("check_mean_chain: t must lie in [0,1]");
  if (!is_positive(a)) throw domain_error("check_mean_chain: a must be positive");

  const Element h = mean_transform(MeanKind::Harmonic, a, x);
  const Element g = mean_transform(MeanKind::Geometric, a, x);
  const Element l = mean_transform(MeanKind::Logarithmic, a, x);
  const Element m = mean_transform(MeanKind::Arithmetic, a, x);
  const Element quad = log_mean_integral(a, x);
  const Element att = quad_rep2(power_map(a, t), power_map(a, 1.0 - t), x);

  std::vector<NamedVerdict> out;
  out.push_back({"harmonic<geometric", majorizes_elements(h, g)});
  out.push_back({"geometric<logarithmic", majorizes_elements(g, l)});
  out.push_back({"logarithmic<arithmetic", majorizes_elements(l, m)});
  out.push_back({"geometric<quadrature", majorizes_elements(g, quad)});
  out.push_back({"quadrature<arithmetic", majorizes_elements(quad, m)});
  out.push_back({"geometric<split_t", majorizes_elements(g, att)});
  out.push_back({"split_t<arithmetic", majorizes_elements(att, m)});
  return out;
}

}  // namespace jm
