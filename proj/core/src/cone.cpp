#include "jmaj/cone.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jmaj/errors.hpp"

namespace jm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sinh(u)/u with series fallback against cancellation.
double sinhc(double u) {
  if (std::abs(u) <= 1e-4) {
    const double u2 = u * u;
    return 1.0 + u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sinh(u) / u;
}

}  // namespace

LownerKernel LownerKernel::exponential() {
  LownerKernel k;
  k.g = [](double t) { return std::exp(t); };
  k.gprime = [](double t) { return std::exp(t); };
  k.lo = -kInf;
  k.hi = kInf;
  k.dd = [](double t, double s) { return std::exp(0.5 * (t + s)) * sinhc(0.5 * (t - s)); };
  return k;
}

LownerKernel LownerKernel::logarithm() {
  LownerKernel k;
  k.g = [](double t) { return std::log(t); };
  k.gprime = [](double t) { return 1.0 / t; };
  k.lo = 0.0;
  k.hi = kInf;
  // log^[1](t,s) is the reciprocal of the logarithmic mean.
  k.dd = [](double t, double s) { return 1.0 / mean_value(MeanKind::Logarithmic, t, s); };
  return k;
}

LownerKernel LownerKernel::identity() {
  LownerKernel k;
  k.g = [](double t) { return t; };
  k.gprime = [](double) { return 1.0; };
  k.lo = -kInf;
  k.hi = kInf;
  k.dd = [](double, double) { return 1.0; };
  return k;
}

LownerKernel LownerKernel::square() {
  LownerKernel k;
  k.g = [](double t) { return t * t; };
  k.gprime = [](double t) { return 2.0 * t; };
  k.lo = -kInf;
  k.hi = kInf;
  k.dd = [](double t, double s) { return t + s; };
  return k;
}

double divided_difference(const LownerKernel& kernel, double t, double s) {
  if (!(t > kernel.lo && t < kernel.hi) || !(s > kernel.lo && s < kernel.hi))
    throw domain_error("divided_difference: argument outside the kernel interval");
  if (kernel.dd) return kernel.dd(t, s);
  if (std::abs(t - s) <= 1e-7 * std::max({1.0, std::abs(t), std::abs(s)}))
    return kernel.gprime(0.5 * (t + s));
  return (kernel.g(t) - kernel.g(s)) / (t - s);
}

Element lowner_derivative(const LownerKernel& kernel, const Element& a, const Element& x) {
  require_same_algebra(a, x, "lowner_derivative");
  const SpectralDecomposition d = spectral_decomposition(a);
  const int n = d.frame.size();
  Eigen::MatrixXd coeff(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      coeff(i, j) = coeff(j, i) = divided_difference(kernel, d.eigenvalues(i), d.eigenvalues(j));
  return schur_product(CoeffMatrix(coeff), x, d.frame);
}

EmiLocalCheck emi_local_check(const Element& a, const Element& x, double p) {
  require_same_algebra(a, x, "emi_local_check");
  const SpectralDecomposition d = spectral_decomposition(a);
  const int n = d.frame.size();

  // sinh-kernel route: b_ij = sinh((a_i - a_j)/2) / ((a_i - a_j)/2).
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      b(i, j) = b(j, i) = sinhc(0.5 * (d.eigenvalues(i) - d.eigenvalues(j)));
  const Element via_kernel = schur_product(CoeffMatrix(b), x, d.frame);

  // Direct composition route.
  const Element c = exp_map(a * -0.5);
  const Element y = quad_rep(c, lowner_derivative(LownerKernel::exponential(), a, x));

  EmiLocalCheck out;
  out.kernel_agreement = (via_kernel - y).norm2() / std::max(1.0, y.norm2());
  out.verdict = majorizes_elements(x, y);
  out.norm_x = p_norm(x, p);
  out.norm_y = p_norm(y, p);
  out.norm_ok = out.norm_x <= out.norm_y + 1e-8 * std::max(1.0, out.norm_y);
  return out;
}

ConePath::ConePath(std::vector<PathSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw usage_error("ConePath: need at least two samples");
  for (size_t i = 0; i < samples_.size(); ++i) {
    if (i > 0 && !(samples_[i].t > samples_[i - 1].t))
      throw usage_error("ConePath: partition must be strictly increasing");
    if (!is_positive(samples_[i].point))
      throw domain_error("ConePath: point at t = " + std::to_string(samples_[i].t) +
                         " is not in the cone");
  }
}

double path_length(const ConePath& path, double p) {
  double total = 0.0;
  double prev_t = 0.0, prev_f = 0.0;
  bool first = true;
  for (const PathSample& s : path.samples()) {
    const Element w = quad_rep(power_map(s.point, -0.5), s.derivative);
    const double f = p_norm(w, p);
    if (!first) total += 0.5 * (f + prev_f) * (s.t - prev_t);
    prev_t = s.t;
    prev_f = f;
    first = false;
  }
  return total;
}

ConePath geodesic_path(const Element& u, const Element& v, int samples) {
  require_same_algebra(u, v, "geodesic_path");
  if (samples < 2) throw usage_error("geodesic_path: need at least two samples");
  if (!is_positive(u) || !is_positive(v))
    throw domain_error("geodesic_path: endpoints must be positive");

  const Element lu = log_map(u), lv = log_map(v);
  const Element dir = lv - lu;
  const LownerKernel expk = LownerKernel::exponential();

  std::vector<PathSample> out;
  out.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    const Element phi = lu * (1.0 - t) + lv * t;
    out.push_back({t, exp_map(phi), lowner_derivative(expk, phi, dir)});
  }
  return ConePath(std::move(out));
}

double delta2(const Element& u, const Element& v) {
  require_same_algebra(u, v, "delta2");
  if (!is_positive(u) || !is_positive(v))
    throw domain_error("delta2: arguments must be positive");
  const Element m = quad_rep(power_map(u, -0.5), v);
  const Eigen::VectorXd ev = eigenvalues(m);
  double s = 0.0;
  for (int i = 0; i < ev.size(); ++i) {
    const double l = std::log(ev(i));
    s += l * l;
  }
  return std::sqrt(s);
}

bool operator_commute(const Element& x, const Element& y, double tol) {
  require_same_algebra(x, y, "operator_commute");
  const double scale = std::max(1.0, x.norm2() * y.norm2());
  for (const Element& z : ambient_basis(x.algebra())) {
    const Element c = jordan_product(x, jordan_product(y, z)) -
                      jordan_product(y, jordan_product(x, z));
    if (c.norm2() > tol * scale) return false;
  }
  return true;
}

}  // namespace jm
