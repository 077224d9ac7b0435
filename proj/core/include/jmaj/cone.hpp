#pragma once

#include <functional>

#include "jmaj/majorize.hpp"
#include "jmaj/means.hpp"

namespace jm {

// Scalar kernel for Loewner maps: g continuously differentiable on the
// open interval (lo, hi). `dd` optionally supplies a cancellation-free
// divided difference; otherwise a midpoint-derivative fallback is used
// near the diagonal.
struct LownerKernel {
  std::function<double(double)> g;
  std::function<double(double)> gprime;
  double lo;
  double hi;
  std::function<double(double, double)> dd;

  static LownerKernel exponential();
  static LownerKernel logarithm();
  static LownerKernel identity();
  static LownerKernel square();
};

// g^[1](t,s) = (g(t)-g(s))/(t-s), g'(t) on the diagonal.
double divided_difference(const LownerKernel& kernel, double t, double s);

// Koranyi derivative G'(a)x = sum g^[1](a_i,a_j) x_ij = A_a . x.
Element lowner_derivative(const LownerKernel& kernel, const Element& a, const Element& x);

struct EmiLocalCheck {
  MajorizationVerdict verdict;  // x majorized by P_c(G'(a)x), c = exp(-a/2)
  double norm_x = 0.0;
  double norm_y = 0.0;
  bool norm_ok = false;
  double kernel_agreement = 0.0;  // sinh-kernel route vs direct composition
};

EmiLocalCheck emi_local_check(const Element& a, const Element& x, double p);

struct PathSample {
  double t;
  Element point;
  Element derivative;
};

// Sampled path in the symmetric cone: strictly increasing partition,
// strictly positive points (validated on construction).
class ConePath {
 public:
  explicit ConePath(std::vector<PathSample> samples);

  const std::vector<PathSample>& samples() const { return samples_; }
  size_t size() const { return samples_.size(); }

 private:
  std::vector<PathSample> samples_;
};

// Composite-trapezoid length: integral of ||P_{gamma(t)^{-1/2}}(gamma'(t))||_p.
double path_length(const ConePath& path, double p);

// gamma(t) = exp((1-t) log u + t log v) sampled on a uniform partition.
ConePath geodesic_path(const Element& u, const Element& v, int samples);

// delta_2(u,v) = || log P_{u^{-1/2}}(v) ||_2.
double delta2(const Element& u, const Element& v);

// Operator commutation test: L_x L_y = L_y L_x on a spanning set.
bool operator_commute(const Element& x, const Element& y, double tol = 1e-8);

}  // namespace jm
