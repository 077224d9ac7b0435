#pragma once

#include <vector>

#include "jmaj/majorize.hpp"
#include "jmaj/peirce.hpp"

namespace jm {

enum class MeanKind { Arithmetic, Geometric, Harmonic, Logarithmic };

const char* mean_name(MeanKind kind);

// Scalar mean m(t, s) for t, s > 0. The logarithmic mean switches to a
// series near t = s, where the quotient form loses all precision.
double mean_value(MeanKind kind, double t, double s);

// Matrix [ m(a_i, a_j) ] of a positive spectrum; diagonal equals the spectrum.
CoeffMatrix mean_matrix(MeanKind kind, const Eigen::VectorXd& spectrum);

// Schur transform induced by a mean of a > 0:
//   Arithmetic  -> L_a(x)
//   Geometric   -> P_{sqrt(a)}(x)
//   Harmonic    -> (L_{a^{-1}})^{-1}(x)
//   Logarithmic -> integral of P_{a^t, a^{1-t}}(x) dt
Element mean_transform(MeanKind kind, const Element& a, const Element& x);

// Gauss-Legendre evaluation of the integral of P_{a^t, a^{1-t}}(x) over
// t in [0,1]; agrees with the logarithmic mean transform.
Element log_mean_integral(const Element& a, const Element& x, int nodes = 32);

struct NamedVerdict {
  std::string name;
  MajorizationVerdict verdict;
};

// Verifies every majorization link of the mean chains
//   harmonic < geometric < logarithmic < arithmetic,
// the quadrature route, and the two-sided P_{a^t,a^{1-t}} bracket at t.
std::vector<NamedVerdict> check_mean_chain(const Element& a, const Element& x, double t);

}  // namespace jm
