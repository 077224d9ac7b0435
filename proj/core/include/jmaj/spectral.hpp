#pragma once

#include <functional>
#include <limits>

#include "jmaj/frame.hpp"

namespace jm {

// x = sum_i eigenvalues[i] * frame[i], eigenvalues nonincreasing.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  JordanFrame frame;

  // Re-synthesizes sum_i lambda_i e_i (reconstruction check helper).
  Element synthesize() const;
};

SpectralDecomposition spectral_decomposition(const Element& x);

// Eigenvalue vector in decreasing order (no frame construction).
Eigen::VectorXd eigenvalues(const Element& x);

// Applies a scalar function through the spectral decomposition:
// G(x) = sum_i g(lambda_i) e_i. Eigenvalues must lie in [lo, hi];
// a violation raises domain_error naming the offending eigenvalue.
Element spectral_map(const Element& x, const std::function<double(double)>& g,
                     double lo = -std::numeric_limits<double>::infinity(),
                     double hi = std::numeric_limits<double>::infinity());

// Named spectral maps. atol = 1e-12 * max(1, ||x||_2).
Element sqrt_map(const Element& x);     // eigenvalues >= -atol, clamped to 0
Element abs_map(const Element& x);
Element inverse_map(const Element& x);  // |eigenvalue| > atol
Element power_map(const Element& x, double t);  // non-integer t clamps as sqrt
Element exp_map(const Element& x);
Element log_map(const Element& x);      // eigenvalues > atol

double determinant(const Element& x);

// Spectral p-norm ||lambda(x)||_p, p in [1, inf].
double p_norm(const Element& x, double p);
double lambda_max(const Element& x);
double lambda_min(const Element& x);
// Sum of the k largest eigenvalues, 1 <= k <= rank.
double sum_top_k(const Element& x, int k);

// lambda_min >= -tol (resp. > tol). Default tol = 1e-9 * max(1, ||x||_2).
bool is_psd_element(const Element& x, double tol = -1.0);
bool is_positive(const Element& x, double tol = -1.0);

}  // namespace jm
