#pragma once

#include <utility>

#include "jmaj/majorize.hpp"
#include "jmaj/rng.hpp"

namespace jm {

// Random instance generators for the verification suites. Every generator
// output satisfies its type invariants (the suites re-validate before use,
// so a failure implicates the theorem code, not the generator).
//
// Spectra carry a duplicated eigenvalue in ~10% of draws, exercising the
// degenerate-frame paths of the solvers.

// Arbitrary element with ||lambda||_inf <= 3.
Element gen_any(const Algebra& alg, SplitMix64& rng);

// lambda in [0, 4], occasionally singular.
Element gen_psd(const Algebra& alg, SplitMix64& rng);

// lambda log-uniform in [0.1, 10].
Element gen_positive(const Algebra& alg, SplitMix64& rng);

// Sum of 1..rank-1 frame idempotents (the unit when rank is 1).
Element gen_idempotent(const Algebra& alg, SplitMix64& rng);

// Jordan frame of a random element.
JordanFrame gen_frame(const Algebra& alg, SplitMix64& rng);

// corr_normalize(G G^T + 0.1 I) for Gaussian G.
CoeffMatrix gen_correlation(int n, SplitMix64& rng);

// PSD coefficient matrix G G^T / n.
CoeffMatrix gen_psd_matrix(int n, SplitMix64& rng);

// PSD with diagonal entries in [0.2, 1] (substochastic regime).
CoeffMatrix gen_psd_diag_capped(int n, SplitMix64& rng);

// (x, y) with x a convex combination of orthogonal/unitary conjugates of y,
// so x is majorized by y. Matrix algebras only.
std::pair<Element, Element> gen_majorized_pair(const Algebra& alg, SplitMix64& rng,
                                               int terms = 3);

// Random doubly stochastic matrix: convex combination of `terms` random
// permutations.
Eigen::MatrixXd gen_doubly_stochastic(int n, SplitMix64& rng, int terms = 4);

}  // namespace jm
