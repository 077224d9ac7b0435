#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jmaj/peirce.hpp"
#include "jmaj/rng.hpp"
#include "jmaj/spectral.hpp"

namespace jm {

// Outcome of a (weak) majorization test. slacks[k-1] holds
// sum_{i<=k} q_down_i - sum_{i<=k} p_down_i; trace_gap is the k = n slack.
struct MajorizationVerdict {
  bool holds = false;
  Eigen::VectorXd slacks;
  double trace_gap = 0.0;
  double tol_used = 0.0;

  double worst_slack() const { return slacks.size() ? slacks.minCoeff() : 0.0; }
};

// p majorized by q: prefix-sum dominance with equal totals.
// Default tol = 1e-8 * max(1, ||q||_1).
MajorizationVerdict majorizes(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                              double tol = -1.0);
// Weak variant: drops the equal-totals requirement.
MajorizationVerdict weak_majorizes(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                                   double tol = -1.0);

MajorizationVerdict majorizes_elements(const Element& x, const Element& y, double tol = -1.0);
MajorizationVerdict weak_majorizes_elements(const Element& x, const Element& y,
                                            double tol = -1.0);

// Chain of T-transforms carrying p = D q for majorized pairs.
// `factors` apply to q in list order; `product` is their composition D.
struct TTransformChain {
  std::vector<Eigen::MatrixXd> factors;
  Eigen::MatrixXd product;
  int t_count = 0;  // factors that are genuine T-transforms (not permutations)
};

// Hardy-Littlewood-Polya construction: requires majorizes(p, q).
TTransformChain ds_transfer_matrix(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                                   double tol = -1.0);

struct BirkhoffTerm {
  double weight = 0.0;
  std::vector<int> permutation;  // row i carries a 1 in column permutation[i]
};

struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;
  Eigen::MatrixXd reconstruct(int n) const;
};

// Greedy Birkhoff-von Neumann: repeatedly match a permutation inside the
// support and subtract the minimal matched entry.
BirkhoffDecomposition birkhoff_decompose(const Eigen::MatrixXd& d, double tol = 1e-9);

// Correlation matrix: PSD with unit diagonal.
bool is_correlation(const CoeffMatrix& c, double tol = 1e-9);

// Eigenvalues of a coefficient matrix, decreasing (Jacobi).
Eigen::VectorXd coeff_eigenvalues(const CoeffMatrix& c);

// Entrywise power A^{(k)}; k < 0 requires all entries nonzero.
CoeffMatrix schur_power(const CoeffMatrix& a, int k);

// Rescale a PSD matrix with positive diagonal to unit diagonal.
CoeffMatrix corr_normalize(const CoeffMatrix& a);

// Correlation recipes.
CoeffMatrix corr_ratio(const Eigen::VectorXd& a);     // 0 < a_1 <= ... <= a_n
CoeffMatrix corr_abs_diff(const Eigen::VectorXd& a);  // 1/(1+|a_i-a_j|)

enum class PosDefFn { Cos, Sinc, TOverSinh, ExpAbs };
CoeffMatrix corr_posdef_fn(PosDefFn fn, const Eigen::VectorXd& a);
double posdef_fn_value(PosDefFn fn, double t);

struct ConsequenceCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;  // lhs <= rhs + tol
};

struct SchurMajorizationCheck {
  MajorizationVerdict verdict;
  bool ratio_is_correlation = false;
  std::vector<ConsequenceCheck> consequences;
};

// Tests A^{(k)}.x majorized by B^{(k)}.x and the derived eigenvalue/norm
// comparisons. Requires b_ij != 0 so the ratio matrix is defined.
SchurMajorizationCheck check_schur_majorization(const CoeffMatrix& a, const CoeffMatrix& b,
                                                const Element& x, const JordanFrame& frame,
                                                int k);

// Best-effort search for x >= 0 in a simple algebra with A.x not >= 0
// (Schur products relative to the canonical frame). nullopt means the
// search was inconclusive, never that no witness exists.
std::optional<Element> find_positivity_violation(const CoeffMatrix& a, const Algebra& alg,
                                                 int trials, SplitMix64& rng);

// Weak-majorization verdict for A.x against x (doubly substochastic test).
MajorizationVerdict check_substochastic(const CoeffMatrix& a, const Element& x,
                                        const JordanFrame& frame, double tol = -1.0);

}  // namespace jm
