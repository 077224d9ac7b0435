#pragma once

#include <string>
#include <vector>

namespace jm {

enum class AlgebraKind { RealSym, ComplexHerm, Spin, DirectSum };

// Descriptor of a supported Euclidean Jordan algebra. Immutable.
//
//   RealSym(n)      n x n real symmetric matrices,    rank n, dim n(n+1)/2
//   ComplexHerm(n)  n x n complex Hermitian matrices, rank n, dim n^2
//   Spin(d)         Jordan spin algebra on R x R^{d-1}, rank 2, dim d >= 2
//   DirectSum       ordered list of component algebras
class Algebra {
 public:
  static Algebra real_sym(int n);
  static Algebra complex_herm(int n);
  static Algebra spin(int d);
  static Algebra direct_sum(std::vector<Algebra> parts);

  AlgebraKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }

  // Direct sums are non-simple; so is Spin(2), which splits as R + R.
  bool simple() const {
    if (kind_ == AlgebraKind::DirectSum) return false;
    if (kind_ == AlgebraKind::Spin) return dim_ >= 3;
    return true;
  }

  // Matrix side length for RealSym/ComplexHerm.
  int matrix_size() const;
  // Ambient dimension d of the spin algebra.
  int spin_dim() const;

  const std::vector<Algebra>& parts() const;

  bool operator==(const Algebra& other) const;
  bool operator!=(const Algebra& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  Algebra(AlgebraKind kind, int rank, int dim) : kind_(kind), rank_(rank), dim_(dim) {}

  AlgebraKind kind_;
  int rank_;
  int dim_;
  std::vector<Algebra> parts_;
};

}  // namespace jm
