#include "jmaj/algebra.hpp"

#include "jmaj/errors.hpp"

namespace jm {

Algebra Algebra::real_sym(int n) {
  if (n < 1) throw usage_error("RealSym rank must be >= 1");
  return Algebra(AlgebraKind::RealSym, n, n * (n + 1) / 2);
}

Algebra Algebra::complex_herm(int n) {
  if (n < 1) throw usage_error("ComplexHerm rank must be >= 1");
  return Algebra(AlgebraKind::ComplexHerm, n, n * n);
}

Algebra Algebra::spin(int d) {
  if (d < 2) throw usage_error("Spin algebra needs ambient dimension >= 2");
  return Algebra(AlgebraKind::Spin, 2, d);
}

Algebra Algebra::direct_sum(std::vector<Algebra> parts) {
  if (parts.empty()) throw usage_error("DirectSum needs at least one component");
  int rank = 0, dim = 0;
  for (const Algebra& p : parts) {
    rank += p.rank();
    dim += p.dim();
  }
  Algebra a(AlgebraKind::DirectSum, rank, dim);
  a.parts_ = std::move(parts);
  return a;
}

int Algebra::matrix_size() const {
  if (kind_ != AlgebraKind::RealSym && kind_ != AlgebraKind::ComplexHerm)
    throw usage_error("matrix_size: not a matrix algebra");
  return rank_;
}

int Algebra::spin_dim() const {
  if (kind_ != AlgebraKind::Spin) throw usage_error("spin_dim: not a spin algebra");
  return dim_;
}

const std::vector<Algebra>& Algebra::parts() const {
  if (kind_ != AlgebraKind::DirectSum) throw usage_error("parts: not a direct sum");
  return parts_;
}

bool Algebra::operator==(const Algebra& other) const {
  if (kind_ != other.kind_ || rank_ != other.rank_ || dim_ != other.dim_) return false;
  if (kind_ == AlgebraKind::DirectSum) {
    if (parts_.size() != other.parts_.size()) return false;
    for (size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i] != other.parts_[i]) return false;
  }
  return true;
}

std::string Algebra::to_string() const {
  switch (kind_) {
    case AlgebraKind::RealSym:
      return "realsym:" + std::to_string(rank_);
    case AlgebraKind::ComplexHerm:
      return "complexherm:" + std::to_string(rank_);
    case AlgebraKind::Spin:
      return "spin:" + std::to_string(dim_);
    case AlgebraKind::DirectSum: {
      std::string s = "sum[";
      for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += parts_[i].to_string();
      }
      return s + "]";
    }
  }
  return "?";
}

}  // namespace jm
