#include "jmaj/quadrature.hpp"

#include "jmaj/errors.hpp"

namespace jm {

namespace {

template <size_t N>
std::vector<QuadNode> map_to_01(const std::array<double, N>& nodes,
                                const std::array<double, N>& weights) {
  std::vector<QuadNode> out;
  out.reserve(N);
  for (size_t i = 0; i < N; ++i) out.push_back({0.5 * (nodes[i] + 1.0), 0.5 * weights[i]});
  return out;
}

}  // namespace

std::vector<QuadNode> gauss_legendre_01(int n) {
  switch (n) {
    case 8:
      return map_to_01(kGLNodes8, kGLWeights8);
    case 16:
      return map_to_01(kGLNodes16, kGLWeights16);
    case 32:
      return map_to_01(kGLNodes32, kGLWeights32);
    default:
      throw usage_error("gauss_legendre_01: only 8/16/32-node rules are tabulated");
  }
}

}  // namespace jm
