#pragma once

#include <cmath>
#include <cstdint>

namespace jm {

// Portable 64-bit splitmix generator. Reports must reproduce across
// platforms, so all real-valued draws are derived here rather than through
// std::uniform_real_distribution (whose output is implementation-defined).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Inclusive integer range.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  // Standard normal via Box-Muller; two fresh draws per call.
  double normal() {
    const double u1 = 1.0 - u01();
    const double u2 = u01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Independent stream for (seed, index) pairs; used to derive per-trial
  // seeds so trials are order-independent.
  static uint64_t derive(uint64_t seed, uint64_t stream) {
    SplitMix64 g(seed ^ (0x682f01613b92e0e5ULL * (stream + 1)));
    return g.next();
  }

 private:
  uint64_t state_;
};

}  // namespace jm
