#include <benchmark/benchmark.h>

#include "jmaj/cone.hpp"
#include "jmaj/gen.hpp"
#include "jmaj/means.hpp"

using namespace jm;

namespace {

Algebra algebra_for(int kind) {
  switch (kind) {
    case 0:
      return Algebra::real_sym(4);
    case 1:
      return Algebra::complex_herm(3);
    case 2:
      return Algebra::spin(5);
    default:
      return Algebra::direct_sum({Algebra::real_sym(2), Algebra::spin(3)});
  }
}

void BM_SpectralDecomposition(benchmark::State& state) {
  const Algebra alg = algebra_for(static_cast<int>(state.range(0)));
  SplitMix64 rng(1);
  const Element x = gen_any(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decomposition(x));
}
BENCHMARK(BM_SpectralDecomposition)->DenseRange(0, 3);

void BM_JacobiRealSym(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Algebra alg = Algebra::real_sym(n);
  SplitMix64 rng(2);
  const Element x = gen_any(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(x));
}
BENCHMARK(BM_JacobiRealSym)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SchurProduct(benchmark::State& state) {
  const Algebra alg = algebra_for(static_cast<int>(state.range(0)));
  SplitMix64 rng(3);
  const Element x = gen_any(alg, rng);
  const JordanFrame f = gen_frame(alg, rng);
  const CoeffMatrix a = gen_psd_matrix(alg.rank(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(schur_product(a, x, f));
}
BENCHMARK(BM_SchurProduct)->DenseRange(0, 3);

void BM_PeirceBlocks(benchmark::State& state) {
  const Algebra alg = algebra_for(static_cast<int>(state.range(0)));
  SplitMix64 rng(4);
  const Element x = gen_any(alg, rng);
  const JordanFrame f = gen_frame(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(peirce_blocks(x, f));
}
BENCHMARK(BM_PeirceBlocks)->DenseRange(0, 3);

void BM_LogMeanIntegral(benchmark::State& state) {
  const Algebra alg = Algebra::real_sym(4);
  SplitMix64 rng(5);
  const Element a = gen_positive(alg, rng);
  const Element x = gen_any(alg, rng);
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(log_mean_integral(a, x, nodes));
}
BENCHMARK(BM_LogMeanIntegral)->Arg(8)->Arg(16)->Arg(32);

void BM_GeodesicLength(benchmark::State& state) {
  const Algebra alg = Algebra::real_sym(4);
  SplitMix64 rng(6);
  const Element u = gen_positive(alg, rng);
  const Element v = gen_positive(alg, rng);
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(path_length(geodesic_path(u, v, samples), 2.0));
}
BENCHMARK(BM_GeodesicLength)->Arg(33)->Arg(129);

void BM_DsTransfer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(7);
  Eigen::VectorXd q(n);
  for (int i = 0; i < n; ++i) q(i) = rng.normal();
  const Eigen::VectorXd p = gen_doubly_stochastic(n, rng) * q;
  for (auto _ : state) benchmark::DoNotOptimize(ds_transfer_matrix(p, q));
}
BENCHMARK(BM_DsTransfer)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
