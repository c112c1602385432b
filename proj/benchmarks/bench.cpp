#include <benchmark/benchmark.h>

#include <random>

#include "tlab/hyponormality.hpp"
#include "tlab/operators.hpp"
#include "tlab/spectrum.hpp"

namespace {

using tlab::AnalyticPolynomial;
using tlab::Complex;

AnalyticPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return AnalyticPolynomial(std::move(c));
}

void BM_HermitianEigenvalues(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<int>(state.range(0));
  const auto c = tlab::self_commutator(random_poly(rng, n), Complex(0.3) * random_poly(rng, n));
  for (auto _ : state) benchmark::DoNotOptimize(tlab::hermitian_eigenvalues(c.matrix));
}
BENCHMARK(BM_HermitianEigenvalues)->RangeMultiplier(2)->Range(2, 64);

void BM_CommutatorNorm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto f = random_poly(rng, static_cast<int>(state.range(0)));
  const auto g = tlab::toeplitz_compress(f, AnalyticPolynomial{0.0, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(tlab::commutator_norm(f, g));
}
BENCHMARK(BM_CommutatorNorm)->Arg(2)->Arg(6)->Arg(16);

void BM_CheckHyponormal(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto f = random_poly(rng, static_cast<int>(state.range(0)));
  const auto phi = tlab::build_symbol(f, AnalyticPolynomial{0.0, 0.9});
  for (auto _ : state) benchmark::DoNotOptimize(tlab::check_hyponormal(phi));
}
BENCHMARK(BM_CheckHyponormal)->Arg(2)->Arg(6)->Arg(16);

void BM_RasterizeSpectrum(benchmark::State& state) {
  const tlab::LaurentPolynomial ellipse{{1, 1.0}, {-1, 0.5}};
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tlab::rasterize_spectrum(ellipse, grid, 8192).area);
}
BENCHMARK(BM_RasterizeSpectrum)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
