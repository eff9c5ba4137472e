// Compares the production transform kernels (factored per order/row,
// OpenMP-parallel) against the naive serial reference, plus the two heavier
// grid kernels. Run: ./quermass_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <random>

#include "quermass/harmonic.hpp"
#include "quermass/oracle.hpp"
#include "quermass/reference.hpp"

using namespace quermass;

namespace {

HarmonicSpectrum random_spectrum(int dim, int N) {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HarmonicSpectrum s(dim, N);
  for (int n = 0; n <= N; ++n)
    for (double& c : s.block(n)) c = u(rng);
  return s;
}

void BM_forward_kernel(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto grid = QuadratureGrid::for_band_limit(3, N);
  const auto f = inverse(random_spectrum(3, N), grid);
  for (auto _ : state) {
    auto s = forward(f, N);
    benchmark::DoNotOptimize(s);
  }
}

void BM_forward_reference(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto grid = QuadratureGrid::for_band_limit(3, N);
  const auto f = inverse(random_spectrum(3, N), grid);
  for (auto _ : state) {
    auto s = reference::forward_direct(f, N);
    benchmark::DoNotOptimize(s);
  }
}

void BM_inverse_kernel(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto grid = QuadratureGrid::for_band_limit(3, N);
  const auto s = random_spectrum(3, N);
  for (auto _ : state) {
    auto f = inverse(s, grid);
    benchmark::DoNotOptimize(f);
  }
}

void BM_inverse_reference(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto grid = QuadratureGrid::for_band_limit(3, N);
  const auto s = random_spectrum(3, N);
  for (auto _ : state) {
    auto f = reference::inverse_direct(s, grid);
    benchmark::DoNotOptimize(f);
  }
}

void BM_hessian(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto grid = QuadratureGrid::for_band_limit(3, N);
  const auto s = random_spectrum(3, N);
  for (auto _ : state) {
    auto A = surface_gradient_hessian(s, grid);
    benchmark::DoNotOptimize(A);
  }
}

void BM_dense_oracle(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = random_spectrum(3, N);
  const auto g = random_spectrum(3, N);
  for (auto _ : state) {
    double v = oracle::dense_inner_product_oracle(f, g, 2);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_forward_kernel)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_forward_reference)->Arg(8)->Arg(16);
BENCHMARK(BM_inverse_kernel)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_inverse_reference)->Arg(8)->Arg(16);
BENCHMARK(BM_hessian)->Arg(16)->Arg(32);
BENCHMARK(BM_dense_oracle)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
