#include <benchmark/benchmark.h>

#include "sesquiop/spectral.hpp"
#include "sesquiop/verification.hpp"

namespace {

using namespace sesquiop;

KernelSpec rational_spec() {
  KernelSpec s;
  s.family = Family::Item3;
  s.mu1 = 0.75;
  s.mu2 = 0.3125;
  return s;
}

KernelSpec smooth_spec() {
  KernelSpec s;
  s.family = Family::Item2;
  s.alpha = 1.0;
  s.mu = 1.0;
  return s;
}

// kernel evaluation sweep, including passes through the removable-zero
// windows where the Taylor fallback kicks in
void BM_kernel_eval(benchmark::State& state) {
  const Kernel kernel = make_kernel(rational_spec());
  double z = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.eval(z));
    z += 1e-4;
    if (z > 2.0) z = -2.0;
  }
}
BENCHMARK(BM_kernel_eval);

void BM_build_K(benchmark::State& state) {
  const Kernel kernel = make_kernel(smooth_spec());
  const Grid grid = build_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_K(kernel, grid).matrix);
}
BENCHMARK(BM_build_K)->Arg(64)->Arg(128)->Arg(256);

void BM_build_L(benchmark::State& state) {
  const CoefficientPair coeffs = make_coefficients(smooth_spec());
  const Grid grid = build_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_L(coeffs, grid).matrix);
}
BENCHMARK(BM_build_L)->Arg(64)->Arg(128)->Arg(256);

void BM_functional_relation(benchmark::State& state) {
  const Kernel kernel = make_kernel(rational_spec());
  const CoefficientPair coeffs = make_coefficients(rational_spec());
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        functional_relation_residual(kernel, coeffs, samples).residual);
}
BENCHMARK(BM_functional_relation)->Arg(50)->Arg(200);

void BM_sesquicommutator(benchmark::State& state) {
  const ValidatedSpec v = validate_spec(rational_spec());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sesquicommutator_residual(v, n).residual);
}
BENCHMARK(BM_sesquicommutator)->Arg(32)->Arg(64);

void BM_eigendecompose(benchmark::State& state) {
  const Grid grid = build_grid(static_cast<int>(state.range(0)));
  const DiscreteOperator K = build_K(make_kernel(smooth_spec()), grid);
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose_K(K).lambda);
}
BENCHMARK(BM_eigendecompose)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
