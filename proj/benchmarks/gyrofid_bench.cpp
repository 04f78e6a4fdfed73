#include <benchmark/benchmark.h>

#include "gyrofid/fidelity.hpp"
#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/lorentz.hpp"
#include "gyrofid/mobius.hpp"
#include "gyrofid/sampling.hpp"
#include "gyrofid/verify.hpp"

using namespace gyrofid;

namespace {

void BM_EinsteinAdd(benchmark::State& state) {
  Sampler s(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const BallVector u = s.ball_vector(n);
  const BallVector v = s.ball_vector(n);
  for (auto _ : state) benchmark::DoNotOptimize(einstein_add(u, v));
}
BENCHMARK(BM_EinsteinAdd)->Arg(3)->Arg(8);

void BM_Gyration(benchmark::State& state) {
  Sampler s(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const BallVector u = s.ball_vector(n);
  const BallVector v = s.ball_vector(n);
  const BallVector w = s.ball_vector(n);
  for (auto _ : state) benchmark::DoNotOptimize(gyration(u, v, w));
}
BENCHMARK(BM_Gyration)->Arg(3)->Arg(8);

void BM_SymEigen(benchmark::State& state) {
  Sampler s(3);
  const SymmetricMatrix a = s.symmetric_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(a));
}
BENCHMARK(BM_SymEigen)->Arg(4)->Arg(9)->Arg(16);

void BM_FidelitySpectral(benchmark::State& state) {
  Sampler s(4);
  const int n = static_cast<int>(state.range(0));
  const SymmetricMatrix a = mobius(n, s.ball_vector(n)).matrix();
  const SymmetricMatrix b = mobius(n, s.ball_vector(n)).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_spectral(a, b));
}
BENCHMARK(BM_FidelitySpectral)->Arg(3)->Arg(8);

void BM_FidelityMobiusClosed(benchmark::State& state) {
  Sampler s(5);
  const int n = static_cast<int>(state.range(0));
  const BallVector u = s.ball_vector(n);
  const BallVector v = s.ball_vector(n);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_mobius_closed(u, v, n));
}
BENCHMARK(BM_FidelityMobiusClosed)->Arg(3)->Arg(8);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::all, 20, 42));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
