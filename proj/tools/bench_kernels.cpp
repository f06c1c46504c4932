// Serial reference vs OpenMP kernels.  Argument is n.

#include <benchmark/benchmark.h>

#include <random>

#include "rookfft/fft.hpp"

using namespace rookfft;

namespace {

AlgebraElement input(int n, Basis basis) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7919);
  return random_element(n, basis, rng);
}

template <Execution exec>
void BM_SteinFFT(benchmark::State& state) {
  const auto f = input(static_cast<int>(state.range(0)), Basis::groupoid);
  for (auto _ : state) benchmark::DoNotOptimize(stein_fft(f, exec));
}

template <Execution exec>
void BM_RecursiveFFT(benchmark::State& state) {
  const auto f = input(static_cast<int>(state.range(0)), Basis::semigroup);
  for (auto _ : state) benchmark::DoNotOptimize(recursive_fft(f, exec));
}

template <Execution exec>
void BM_Zeta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = input(n, Basis::semigroup).to_dense();
  for (auto _ : state) {
    OpCounter ops;
    benchmark::DoNotOptimize(zeta_transform(n, f, ops, exec));
  }
}

}  // namespace

BENCHMARK(BM_SteinFFT<Execution::serial>)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SteinFFT<Execution::parallel>)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecursiveFFT<Execution::serial>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecursiveFFT<Execution::parallel>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Zeta<Execution::serial>)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Zeta<Execution::parallel>)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
