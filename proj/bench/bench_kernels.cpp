// Serial reference kernels against the OpenMP kernels, plus the two power
// strategies.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "tropical/kernels.hpp"
#include "tropical/matrix.hpp"

using namespace tropical;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> value(-1000, 1000);
  std::bernoulli_distribution epsilon(0.1);
  Matrix m(rows, cols);
  for (auto& v : m.entries()) v = epsilon(rng) ? E : TropicalValue(value(rng));
  return m;
}

void BM_GemmReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  Matrix out(n, n);
  for (auto _ : state) {
    kernels::gemm_reference<MaxPlus>(a, b, out);
    benchmark::DoNotOptimize(out.entries().data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_GemmParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  Matrix out(n, n);
  for (auto _ : state) {
    kernels::gemm<MaxPlus>(a, b, out);
    benchmark::DoNotOptimize(out.entries().data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_ZipReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  Matrix out(n, n);
  const auto plus = [](TropicalValue x, TropicalValue y) { return MaxPlus::plus(x, y); };
  for (auto _ : state) {
    kernels::zip_reference(a, b, out, plus);
    benchmark::DoNotOptimize(out.entries().data());
  }
}

void BM_ZipParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  Matrix out(n, n);
  const auto plus = [](TropicalValue x, TropicalValue y) { return MaxPlus::plus(x, y); };
  for (auto _ : state) {
    kernels::zip(a, b, out, plus);
    benchmark::DoNotOptimize(out.entries().data());
  }
}

void BM_PowSquaring(benchmark::State& state) {
  const Matrix a = random_matrix(64, 64, 3);
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(a, k));
}

void BM_PowRepeated(benchmark::State& state) {
  const Matrix a = random_matrix(64, 64, 3);
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    Matrix p = a;
    for (std::uint64_t i = 1; i < k; ++i) p = mat_mul(p, a);
    benchmark::DoNotOptimize(p);
  }
}

}  // namespace

BENCHMARK(BM_GemmReference)->RangeMultiplier(2)->Range(32, 256)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_GemmParallel)->RangeMultiplier(2)->Range(32, 256)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_ZipReference)->Arg(256)->Arg(1024);
BENCHMARK(BM_ZipParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_PowSquaring)->Arg(9)->Arg(64);
BENCHMARK(BM_PowRepeated)->Arg(9)->Arg(64);

BENCHMARK_MAIN();
