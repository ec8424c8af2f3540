#include <random>

#include <benchmark/benchmark.h>

#include "arakelov/birkhoff.hpp"
#include "arakelov/fp_linalg.hpp"
#include "arakelov/numerics_oracle.hpp"

using namespace arakelov;

namespace {

FpMatrix random_matrix(std::size_t n, std::uint32_t p) {
  std::mt19937_64 rng(n);
  FpMatrix m(n, n, p);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % p));
  return m;
}

void BM_RankParallel(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 65521);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m));
}

void BM_RankSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 65521);
  for (auto _ : state) benchmark::DoNotOptimize(serial::rank_mod_p(m));
}

void BM_HyperfactorialParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::hyperfactorial_log_block(0, state.range(0)));
}

void BM_HyperfactorialSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::serial::hyperfactorial_log_block(0, state.range(0)));
}

void BM_GramTableParallel(benchmark::State& state) {
  const oracle::PrecisionBudget budget;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::gram_quadrature_table(state.range(0), budget));
}

void BM_GramTableSerial(benchmark::State& state) {
  const oracle::PrecisionBudget budget;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::serial::gram_quadrature_table(state.range(0), budget));
}

void BM_H0Dim(benchmark::State& state) {
  const auto m = TransitionMatrix2::diagonal(7, state.range(0), -state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h0_dim(m, state.range(0)));
}

void BM_H0DimSerial(benchmark::State& state) {
  const auto m = TransitionMatrix2::diagonal(7, state.range(0), -state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::h0_dim(m, state.range(0)));
}

void BM_ZetaOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::zeta_prime_neg1(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_RankParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HyperfactorialParallel)->Arg(4096)->Arg(32768)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HyperfactorialSerial)->Arg(4096)->Arg(32768)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramTableParallel)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramTableSerial)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_H0Dim)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_H0DimSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZetaOracle)->Arg(7)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
