// Serial reference kernels against their OpenMP counterparts.

#include "sbern/optimize.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace sbern;

namespace {

PowerPoly dense_poly(int n, int l, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  PowerPoly p(n);
  for (int g = 0; g <= l; ++g)
    for (const auto& alpha : *enumerate_indices(g, n)) {
      auto hat = alpha.hat();
      p.add_term(std::vector<int>(hat.begin(), hat.end()), ratio(num(rng), den(rng)));
    }
  return p;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_ToBernstein(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const PowerPoly p = dense_poly(n, 6, 1);
  const Simplex V = Simplex::standard(n);
  for (auto _ : state) benchmark::DoNotOptimize(to_bernstein(p, 12, V, exec_of(state)));
}

void BM_Elevate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const BernsteinPatch b = to_bernstein(dense_poly(n, 6, 2), 14, Simplex::standard(n), Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(elevate(b, exec_of(state)));
}

void BM_UniformMinimize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const PowerPoly p = dense_poly(n, 3, 3);
  const PowerPoly q = PowerPoly::constant(n, Rational(1));
  MinimizeOptions o;
  o.strategy = Strategy::Uniform;
  o.epsilon = Rational(1, 1000000);
  o.budget = 4;
  o.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(p, q, Simplex::standard(n), o));
}

// range(0): 0 serial, 1 parallel; range(1): dimension.
BENCHMARK(BM_ToBernstein)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Elevate)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniformMinimize)->ArgsProduct({{0, 1}, {1, 2}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
