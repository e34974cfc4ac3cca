#include <benchmark/benchmark.h>

#include <random>

#include "resolab/hardy.hpp"
#include "resolab/resonances.hpp"

using namespace resolab;

static void BM_PolyRoots(benchmark::State& state) {
  std::mt19937 rng(7);
  std::normal_distribution<double> d;
  std::vector<cplx> c(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto& v : c) v = {d(rng), d(rng)};
  const Poly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_PolyRoots)->Arg(4)->Arg(8)->Arg(16);

static void BM_SMatrix(benchmark::State& state) {
  const auto m = builtin_model(state.range(0) ? "twoK-oneE" : "paper-1d");
  for (auto _ : state) benchmark::DoNotOptimize(smatrix(m));
}
BENCHMARK(BM_SMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_FindResonances(benchmark::State& state) {
  const auto m = builtin_model("twoK-oneE");
  for (auto _ : state) benchmark::DoNotOptimize(find_resonances(m, {-3, 3, -3, 0}));
}
BENCHMARK(BM_FindResonances)->Unit(benchmark::kMillisecond);

static void BM_HardyProject(benchmark::State& state) {
  GridSpec g;
  g.n = std::size_t{1} << state.range(0);
  const auto f = GridFunction::sample(RatFun::pole_term(1.0, {1.0, -0.1}, 1), g);
  for (auto _ : state) benchmark::DoNotOptimize(hardy_project(f));
}
BENCHMARK(BM_HardyProject)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_InnerProductCayley(benchmark::State& state) {
  const RatFun a = cayley_basis(static_cast<int>(state.range(0)));
  const RatFun b = cayley_basis(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(rational_inner_product(a, b));
}
BENCHMARK(BM_InnerProductCayley)->Arg(0)->Arg(10)->Arg(29);

static void BM_SubspaceBases(benchmark::State& state) {
  const auto m = builtin_model("twoK-oneE");
  const auto s = smatrix(m);
  for (auto _ : state) benchmark::DoNotOptimize(subspace_bases(m, s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SubspaceBases)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
