#include <benchmark/benchmark.h>

#include <random>

#include "bgm/catalog.hpp"
#include "bgm/cohomology.hpp"
#include "bgm/fastpath.hpp"
#include "bgm/fp.hpp"
#include "bgm/modmat.hpp"
#include "bgm/rigidity.hpp"

using namespace bgm;

static void BM_ModSnf(benchmark::State& state) {
  const std::uint64_t m = 24;
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(42);
  ModMatrix A(m, n, n);
  for (auto& v : A.a) v = rng() % m;
  for (auto _ : state) benchmark::DoNotOptimize(mod_snf(A));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ModSnf)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Complexity();

static void BM_KernelMod(benchmark::State& state) {
  const std::uint64_t m = 16;
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  IntMatrix A(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      A.at(r, c) = static_cast<std::int64_t>(rng() % m);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_mod(A, m));
}
BENCHMARK(BM_KernelMod)->Arg(16)->Arg(32)->Arg(64);

static void BM_SchurMultiplier(benchmark::State& state) {
  auto g = dihedral_group(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schur_multiplier(g));
}
BENCHMARK(BM_SchurMultiplier)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

static void BM_B0Cocycle(benchmark::State& state) {
  auto g = dihedral_group(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(b0(g));
}
BENCHMARK(BM_B0Cocycle)->Arg(8)->Arg(16)->Arg(24);

static void BM_SubspaceScan(benchmark::State& state) {
  const std::uint32_t p = 3;
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_subspace(p, d, 2, [&](const FpSubspace&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SubspaceScan)->Arg(4)->Arg(5)->Arg(6);

static void BM_B0Fastpath(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  GammaData g;
  g.p = 3;
  g.dim_u = 2 * n;
  g.dim_v = 1;
  g.matrix.assign(1, FpVec(wedge_dim(2 * n), 0));
  for (std::size_t i = 0; i < n; ++i)
    g.matrix[0][wedge_index(i, i + n, 2 * n)] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(b0_fastpath(g));
}
BENCHMARK(BM_B0Fastpath)->Arg(1)->Arg(2)->Arg(3);

static void BM_AutcEnumerate(benchmark::State& state) {
  auto g = symmetric_group(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(autc_enumerate(g));
}
BENCHMARK(BM_AutcEnumerate)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
