// Microbenchmarks: LP solve (float and rational), the rounding pipeline,
// the greedy duality cover, and the exact oracle.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "multicover/generator.hpp"
#include "multicover/hypergraph.hpp"
#include "multicover/lp.hpp"
#include "multicover/matching.hpp"
#include "multicover/oracle.hpp"
#include "multicover/rounding.hpp"

namespace {

using namespace multicover;

Hypergraph make_instance(int n, int m, std::uint64_t seed) {
  GenSpec spec;
  spec.n = n;
  spec.m = m;
  spec.ell_min = 2;
  spec.ell_max = 4;
  spec.b_lo = 2;
  spec.b_hi = 3;
  spec.seed = seed;
  return generate(spec);
}

void BM_LpFloat(benchmark::State& state) {
  Hypergraph h = make_instance(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)) * 2, 7);
  LpModel model = build_relaxation(h);
  for (auto _ : state) {
    LpSolution sol = solve_lp(model, LpMode::Float);
    benchmark::DoNotOptimize(sol.objective);
  }
}
BENCHMARK(BM_LpFloat)->Arg(10)->Arg(20)->Arg(40);

void BM_LpRational(benchmark::State& state) {
  Hypergraph h = make_instance(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)) * 2, 7);
  LpModel model = build_relaxation(h);
  for (auto _ : state) {
    LpSolution sol = solve_lp(model, LpMode::Rational);
    benchmark::DoNotOptimize(sol.objective);
  }
}
BENCHMARK(BM_LpRational)->Arg(10)->Arg(20);

void BM_Algorithm1(benchmark::State& state) {
  Hypergraph h = make_instance(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)) * 2, 11);
  LpSolution lp = solve_lp(build_relaxation(h), LpMode::Float);
  RoundingParams params = RoundingParams::from(h, 99);
  for (auto _ : state) {
    Alg1Result res = algorithm1_solve(h, lp, params);
    benchmark::DoNotOptimize(res.cover.chosen.size());
  }
}
BENCHMARK(BM_Algorithm1)->Arg(10)->Arg(20)->Arg(40);

void BM_DualityCover(benchmark::State& state) {
  Hypergraph h = make_instance(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)) * 2, 13);
  for (auto _ : state) {
    auto [cover, matching] = duality_cover(h, EdgeOrder::Input);
    benchmark::DoNotOptimize(cover.chosen.size());
  }
}
BENCHMARK(BM_DualityCover)->Arg(10)->Arg(40)->Arg(100);

void BM_ExactOracle(benchmark::State& state) {
  Hypergraph h = make_instance(8, static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    OracleResult res = exact_min_multicover(h);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_ExactOracle)->Arg(12)->Arg(16)->Arg(20);

void BM_MonteCarlo(benchmark::State& state) {
  GenSpec spec;
  spec.family = Family::Flat;
  spec.n = 20;
  spec.flat_degree = 8;
  spec.seed = 5;
  FlatInstance flat = generate_flat(spec);
  RoundingParams params = RoundingParams::from(flat.h, 3);
  for (auto _ : state) {
    StatsReport rep = monte_carlo_verify(flat.h, flat.point.x, params,
                                         static_cast<long long>(state.range(0)),
                                         21, 1, true);
    benchmark::DoNotOptimize(rep.mean_x);
  }
}
BENCHMARK(BM_MonteCarlo)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
