#include <benchmark/benchmark.h>

#include "podkit/inequality.hpp"

using namespace podkit;

static void BM_CheckAgmon(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto space = make_euclidean_space(8);
  Trajectory f = random_trajectory(rng, space, TimeGrid(1.0, 64), false);
  for (auto _ : state) {
    InequalityReport r = check_general(f, GeneralLemma::agmon);
    benchmark::DoNotOptimize(r.ratio);
  }
}
BENCHMARK(BM_CheckAgmon);

static void BM_CheckGeneralInterpolation(benchmark::State& state) {
  std::mt19937_64 rng(8);
  auto space = make_euclidean_space(8);
  Trajectory f = random_trajectory(rng, space, TimeGrid(1.0, 64), false);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    InequalityReport r = check_general(f, GeneralLemma::interpolation, m);
    benchmark::DoNotOptimize(r.ratio);
  }
}
BENCHMARK(BM_CheckGeneralInterpolation)->Arg(2)->Arg(4)->Arg(6);

static void BM_ConstantsTableDeep(benchmark::State& state) {
  for (auto _ : state) {
    ConstantsTable table(DhatSeed::c_b1);
    benchmark::DoNotOptimize(table.log_c_m(100000));
  }
}
BENCHMARK(BM_ConstantsTableDeep);
