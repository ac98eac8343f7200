#include <benchmark/benchmark.h>

#include "podkit/inequality.hpp"
#include "podkit/pod.hpp"

using namespace podkit;

static void BM_BuildCorrelation(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  auto space = make_euclidean_space(n);
  Trajectory traj = random_trajectory(rng, space, TimeGrid(1.0, m), false);
  for (auto _ : state) {
    CorrelationMatrix corr = build_correlation(traj, *space);
    benchmark::DoNotOptimize(corr.entries.data());
  }
}
BENCHMARK(BM_BuildCorrelation)->Args({200, 128})->Args({400, 256});

static void BM_ComputePod(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  auto space = make_euclidean_space(n);
  Trajectory traj = random_trajectory(rng, space, TimeGrid(1.0, m), false);
  CorrelationMatrix corr = build_correlation(traj, *space);
  for (auto _ : state) {
    PodBasis basis = compute_pod(corr, traj, space);
    benchmark::DoNotOptimize(basis.modes.data());
  }
}
BENCHMARK(BM_ComputePod)->Args({200, 128})->Args({400, 256});

static void BM_EnergyIdentity(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto space = make_euclidean_space(200);
  Trajectory traj = random_trajectory(rng, space, TimeGrid(1.0, 128), false);
  PodBasis basis = pod_from_trajectory(traj, space);
  for (auto _ : state) {
    InequalityReport r = verify_energy_identity(basis, traj, basis.rank / 2);
    benchmark::DoNotOptimize(r.lhs);
  }
}
BENCHMARK(BM_EnergyIdentity);
