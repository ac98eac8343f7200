#include <benchmark/benchmark.h>

#include "podkit/fem.hpp"

using namespace podkit;

static void BM_AssembleSquare(benchmark::State& state) {
  const int cells = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FeProblem p = assemble_fe(FeProblem::Domain::square, cells, FeProblem::Boundary::mixed, 1.0);
    benchmark::DoNotOptimize(p.n_dofs);
  }
}
BENCHMARK(BM_AssembleSquare)->Arg(16)->Arg(32);

static void BM_PoincareSquare(benchmark::State& state) {
  FeProblem p = assemble_fe(FeProblem::Domain::square, static_cast<int>(state.range(0)),
                            FeProblem::Boundary::mixed, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poincare_constant(p));
  }
}
BENCHMARK(BM_PoincareSquare)->Arg(16)->Arg(32);

static void BM_HeatStep(benchmark::State& state) {
  FeProblem p = assemble_fe(FeProblem::Domain::interval, 64, FeProblem::Boundary::all_dirichlet,
                            0.5);
  Eigen::VectorXd u0 = p.interpolate([](double x, double) { return x * (1.0 - x); });
  LoadSampler forcing = [&p](double) { return Eigen::VectorXd::Zero(p.n_dofs); };
  for (auto _ : state) {
    Trajectory traj = heat_semidiscrete(p, forcing, u0, TimeGrid(1.0, 16), 8);
    benchmark::DoNotOptimize(traj.values().data());
  }
}
BENCHMARK(BM_HeatStep);

BENCHMARK_MAIN();
