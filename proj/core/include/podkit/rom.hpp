#pragma once

#include <vector>

#include "podkit/fem.hpp"
#include "podkit/pod.hpp"

namespace podkit {

/// POD-Galerkin reduced solver for the semidiscrete heat equation, time
/// discretized by backward Euler or BDF2. BDF2 starts from projected data at
/// the first two levels by default; euler_step instead computes level 1 with
/// one backward Euler step.
struct RomConfig {
  enum class Scheme { euler, bdf2 };
  enum class Bdf2Start { project, euler_step };

  Scheme scheme = Scheme::euler;
  Bdf2Start bdf2_start = Bdf2Start::project;
  int rank = 0;
  double nu = 1.0;
};

const char* scheme_name(RomConfig::Scheme scheme);

struct RomResult {
  Eigen::MatrixXd coefficients;  // rank x (M+1)
  Eigen::MatrixXd states;        // dim x (M+1), lifted reduced solution
  std::vector<double> l2_error;          // ||u_r^n - u^n||_L2 per level
  std::vector<double> projection_defect; // ||u_r^n - P_r u^n||_L2 per level
  double max_l2_error = 0.0;
  // BDF2 energy diagnostics: E_n = 0.5 (||e^n||^2 + ||2 e^n - e^{n-1}||^2)^{1/2}.
  std::vector<double> bdf2_energy;
  int bdf2_energy_violations = 0;          // levels with ||e^n|| > E_n
  int bdf2_energy_violations_doubled = 0;  // levels with ||e^n|| > 2 E_n
};

/// Projection in the stiffness inner product. Requires a stiffness-Gram
/// basis, for which it coincides with the plain POD projection.
Eigen::VectorXd ritz_project(const FeProblem& problem, const PodBasis& basis, int r,
                             const Eigen::VectorXd& v);

RomResult rom_solve(const FeProblem& problem, const PodBasis& basis, const RomConfig& config,
                    const LoadSampler& forcing, const Trajectory& reference);

/// ||D (P_r u^n) - du/dt(t_n)|| per level n = 1..M in the given measure.
std::vector<double> truncation_series(const PodBasis& basis, int r, const Trajectory& reference,
                                      const DerivativeSampler& dt_sampler,
                                      const HilbertSpace& measure);

}  // namespace podkit
