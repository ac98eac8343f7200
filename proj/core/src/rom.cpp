#include "podkit/rom.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "podkit/errors.hpp"

namespace podkit {

const char* scheme_name(RomConfig::Scheme scheme) {
  return scheme == RomConfig::Scheme::euler ? "euler" : "bdf2";
}

Eigen::VectorXd ritz_project(const FeProblem& problem, const PodBasis& basis, int r,
                             const Eigen::VectorXd& v) {
  (void)problem;
  if (basis.space->kind() != HilbertSpace::Kind::stiffness)
    throw InvalidArgument("ritz_project: basis must be built under the stiffness Gram");
  return project(basis, r, v);
}

RomResult rom_solve(const FeProblem& problem, const PodBasis& basis, const RomConfig& config,
                    const LoadSampler& forcing, const Trajectory& reference) {
  const int r = config.rank;
  if (r < 0 || r > basis.rank) throw InvalidArgument("rom_solve: rank out of range");
  if (reference.space().dim() != problem.n_dofs)
    throw InvalidArgument("rom_solve: reference has wrong dimension");

  const TimeGrid& grid = reference.grid();
  const double tau = grid.step();
  const int m_intervals = grid.intervals();
  const Eigen::MatrixXd phi = basis.modes.leftCols(r);
  const HilbertSpace& l2 = *problem.mass_space();

  const Eigen::MatrixXd mass_r = phi.transpose() * (problem.mass * phi);
  const Eigen::MatrixXd stiff_r = phi.transpose() * (problem.stiffness * phi);

  // Coordinates of the X-orthogonal projection of v onto the span.
  auto project_coeff = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    if (r == 0) return Eigen::VectorXd::Zero(0);
    return phi.transpose() * basis.space->apply(v);
  };

  RomResult result;
  result.coefficients.resize(r, grid.node_count());
  result.states.resize(problem.n_dofs, grid.node_count());
  result.l2_error.resize(grid.node_count());
  result.projection_defect.resize(grid.node_count());

  const bool bdf2 = config.scheme == RomConfig::Scheme::bdf2;
  Eigen::LDLT<Eigen::MatrixXd> step_solver;
  if (r > 0) {
    Eigen::MatrixXd lhs =
        bdf2 ? (1.5 * mass_r + tau * config.nu * stiff_r).eval()
             : (mass_r + tau * config.nu * stiff_r).eval();
    step_solver.compute(lhs);
    if (step_solver.info() != Eigen::Success)
      throw NumericFailure("rom_solve: reduced system factorization failed");
  }
  Eigen::LDLT<Eigen::MatrixXd> euler_solver;
  if (bdf2 && config.bdf2_start == RomConfig::Bdf2Start::euler_step && r > 0) {
    euler_solver.compute(mass_r + tau * config.nu * stiff_r);
    if (euler_solver.info() != Eigen::Success)
      throw NumericFailure("rom_solve: startup factorization failed");
  }

  result.coefficients.col(0) = project_coeff(reference.snapshot(0));
  if (bdf2 && m_intervals >= 1) {
    if (config.bdf2_start == RomConfig::Bdf2Start::project) {
      result.coefficients.col(1) = project_coeff(reference.snapshot(1));
    } else if (r > 0) {
      Eigen::VectorXd rhs = mass_r * result.coefficients.col(0) +
                            tau * (phi.transpose() * forcing(grid.node(1)));
      result.coefficients.col(1) = euler_solver.solve(rhs);
    }
  }

  const int first_step = bdf2 ? 2 : 1;
  for (int n = first_step; n <= m_intervals; ++n) {
    if (r == 0) break;
    Eigen::VectorXd load = phi.transpose() * forcing(grid.node(n));
    Eigen::VectorXd rhs;
    if (bdf2) {
      rhs = mass_r * (2.0 * result.coefficients.col(n - 1) -
                      0.5 * result.coefficients.col(n - 2)) +
            tau * load;
    } else {
      rhs = mass_r * result.coefficients.col(n - 1) + tau * load;
    }
    result.coefficients.col(n) = step_solver.solve(rhs);
  }

  // Lift and measure.
  std::vector<Eigen::VectorXd> defect_vectors(grid.node_count());
  for (int n = 0; n <= m_intervals; ++n) {
    result.states.col(n) =
        r > 0 ? (phi * result.coefficients.col(n)).eval()
              : Eigen::VectorXd::Zero(problem.n_dofs).eval();
    result.l2_error[n] = l2.norm(result.states.col(n) - reference.snapshot(n));
    result.max_l2_error = std::max(result.max_l2_error, result.l2_error[n]);
    defect_vectors[n] = result.states.col(n) - project(basis, r, reference.snapshot(n));
    result.projection_defect[n] = l2.norm(defect_vectors[n]);
  }

  if (bdf2) {
    result.bdf2_energy.assign(grid.node_count(), 0.0);
    for (int n = 1; n <= m_intervals; ++n) {
      const Eigen::VectorXd& e = defect_vectors[n];
      Eigen::VectorXd shifted = 2.0 * e - defect_vectors[n - 1];
      double e_sq = l2.inner(e, e);
      double s_sq = l2.inner(shifted, shifted);
      double energy = 0.5 * std::sqrt(std::max(e_sq + s_sq, 0.0));
      result.bdf2_energy[n] = energy;
      const double en = result.projection_defect[n];
      if (en > energy * (1.0 + 1e-12) + 1e-14) ++result.bdf2_energy_violations;
      if (en > 2.0 * energy * (1.0 + 1e-12) + 1e-14) ++result.bdf2_energy_violations_doubled;
    }
  }
  return result;
}

std::vector<double> truncation_series(const PodBasis& basis, int r, const Trajectory& reference,
                                      const DerivativeSampler& dt_sampler,
                                      const HilbertSpace& measure) {
  const TimeGrid& grid = reference.grid();
  const double tau = grid.step();
  std::vector<double> series(grid.intervals());
  Eigen::VectorXd prev = project(basis, r, reference.snapshot(0));
  for (int n = 1; n <= grid.intervals(); ++n) {
    Eigen::VectorXd current = project(basis, r, reference.snapshot(n));
    Eigen::VectorXd residual = (current - prev) / tau - dt_sampler(grid.node(n), 1);
    series[n - 1] = measure.norm(residual);
    prev = std::move(current);
  }
  return series;
}

}  // namespace podkit
