#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Sparse>

#include "podkit/seq_norms.hpp"
#include "podkit/trajectory.hpp"

namespace podkit {

/// P1 finite elements on a uniform interval partition of [0,1] or on a
/// uniform right-triangle mesh of the unit square (diagonals running
/// southwest to northeast). The Gram operators (mass, stiffness) live on the
/// free dofs; the full-mesh mass matrix is kept for the partition-of-unity
/// diagnostics.
struct FeProblem {
  enum class Domain { interval, square };
  enum class Boundary { all_dirichlet, mixed };

  Domain domain = Domain::interval;
  Boundary boundary = Boundary::all_dirichlet;
  int cells_per_side = 0;
  double mesh_size = 0.0;
  double nu = 1.0;

  int n_dofs = 0;
  Eigen::SparseMatrix<double> mass;
  Eigen::SparseMatrix<double> stiffness;
  Eigen::SparseMatrix<double> full_mass;
  std::vector<int> free_nodes;          // free dof -> mesh node
  std::vector<double> node_x, node_y;   // all mesh nodes (node_y empty in 1d)
  std::vector<double> mass_row_sum_exact;  // per mesh node: sum_E |E| / (d+1)

  std::shared_ptr<const HilbertSpace> mass_space() const { return mass_space_; }
  std::shared_ptr<const HilbertSpace> stiffness_space() const { return stiffness_space_; }

  /// Nodal interpolant of f(x, y) on the free dofs (y passed as 0 in 1d).
  Eigen::VectorXd interpolate(const std::function<double(double, double)>& f) const;

  std::shared_ptr<const HilbertSpace> mass_space_;
  std::shared_ptr<const HilbertSpace> stiffness_space_;
};

FeProblem assemble_fe(FeProblem::Domain domain, int cells_per_side,
                      FeProblem::Boundary boundary, double nu);

/// Best constant in ||v|| <= C_P ||grad v||, from the smallest generalized
/// eigenvalue of stiffness v = lambda mass v by inverse iteration.
double poincare_constant(const FeProblem& problem);

/// Load vector sampler: t -> right-hand side on the free dofs.
using LoadSampler = std::function<Eigen::VectorXd(double)>;

/// Snapshots of the semidiscrete heat flow M u' + nu A u = F(t), produced by
/// a Crank-Nicolson sub-integrator with `substeps` steps per snapshot
/// interval. The trajectory lives in the mass-Gram space.
Trajectory heat_semidiscrete(const FeProblem& problem, const LoadSampler& forcing,
                             const Eigen::VectorXd& initial, const TimeGrid& grid,
                             int substeps = 32);

}  // namespace podkit
