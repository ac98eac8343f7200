#include "podkit/fem.hpp"

#include <array>
#include <cmath>

#include <Eigen/SparseCholesky>

#include "podkit/errors.hpp"

namespace podkit {

namespace {

using Triplet = Eigen::Triplet<double>;

struct MeshData {
  int node_count = 0;
  std::vector<double> x, y;
  std::vector<bool> dirichlet;
  std::vector<Triplet> mass, stiffness;
  std::vector<double> row_sum_exact;
};

MeshData build_interval(int cells, FeProblem::Boundary boundary) {
  MeshData mesh;
  const double h = 1.0 / cells;
  mesh.node_count = cells + 1;
  mesh.x.resize(mesh.node_count);
  mesh.dirichlet.assign(mesh.node_count, false);
  mesh.row_sum_exact.assign(mesh.node_count, 0.0);
  for (int i = 0; i <= cells; ++i) mesh.x[i] = i * h;

  if (boundary == FeProblem::Boundary::all_dirichlet) {
    mesh.dirichlet[0] = mesh.dirichlet[cells] = true;
  } else {
    // Natural condition on the left end, essential on the right one.
    mesh.dirichlet[cells] = true;
  }

  for (int e = 0; e < cells; ++e) {
    const int nodes[2] = {e, e + 1};
    const double me[2][2] = {{h / 3.0, h / 6.0}, {h / 6.0, h / 3.0}};
    const double ke[2][2] = {{1.0 / h, -1.0 / h}, {-1.0 / h, 1.0 / h}};
    for (int a = 0; a < 2; ++a) {
      mesh.row_sum_exact[nodes[a]] += h / 2.0;
      for (int b = 0; b < 2; ++b) {
        mesh.mass.emplace_back(nodes[a], nodes[b], me[a][b]);
        mesh.stiffness.emplace_back(nodes[a], nodes[b], ke[a][b]);
      }
    }
  }
  return mesh;
}

MeshData build_square(int cells, FeProblem::Boundary boundary) {
  MeshData mesh;
  const double h = 1.0 / cells;
  const int per_side = cells + 1;
  mesh.node_count = per_side * per_side;
  mesh.x.resize(mesh.node_count);
  mesh.y.resize(mesh.node_count);
  mesh.dirichlet.assign(mesh.node_count, false);
  mesh.row_sum_exact.assign(mesh.node_count, 0.0);
  auto id = [per_side](int i, int j) { return j * per_side + i; };
  for (int j = 0; j < per_side; ++j)
    for (int i = 0; i < per_side; ++i) {
      mesh.x[id(i, j)] = i * h;
      mesh.y[id(i, j)] = j * h;
      const bool on_far_sides = (i == cells) || (j == cells);
      const bool on_any_side = on_far_sides || i == 0 || j == 0;
      if (boundary == FeProblem::Boundary::all_dirichlet ? on_any_side : on_far_sides)
        mesh.dirichlet[id(i, j)] = true;
    }

  auto add_triangle = [&mesh](const std::array<int, 3>& nodes, const std::array<double, 3>& px,
                              const std::array<double, 3>& py) {
    const double det =
        (px[1] - px[0]) * (py[2] - py[0]) - (px[2] - px[0]) * (py[1] - py[0]);
    const double area = std::abs(det) / 2.0;
    // Barycentric gradients.
    double gx[3], gy[3];
    gx[0] = (py[1] - py[2]) / det;
    gy[0] = (px[2] - px[1]) / det;
    gx[1] = (py[2] - py[0]) / det;
    gy[1] = (px[0] - px[2]) / det;
    gx[2] = (py[0] - py[1]) / det;
    gy[2] = (px[1] - px[0]) / det;
    for (int a = 0; a < 3; ++a) {
      mesh.row_sum_exact[nodes[a]] += area / 3.0;
      for (int b = 0; b < 3; ++b) {
        const double m = (a == b) ? area / 6.0 : area / 12.0;
        mesh.mass.emplace_back(nodes[a], nodes[b], m);
        mesh.stiffness.emplace_back(nodes[a], nodes[b], area * (gx[a] * gx[b] + gy[a] * gy[b]));
      }
    }
  };

  for (int j = 0; j < cells; ++j)
    for (int i = 0; i < cells; ++i) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      const double x0 = i * h, x1 = (i + 1) * h, y0 = j * h, y1 = (j + 1) * h;
      // Diagonal from the southwest to the northeast corner.
      add_triangle({a, b, c}, {x0, x1, x1}, {y0, y0, y1});
      add_triangle({a, c, d}, {x0, x1, x0}, {y0, y1, y1});
    }
  return mesh;
}

Eigen::SparseMatrix<double> assemble(const std::vector<Triplet>& triplets, int rows) {
  Eigen::SparseMatrix<double> out(rows, rows);
  out.setFromTriplets(triplets.begin(), triplets.end());
  out.makeCompressed();
  return out;
}

Eigen::SparseMatrix<double> restrict_to(const Eigen::SparseMatrix<double>& full,
                                        const std::vector<int>& keep) {
  std::vector<int> to_free(full.rows(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) to_free[keep[i]] = static_cast<int>(i);
  std::vector<Triplet> triplets;
  for (int col = 0; col < full.outerSize(); ++col) {
    if (to_free[col] < 0) continue;
    for (Eigen::SparseMatrix<double>::InnerIterator it(full, col); it; ++it) {
      if (to_free[it.row()] < 0) continue;
      triplets.emplace_back(to_free[it.row()], to_free[col], it.value());
    }
  }
  return assemble(triplets, static_cast<int>(keep.size()));
}

}  // namespace

FeProblem assemble_fe(FeProblem::Domain domain, int cells_per_side,
                      FeProblem::Boundary boundary, double nu) {
  if (cells_per_side < 2) throw InvalidArgument("assemble_fe: need at least 2 cells per side");
  if (!(nu > 0.0)) throw InvalidArgument("assemble_fe: diffusivity must be positive");

  MeshData mesh = domain == FeProblem::Domain::interval ? build_interval(cells_per_side, boundary)
                                                        : build_square(cells_per_side, boundary);

  FeProblem p;
  p.domain = domain;
  p.boundary = boundary;
  p.cells_per_side = cells_per_side;
  p.mesh_size = 1.0 / cells_per_side;
  p.nu = nu;
  p.node_x = std::move(mesh.x);
  p.node_y = std::move(mesh.y);
  p.mass_row_sum_exact = std::move(mesh.row_sum_exact);

  for (int i = 0; i < mesh.node_count; ++i)
    if (!mesh.dirichlet[i]) p.free_nodes.push_back(i);
  p.n_dofs = static_cast<int>(p.free_nodes.size());

  p.full_mass = assemble(mesh.mass, mesh.node_count);
  Eigen::SparseMatrix<double> full_stiffness = assemble(mesh.stiffness, mesh.node_count);
  p.mass = restrict_to(p.full_mass, p.free_nodes);
  p.stiffness = restrict_to(full_stiffness, p.free_nodes);

  p.mass_space_ = make_space(HilbertSpace::Kind::mass, p.mass);
  p.stiffness_space_ = make_space(HilbertSpace::Kind::stiffness, p.stiffness);
  return p;
}

Eigen::VectorXd FeProblem::interpolate(const std::function<double(double, double)>& f) const {
  Eigen::VectorXd v(n_dofs);
  for (int i = 0; i < n_dofs; ++i) {
    const int node = free_nodes[i];
    v(i) = f(node_x[node], node_y.empty() ? 0.0 : node_y[node]);
  }
  return v;
}

double poincare_constant(const FeProblem& problem) {
  const auto& a = problem.stiffness;
  const auto& m = problem.mass;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(a);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("poincare_constant: stiffness factorization failed");

  Eigen::VectorXd v = Eigen::VectorXd::Ones(problem.n_dofs);
  v /= std::sqrt(v.dot(m * v));
  double lambda = 0.0;
  const int max_iterations = 500;
  for (int it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd w = solver.solve(m * v);
    if (solver.info() != Eigen::Success)
      throw NumericFailure("poincare_constant: inverse iteration solve failed");
    w /= std::sqrt(w.dot(m * w));
    Eigen::VectorXd aw = a * w;
    lambda = w.dot(aw) / w.dot(m * w);
    double residual = (aw - lambda * (m * w)).norm() / aw.norm();
    v = w;
    if (residual <= 1e-10) return 1.0 / std::sqrt(lambda);
  }
  throw NumericFailure("poincare_constant: inverse iteration did not converge");
}

Trajectory heat_semidiscrete(const FeProblem& problem, const LoadSampler& forcing,
                             const Eigen::VectorXd& initial, const TimeGrid& grid,
                             int substeps) {
  if (substeps < 1) throw InvalidArgument("heat_semidiscrete: need at least one substep");
  if (initial.size() != problem.n_dofs)
    throw InvalidArgument("heat_semidiscrete: initial data has wrong dimension");

  const double delta = grid.step() / substeps;
  Eigen::SparseMatrix<double> lhs = problem.mass + (problem.nu * delta / 2.0) * problem.stiffness;
  Eigen::SparseMatrix<double> rhs = problem.mass - (problem.nu * delta / 2.0) * problem.stiffness;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lhs);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("heat_semidiscrete: factorization failed");

  Eigen::MatrixXd snapshots(problem.n_dofs, grid.node_count());
  snapshots.col(0) = initial;
  Eigen::VectorXd u = initial;
  for (int n = 1; n <= grid.intervals(); ++n) {
    const double t0 = grid.node(n - 1);
    for (int s = 0; s < substeps; ++s) {
      const double ta = t0 + s * delta;
      const double tb = ta + delta;
      Eigen::VectorXd load = 0.5 * delta * (forcing(ta) + forcing(tb));
      u = solver.solve(rhs * u + load);
      if (solver.info() != Eigen::Success)
        throw NumericFailure("heat_semidiscrete: time step solve failed");
    }
    snapshots.col(n) = u;
  }
  return Trajectory(grid, problem.mass_space(), std::move(snapshots), false);
}

}  // namespace podkit
