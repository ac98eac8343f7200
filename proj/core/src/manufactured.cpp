#include "podkit/manufactured.hpp"

#include <cmath>

#include "podkit/errors.hpp"

namespace podkit {

double coefficient_value(const TimeCoefficient& c, double t, int order) {
  if (order < 0) throw InvalidArgument("coefficient_value: order must be nonnegative");
  if (const auto* h = std::get_if<HarmonicCoefficient>(&c)) {
    const double shift = order * M_PI / 2.0;
    return h->amplitude * std::pow(h->angular_frequency, order) *
           std::sin(h->angular_frequency * t + h->phase + shift);
  }
  if (const auto* p = std::get_if<PolynomialCoefficient>(&c)) {
    double acc = 0.0;
    for (std::size_t deg = order; deg < p->coefficients.size(); ++deg) {
      double factor = 1.0;
      for (int j = 0; j < order; ++j) factor *= static_cast<double>(deg - j);
      acc += p->coefficients[deg] * factor * std::pow(t, static_cast<double>(deg - order));
    }
    return acc;
  }
  const auto& e = std::get<ExponentialCoefficient>(c);
  return e.amplitude * std::pow(e.rate, order) * std::exp(e.rate * t);
}

DerivativeSampler spec_sampler(const ManufacturedSpec& spec) {
  return [spec](double t, int order) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(spec.profiles.rows());
    for (std::size_t i = 0; i < spec.coefficients.size(); ++i)
      out += coefficient_value(spec.coefficients[i], t, order) * spec.profiles.col(i);
    return out;
  };
}

ManufacturedTrajectory manufactured_trajectory(const ManufacturedSpec& spec,
                                               std::shared_ptr<const HilbertSpace> space,
                                               const TimeGrid& grid) {
  if (spec.profiles.cols() != static_cast<Eigen::Index>(spec.coefficients.size()))
    throw InvalidArgument("manufactured_trajectory: one profile per coefficient required");
  if (spec.profiles.rows() != space->dim())
    throw InvalidArgument("manufactured_trajectory: profile dimension mismatch");
  DerivativeSampler sampler = spec_sampler(spec);
  Eigen::MatrixXd values(space->dim(), grid.node_count());
  for (int n = 0; n < grid.node_count(); ++n) values.col(n) = sampler(grid.node(n), 0);
  if (spec.periodic) values.col(grid.intervals()) = values.col(0);
  Trajectory traj(grid, std::move(space), std::move(values), spec.periodic);
  return {std::move(traj), std::move(sampler)};
}

LoadSampler manufactured_heat_forcing(const ManufacturedSpec& spec, const FeProblem& problem) {
  if (spec.profiles.rows() != problem.n_dofs)
    throw InvalidArgument("manufactured_heat_forcing: profile dimension mismatch");
  DerivativeSampler sampler = spec_sampler(spec);
  const Eigen::SparseMatrix<double> mass = problem.mass;
  const Eigen::SparseMatrix<double> stiffness = problem.stiffness;
  const double nu = problem.nu;
  return [sampler, mass, stiffness, nu](double t) {
    return (mass * sampler(t, 1) + nu * (stiffness * sampler(t, 0))).eval();
  };
}

}  // namespace podkit
