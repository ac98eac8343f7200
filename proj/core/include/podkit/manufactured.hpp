#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "podkit/fem.hpp"
#include "podkit/seq_norms.hpp"
#include "podkit/trajectory.hpp"

namespace podkit {

/// Closed-form modal coefficients with derivatives of every order.
struct HarmonicCoefficient {
  double amplitude = 1.0;
  double angular_frequency = 1.0;
  double phase = 0.0;
};

struct PolynomialCoefficient {
  std::vector<double> coefficients;  // sum_p c_p t^p
};

struct ExponentialCoefficient {
  double amplitude = 1.0;
  double rate = 1.0;
};

using TimeCoefficient =
    std::variant<HarmonicCoefficient, PolynomialCoefficient, ExponentialCoefficient>;

double coefficient_value(const TimeCoefficient& c, double t, int order);

/// Trajectory u(t) = sum_i a_i(t) * profile_i with analytically known time
/// derivatives of every order. Stands in for the paper-scale snapshot source
/// at desk scale.
struct ManufacturedSpec {
  std::vector<TimeCoefficient> coefficients;
  Eigen::MatrixXd profiles;  // dim x mode count
  bool periodic = false;
};

struct ManufacturedTrajectory {
  Trajectory trajectory;
  DerivativeSampler sampler;
};

DerivativeSampler spec_sampler(const ManufacturedSpec& spec);

ManufacturedTrajectory manufactured_trajectory(const ManufacturedSpec& spec,
                                               std::shared_ptr<const HilbertSpace> space,
                                               const TimeGrid& grid);

/// Load sampler F(t) = M u'(t) + nu A u(t), so the exact semidiscrete heat
/// solution for this forcing is the manufactured u itself.
LoadSampler manufactured_heat_forcing(const ManufacturedSpec& spec, const FeProblem& problem);

}  // namespace podkit
