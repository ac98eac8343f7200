#pragma once

#include <functional>

#include <Eigen/Dense>

#include "podkit/trajectory.hpp"

namespace podkit {

enum class SeqNormKind { uniform, trapezoid };

/// Backward difference quotients D^k f_n stored column-wise. first_index is
/// the time level of column 0: k for a plain sequence, 1 for a periodic one
/// of order >= 1 (indices wrap, so levels 1..M carry one full period).
struct DqSequence {
  int order = 0;
  int first_index = 0;
  Eigen::MatrixXd values;

  int count() const { return static_cast<int>(values.cols()); }
  Eigen::VectorXd at_level(int n) const { return values.col(n - first_index); }
};

DqSequence dq(const Trajectory& f, int order);

/// Weighted root-sum-square tau * sum ||f_n||^2 over the whole sequence, with
/// trapezoid halving the two endpoint weights.
double seq_norm0(const Eigen::MatrixXd& sequence, const HilbertSpace& space, double tau,
                 SeqNormKind kind = SeqNormKind::uniform);

/// || D^k f_tau ||_0. Plain sequences sum levels k..M (all of them for k = 0);
/// periodic ones sum the period 1..M, which for k = 0 equals the trapezoid norm.
double dq_norm0(const Trajectory& f, int order);

/// Scale-weighted family || D^k f_tau ||_m built from the tail durations T_j.
/// Defined on the plain sequence; the periodic flag is not used. m = 0 falls
/// back to dq_norm0.
double weighted_dq_norm(const Trajectory& f, int order, int smoothness);

/// Arithmetic mean of (D^k f_n), n = k..M.
Eigen::VectorXd tail_mean(const Trajectory& f, int order);

/// Time-derivative oracle: sampler(t, k) returns the k-th time derivative
/// vector at time t. Order 0 is the function value itself.
using DerivativeSampler = std::function<Eigen::VectorXd(double, int)>;

/// Composite-trapezoid evaluation of the scale-weighted Bochner norm
/// ( sum_{k<=m} T^{-2(m-k)} int_0^T ||d^k u / dt^k||_X^2 dt )^{1/2}.
double time_sobolev_norm(const DerivativeSampler& u, const HilbertSpace& space,
                         double duration, int order, int quad_points);

/// ( int_0^T || d^k u / dt^k ||_X^2 dt )^{1/2} by composite trapezoid.
double time_l2_norm(const DerivativeSampler& u, const HilbertSpace& space, double duration,
                    int derivative_order, int quad_points);

}  // namespace podkit
