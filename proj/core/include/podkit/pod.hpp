#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "podkit/inequality_report.hpp"
#include "podkit/trajectory.hpp"

namespace podkit {

/// Weighted snapshot correlation matrix, entries_ij = weight * (u^i, u^j)_X
/// over the retained (optionally mean-subtracted) snapshots. Dropping the
/// first snapshot is the periodic-orbit convention; the weight then becomes
/// 1/M instead of 1/(M+1).
struct CorrelationMatrix {
  Eigen::MatrixXd entries;
  double weight = 0.0;
  int first_snapshot = 0;
  int snapshot_count = 0;
  bool drop_first = false;
  bool mean_subtracted = false;
  Eigen::VectorXd mean;  // zero-sized when no mean was removed
};

CorrelationMatrix build_correlation(const Trajectory& traj, const HilbertSpace& space,
                                    bool drop_first = false, bool subtract_mean = false);

/// POD basis from the method of snapshots: sigma are the singular values in
/// descending order, modes are X-orthonormal, rank counts the eigenvalues
/// above rank_tol relative to the largest one.
struct PodBasis {
  std::shared_ptr<const HilbertSpace> space;
  int rank = 0;
  Eigen::VectorXd sigma;
  Eigen::MatrixXd modes;  // dim x rank
  double weight = 0.0;
  int first_snapshot = 0;
  int source_count = 0;
  bool drop_first = false;
  bool mean_subtracted = false;
  Eigen::VectorXd mean;

  /// sum_{k > r} sigma_k^2.
  double sigma_tail(int r) const;
};

PodBasis compute_pod(const CorrelationMatrix& corr, const Trajectory& traj,
                     std::shared_ptr<const HilbertSpace> space, double rank_tol = 1e-12);

/// build_correlation followed by compute_pod.
PodBasis pod_from_trajectory(const Trajectory& traj, std::shared_ptr<const HilbertSpace> space,
                             bool drop_first = false, bool subtract_mean = false,
                             double rank_tol = 1e-12);

/// Orthogonal projection onto the span of the first r modes.
Eigen::VectorXd project(const PodBasis& basis, int r, const Eigen::VectorXd& v);

struct ProjectionErrorSeries {
  std::vector<double> errors;  // one per retained snapshot
  int first_snapshot = 0;
  double max_error = 0.0;
  double quadratic_mean = 0.0;
};

/// Per-snapshot projection errors of the retained (mean-adjusted) snapshots,
/// measured in an arbitrary space.
ProjectionErrorSeries projection_error_series(const PodBasis& basis, int r,
                                              const Trajectory& traj,
                                              const HilbertSpace& measure);

/// weight * sum_n ||u^n - P_r u^n||_X^2  ==  sum_{k>r} sigma_k^2, checked to
/// 1e-10 relative (1e-14 absolute when the tail is empty).
InequalityReport verify_energy_identity(const PodBasis& basis, const Trajectory& traj, int r);

/// sum_{k>r} sigma_k^2 ||phi^k||_other^2, the tail that replaces the plain
/// sigma tail when projection errors are measured in another norm.
double cross_norm_tail(const PodBasis& basis, int r, const HilbertSpace& other);

/// ||phi^k||_other for k = 1..rank.
Eigen::VectorXd mode_norms(const PodBasis& basis, const HilbertSpace& other);

}  // namespace podkit
