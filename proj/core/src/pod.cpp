#include "podkit/pod.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "podkit/errors.hpp"

namespace podkit {

namespace {

// Retained snapshots, shifted by the stored mean when one was removed.
Eigen::MatrixXd retained_snapshots(const Trajectory& traj, int first_snapshot,
                                   const Eigen::VectorXd& mean) {
  Eigen::MatrixXd u = traj.values().rightCols(traj.snapshot_count() - first_snapshot);
  if (mean.size() > 0) u.colwise() -= mean;
  return u;
}

}  // namespace

CorrelationMatrix build_correlation(const Trajectory& traj, const HilbertSpace& space,
                                    bool drop_first, bool subtract_mean) {
  if (traj.space().dim() != space.dim())
    throw InvalidArgument("build_correlation: dimension mismatch");
  if (drop_first && traj.snapshot_count() < 2)
    throw InvalidArgument("build_correlation: dropping the first snapshot needs at least two");

  CorrelationMatrix corr;
  corr.drop_first = drop_first;
  corr.first_snapshot = drop_first ? 1 : 0;
  corr.snapshot_count = traj.snapshot_count() - corr.first_snapshot;
  corr.weight = 1.0 / corr.snapshot_count;
  corr.mean_subtracted = subtract_mean;

  Eigen::MatrixXd u = traj.values().rightCols(corr.snapshot_count);
  if (subtract_mean) {
    corr.mean = u.rowwise().mean();
    u.colwise() -= corr.mean;
  }
  Eigen::MatrixXd gu = space.apply(u);
  corr.entries = corr.weight * (u.transpose() * gu);
  // Make the Gram products exactly symmetric entry by entry.
  corr.entries = 0.5 * (corr.entries + corr.entries.transpose()).eval();
  return corr;
}

PodBasis compute_pod(const CorrelationMatrix& corr, const Trajectory& traj,
                     std::shared_ptr<const HilbertSpace> space, double rank_tol) {
  if (traj.space().dim() != space->dim())
    throw InvalidArgument("compute_pod: dimension mismatch");
  if (corr.first_snapshot + corr.snapshot_count != traj.snapshot_count())
    throw InvalidArgument("compute_pod: correlation was built from a different trajectory");

  // The eigenproblem runs in extended precision: the exact-identity checks
  // compare deep eigenvalue tails against measured residual energies, and a
  // double-precision solve leaves an eps * lambda_1 mismatch per mode that
  // those checks can see.
  using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::SelfAdjointEigenSolver<LongMatrix> eig(corr.entries.cast<long double>());
  if (eig.info() != Eigen::Success)
    throw NumericFailure("compute_pod: eigendecomposition failed");

  const int s = corr.snapshot_count;
  const Eigen::VectorXd lambda = eig.eigenvalues().cast<double>();  // ascending
  const double lambda_max = lambda(s - 1);

  PodBasis basis;
  basis.space = space;
  basis.weight = corr.weight;
  basis.first_snapshot = corr.first_snapshot;
  basis.source_count = s;
  basis.drop_first = corr.drop_first;
  basis.mean_subtracted = corr.mean_subtracted;
  basis.mean = corr.mean;

  if (!(lambda_max > 0.0)) {
    basis.rank = 0;
    basis.sigma.resize(0);
    basis.modes.resize(space->dim(), 0);
    return basis;
  }

  int rank = 0;
  for (int i = 0; i < s; ++i)
    if (lambda(i) > rank_tol * lambda_max) ++rank;

  Eigen::MatrixXd u = retained_snapshots(traj, corr.first_snapshot, corr.mean);
  basis.rank = rank;
  basis.sigma.resize(rank);
  basis.modes.resize(space->dim(), rank);
  const LongMatrix u_long = u.cast<long double>();
  for (int k = 0; k < rank; ++k) {
    const int src = s - 1 - k;  // descending order
    basis.sigma(k) = std::sqrt(lambda(src));
    const long double factor = std::sqrt(static_cast<long double>(corr.weight)) /
                               std::sqrt(eig.eigenvalues()(src));
    basis.modes.col(k) = (factor * (u_long * eig.eigenvectors().col(src))).cast<double>();
  }

  // Lifting through ill-separated singular values leaves the deep modes
  // orthonormal only to eps * lambda_1 / lambda_J. Two Gram-Schmidt sweeps in
  // the X product restore machine-level orthonormality without leaving the
  // span; the exact-identity checks depend on it.
  for (int pass = 0; pass < 2; ++pass) {
    for (int k = 0; k < rank; ++k) {
      for (int i = 0; i < k; ++i) {
        const Eigen::VectorXd gphi = space->apply(Eigen::VectorXd(basis.modes.col(k)));
        basis.modes.col(k) -= basis.modes.col(i).dot(gphi) * basis.modes.col(i);
      }
      const Eigen::VectorXd gphi = space->apply(Eigen::VectorXd(basis.modes.col(k)));
      const double norm = std::sqrt(basis.modes.col(k).dot(gphi));
      if (norm > 0.0) basis.modes.col(k) /= norm;
    }
  }

  // Sign convention for reproducible serialization: first coordinate of
  // non-negligible size is positive.
  for (int k = 0; k < rank; ++k) {
    const double scale = basis.modes.col(k).cwiseAbs().maxCoeff();
    for (int i = 0; i < basis.modes.rows(); ++i) {
      double v = basis.modes(i, k);
      if (std::abs(v) > 1e-12 * scale) {
        if (v < 0.0) basis.modes.col(k) = -basis.modes.col(k);
        break;
      }
    }
  }
  return basis;
}

PodBasis pod_from_trajectory(const Trajectory& traj, std::shared_ptr<const HilbertSpace> space,
                             bool drop_first, bool subtract_mean, double rank_tol) {
  CorrelationMatrix corr = build_correlation(traj, *space, drop_first, subtract_mean);
  return compute_pod(corr, traj, std::move(space), rank_tol);
}

double PodBasis::sigma_tail(int r) const {
  if (r < 0 || r > rank) throw InvalidArgument("sigma_tail: retained count out of range");
  double acc = 0.0;
  for (int k = rank - 1; k >= r; --k) acc += sigma(k) * sigma(k);
  return acc;
}

Eigen::VectorXd project(const PodBasis& basis, int r, const Eigen::VectorXd& v) {
  if (r < 0 || r > basis.rank) throw InvalidArgument("project: retained count out of range");
  if (v.size() != basis.space->dim()) throw InvalidArgument("project: dimension mismatch");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  if (r == 0) return out;
  Eigen::VectorXd gv = basis.space->apply(v);
  Eigen::VectorXd coeff = basis.modes.leftCols(r).transpose() * gv;
  return basis.modes.leftCols(r) * coeff;
}

ProjectionErrorSeries projection_error_series(const PodBasis& basis, int r,
                                              const Trajectory& traj,
                                              const HilbertSpace& measure) {
  if (measure.dim() != basis.space->dim())
    throw InvalidArgument("projection_error_series: dimension mismatch");
  Eigen::MatrixXd u = retained_snapshots(traj, basis.first_snapshot, basis.mean);

  ProjectionErrorSeries series;
  series.first_snapshot = basis.first_snapshot;
  series.errors.resize(u.cols());
  double sum_sq = 0.0;
  for (int n = 0; n < u.cols(); ++n) {
    Eigen::VectorXd residual = u.col(n) - project(basis, r, u.col(n));
    double e = measure.norm(residual);
    series.errors[n] = e;
    series.max_error = std::max(series.max_error, e);
    sum_sq += e * e;
  }
  series.quadratic_mean = std::sqrt(sum_sq / u.cols());
  return series;
}

InequalityReport verify_energy_identity(const PodBasis& basis, const Trajectory& traj, int r) {
  ProjectionErrorSeries series = projection_error_series(basis, r, traj, *basis.space);
  long double lhs = 0.0L;
  for (double e : series.errors) lhs += static_cast<long double>(e) * e;
  lhs *= basis.weight;
  InequalityReport report = InequalityReport::identity(
      LemmaId::energy_identity, static_cast<double>(lhs), basis.sigma_tail(r));
  report.order_k = r;
  return report;
}

double cross_norm_tail(const PodBasis& basis, int r, const HilbertSpace& other) {
  if (other.dim() != basis.space->dim()) throw InvalidArgument("cross_norm_tail: dimension mismatch");
  if (r < 0 || r > basis.rank) throw InvalidArgument("cross_norm_tail: retained count out of range");
  double acc = 0.0;
  for (int k = basis.rank - 1; k >= r; --k) {
    double mode_norm = other.norm(basis.modes.col(k));
    acc += basis.sigma(k) * basis.sigma(k) * mode_norm * mode_norm;
  }
  return acc;
}

Eigen::VectorXd mode_norms(const PodBasis& basis, const HilbertSpace& other) {
  if (other.dim() != basis.space->dim()) throw InvalidArgument("mode_norms: dimension mismatch");
  Eigen::VectorXd norms(basis.rank);
  for (int k = 0; k < basis.rank; ++k) norms(k) = other.norm(basis.modes.col(k));
  return norms;
}

}  // namespace podkit
