#include "podkit/seq_norms.hpp"

#include <cmath>

#include "podkit/errors.hpp"

namespace podkit {

namespace {

// One differencing sweep. Periodic sequences are stored as the period
// f_1..f_M (column n-1 holds level n) and wrap: the predecessor of level 1
// is level M. Plain sequences drop their first entry.
Eigen::MatrixXd diff_once(const Eigen::MatrixXd& level, double tau, bool periodic) {
  if (periodic) {
    const int m = static_cast<int>(level.cols());
    Eigen::MatrixXd next(level.rows(), m);
    next.col(0) = (level.col(0) - level.col(m - 1)) / tau;
    for (int n = 1; n < m; ++n) next.col(n) = (level.col(n) - level.col(n - 1)) / tau;
    return next;
  }
  const int count = static_cast<int>(level.cols()) - 1;
  Eigen::MatrixXd next(level.rows(), count);
  for (int n = 0; n < count; ++n) next.col(n) = (level.col(n + 1) - level.col(n)) / tau;
  return next;
}

double norm_sq(const HilbertSpace& space, const Eigen::VectorXd& v) {
  double q = space.inner(v, v);
  return q > 0.0 ? q : 0.0;
}

}  // namespace

DqSequence dq(const Trajectory& f, int order) {
  if (order < 0) throw InvalidArgument("dq: order must be nonnegative");
  const int m_intervals = f.grid().intervals();
  const double tau = f.grid().step();

  DqSequence out;
  out.order = order;
  if (order == 0) {
    out.first_index = 0;
    out.values = f.values();
    return out;
  }
  if (f.periodic()) {
    // Work on the period f_1..f_M; one wrap per sweep.
    Eigen::MatrixXd level = f.values().rightCols(m_intervals);
    for (int k = 0; k < order; ++k) level = diff_once(level, tau, true);
    out.first_index = 1;
    out.values = std::move(level);
    return out;
  }
  if (order > m_intervals)
    throw InvalidArgument("dq: order exceeds interval count on a non-periodic trajectory");
  Eigen::MatrixXd level = f.values();
  for (int k = 0; k < order; ++k) level = diff_once(level, tau, false);
  out.first_index = order;
  out.values = std::move(level);
  return out;
}

double seq_norm0(const Eigen::MatrixXd& sequence, const HilbertSpace& space, double tau,
                 SeqNormKind kind) {
  if (sequence.cols() == 0) throw InvalidArgument("seq_norm0: empty sequence");
  if (!(tau > 0.0)) throw InvalidArgument("seq_norm0: step must be positive");
  const int count = static_cast<int>(sequence.cols());
  double acc = 0.0;
  for (int n = 0; n < count; ++n) {
    double w = tau;
    if (kind == SeqNormKind::trapezoid && (n == 0 || n == count - 1)) w = tau / 2.0;
    acc += w * norm_sq(space, sequence.col(n));
  }
  return std::sqrt(acc);
}

double dq_norm0(const Trajectory& f, int order) {
  const double tau = f.grid().step();
  if (order == 0) {
    return seq_norm0(f.values(), f.space(), tau,
                     f.periodic() ? SeqNormKind::trapezoid : SeqNormKind::uniform);
  }
  DqSequence d = dq(f, order);
  return seq_norm0(d.values, f.space(), tau, SeqNormKind::uniform);
}

double weighted_dq_norm(const Trajectory& f, int order, int smoothness) {
  if (order < 0 || smoothness < 0)
    throw InvalidArgument("weighted_dq_norm: orders must be nonnegative");
  if (order + smoothness > f.grid().intervals())
    throw InvalidArgument("weighted_dq_norm: order + smoothness exceeds interval count");
  const Trajectory plain = f.periodic() ? f.as_general() : f;
  if (smoothness == 0) return dq_norm0(plain, order);
  double acc = 0.0;
  for (int j = order; j <= order + smoothness; ++j) {
    double nj = dq_norm0(plain, j);
    double tj = f.grid().tail_duration(j);
    acc += std::pow(tj, -2.0 * (smoothness + order - j)) * nj * nj;
  }
  return std::sqrt(acc);
}

Eigen::VectorXd tail_mean(const Trajectory& f, int order) {
  DqSequence d = dq(f.periodic() ? f.as_general() : f, order);
  return d.values.rowwise().mean();
}

double time_sobolev_norm(const DerivativeSampler& u, const HilbertSpace& space,
                         double duration, int order, int quad_points) {
  if (!(duration > 0.0)) throw InvalidArgument("time_sobolev_norm: duration must be positive");
  if (order < 0) throw InvalidArgument("time_sobolev_norm: order must be nonnegative");
  if (quad_points < 2) throw InvalidArgument("time_sobolev_norm: need at least 2 points");
  double acc = 0.0;
  for (int k = 0; k <= order; ++k) {
    double ik = time_l2_norm(u, space, duration, k, quad_points);
    acc += std::pow(duration, -2.0 * (order - k)) * ik * ik;
  }
  return std::sqrt(acc);
}

double time_l2_norm(const DerivativeSampler& u, const HilbertSpace& space, double duration,
                    int derivative_order, int quad_points) {
  if (quad_points < 2) throw InvalidArgument("time_l2_norm: need at least 2 points");
  const double h = duration / (quad_points - 1);
  double acc = 0.0;
  for (int q = 0; q < quad_points; ++q) {
    double t = q * h;
    double w = (q == 0 || q == quad_points - 1) ? h / 2.0 : h;
    acc += w * norm_sq(space, u(t, derivative_order));
  }
  return std::sqrt(acc);
}

}  // namespace podkit
