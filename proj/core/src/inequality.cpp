#include "podkit/inequality.hpp"

#include <algorithm>
#include <cmath>

#include "podkit/errors.hpp"

namespace podkit {

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::agmon: return "agmon";
    case LemmaId::agmon_dq: return "agmon_dq";
    case LemmaId::periodic_parts: return "periodic_parts";
    case LemmaId::periodic_interpolation: return "periodic_interpolation";
    case LemmaId::periodic_max: return "periodic_max";
    case LemmaId::general_parts: return "general_parts";
    case LemmaId::general_interpolation: return "general_interpolation";
    case LemmaId::general_max: return "general_max";
    case LemmaId::function_periodic_dq: return "function_periodic_dq";
    case LemmaId::function_periodic_max: return "function_periodic_max";
    case LemmaId::function_general_dq: return "function_general_dq";
    case LemmaId::function_general_max: return "function_general_max";
    case LemmaId::dq_derivative: return "dq_derivative";
    case LemmaId::dq_derivative_weighted: return "dq_derivative_weighted";
    case LemmaId::energy_identity: return "energy_identity";
    case LemmaId::cross_norm_identity: return "cross_norm_identity";
    case LemmaId::degraded_pointwise: return "degraded_pointwise";
    case LemmaId::tail_mean_bound: return "tail_mean_bound";
    case LemmaId::bdf2_energy: return "bdf2_energy";
  }
  return "unknown";
}

namespace {

const ConstantsTable& table_or_default(const ConstantsTable* table) {
  return table ? *table : default_constants();
}

// Subtract the snapshot mean. For periodic trajectories the mean is taken
// over one period f_1..f_M and the shift keeps f_0 = f_M intact.
Trajectory recenter(const Trajectory& f, double* mean_norm) {
  Eigen::MatrixXd values = f.values();
  Eigen::VectorXd mean;
  if (f.periodic()) {
    mean = values.rightCols(f.grid().intervals()).rowwise().mean();
  } else {
    mean = values.rowwise().mean();
  }
  values.colwise() -= mean;
  if (mean_norm) *mean_norm = f.space().norm(mean);
  return Trajectory(f.grid(), f.space_ptr(), std::move(values), f.periodic());
}

double max_snapshot_norm(const Trajectory& f, int* argmax = nullptr) {
  double best = 0.0;
  int best_n = 0;
  for (int n = 0; n < f.snapshot_count(); ++n) {
    double v = f.space().norm(f.values().col(n));
    if (v > best) {
      best = v;
      best_n = n;
    }
  }
  if (argmax) *argmax = best_n;
  return best;
}

}  // namespace

const ConstantsTable& default_constants() {
  static const ConstantsTable table(DhatSeed::c_b1);
  return table;
}

InequalityReport check_periodic(const Trajectory& f, PeriodicLemma lemma, int order,
                                const ConstantsTable* table) {
  if (!f.periodic()) throw InvalidArgument("check_periodic: trajectory is not periodic");
  const int m_intervals = f.grid().intervals();
  const BaseConstants& base = table_or_default(table).base();

  switch (lemma) {
    case PeriodicLemma::summation_by_parts: {
      if (order < 1 || order > m_intervals)
        throw InvalidArgument("summation by parts: need 1 <= k <= M");
      double lhs = dq_norm0(f, order);
      double rhs = std::sqrt(dq_norm0(f, order - 1) * dq_norm0(f, order + 1));
      InequalityReport r = InequalityReport::bound(LemmaId::periodic_parts, lhs, rhs);
      r.order_k = order;
      return r;
    }
    case PeriodicLemma::interpolation: {
      if (order < 2 || order > m_intervals)
        throw InvalidArgument("periodic interpolation: need 2 <= m <= M");
      const double m = order;
      double lhs = dq_norm0(f, 1);
      double rhs = std::pow(dq_norm0(f, 0), (m - 1.0) / m) * std::pow(dq_norm0(f, order), 1.0 / m);
      InequalityReport r = InequalityReport::bound(LemmaId::periodic_interpolation, lhs, rhs);
      r.order_m = order;
      return r;
    }
    case PeriodicLemma::max_estimate: {
      if (order < 1 || order > m_intervals)
        throw InvalidArgument("periodic max estimate: need 1 <= m <= M");
      double mean_norm = 0.0;
      Trajectory g = recenter(f, &mean_norm);
      const double m = order;
      int argmax = 0;
      double lhs = max_snapshot_norm(g, &argmax);
      double rhs = base.c_a * std::pow(dq_norm0(g, 0), 1.0 - 1.0 / (2.0 * m)) *
                   std::pow(dq_norm0(g, order), 1.0 / (2.0 * m));
      InequalityReport r = InequalityReport::bound(LemmaId::periodic_max, lhs, rhs);
      r.order_m = order;
      r.index_n = argmax;
      r.aux["mean_norm"] = mean_norm;
      return r;
    }
  }
  throw InvalidArgument("check_periodic: unknown lemma");
}

InequalityReport check_general(const Trajectory& f_in, GeneralLemma lemma, int order,
                               const ConstantsTable* table) {
  const Trajectory f = f_in.periodic() ? f_in.as_general() : f_in;
  const int m_intervals = f.grid().intervals();
  const ConstantsTable& constants = table_or_default(table);
  const BaseConstants& base = constants.base();

  switch (lemma) {
    case GeneralLemma::agmon: {
      double mean_norm = 0.0;
      Trajectory g = recenter(f, &mean_norm);
      int argmax = 0;
      double lhs = max_snapshot_norm(g, &argmax);
      double rhs = base.c_a * std::sqrt(dq_norm0(g, 0) * dq_norm0(g, 1));
      InequalityReport r = InequalityReport::bound(LemmaId::agmon, lhs, rhs);
      r.order_k = 1;
      r.index_n = argmax;
      r.aux["mean_norm"] = mean_norm;
      return r;
    }
    case GeneralLemma::agmon_dq: {
      if (order < 1 || order > m_intervals - 1)
        throw InvalidArgument("agmon for difference quotients: need 1 <= k <= M-1");
      DqSequence d = dq(f, order);
      double lhs = 0.0, lhs_interior = 0.0;
      int argmax = d.first_index;
      for (int n = d.first_index; n <= m_intervals; ++n) {
        double v = f.space().norm(d.at_level(n));
        if (v > lhs) {
          lhs = v;
          argmax = n;
        }
        if (n < m_intervals) lhs_interior = std::max(lhs_interior, v);
      }
      double rhs = base.c_a1 *
                   std::sqrt(dq_norm0(f, order) * weighted_dq_norm(f, order, 1));
      InequalityReport r = InequalityReport::bound(LemmaId::agmon_dq, lhs, rhs);
      r.order_k = order;
      r.index_n = argmax;
      // The stated index range stops one short of the final level; both
      // maxima are recorded so a failure only at n = M stays visible.
      r.aux["lhs_interior"] = lhs_interior;
      r.aux["lhs_last_level"] = f.space().norm(d.at_level(m_intervals));
      return r;
    }
    case GeneralLemma::summation_by_parts: {
      if (order < 1 || order > m_intervals - 1)
        throw InvalidArgument("general summation by parts: need 1 <= k <= M-1");
      double constant = (order == 1) ? base.c_b1 / std::sqrt(2.0) : base.c_b1;
      double lhs = dq_norm0(f, order);
      double rhs = constant * std::sqrt(dq_norm0(f, order - 1) * weighted_dq_norm(f, order, 1));
      InequalityReport r = InequalityReport::bound(LemmaId::general_parts, lhs, rhs);
      r.order_k = order;
      r.aux["constant"] = constant;
      return r;
    }
    case GeneralLemma::interpolation: {
      if (order < 2 || order > m_intervals)
        throw InvalidArgument("general interpolation: need 2 <= m <= M");
      const double m = order;
      double cm = constants.c_m(order);
      double lhs = dq_norm0(f, 1);
      double rhs = cm * std::pow(dq_norm0(f, 0), (m - 1.0) / m) *
                   std::pow(weighted_dq_norm(f, 1, order - 1), 1.0 / m);
      InequalityReport r = InequalityReport::bound(LemmaId::general_interpolation, lhs, rhs);
      r.order_m = order;
      r.aux["c_m"] = cm;
      return r;
    }
    case GeneralLemma::max_estimate: {
      if (order < 1 || order > m_intervals - 1)
        throw InvalidArgument("general max estimate: need 1 <= m <= M-1");
      double mean_norm = 0.0;
      Trajectory g = recenter(f, &mean_norm);
      const double m = order;
      double cm = constants.c_m(order);
      int argmax = 0;
      double lhs = max_snapshot_norm(g, &argmax);
      double rhs = base.c_a * std::sqrt(cm) * std::pow(dq_norm0(g, 0), 1.0 - 1.0 / (2.0 * m)) *
                   std::pow(weighted_dq_norm(g, 1, order - 1), 1.0 / (2.0 * m));
      InequalityReport r = InequalityReport::bound(LemmaId::general_max, lhs, rhs);
      r.order_m = order;
      r.index_n = argmax;
      r.aux["mean_norm"] = mean_norm;
      r.aux["c_m"] = cm;
      return r;
    }
  }
  throw InvalidArgument("check_general: unknown lemma");
}

namespace {

constexpr double kQuadratureSlack = 1e-8;

Eigen::MatrixXd sample_values(const DerivativeSampler& f, const TimeGrid& grid, int dim) {
  Eigen::MatrixXd values(dim, grid.node_count());
  for (int n = 0; n < grid.node_count(); ++n) values.col(n) = f(grid.node(n), 0);
  return values;
}

}  // namespace

FunctionTheoremChecks check_function_theorem(const DerivativeSampler& f, const TimeGrid& grid,
                                             std::shared_ptr<const HilbertSpace> space,
                                             FunctionTheoremVariant variant, int m,
                                             int quad_points, const ConstantsTable* table) {
  const ConstantsTable& constants = table_or_default(table);
  const BaseConstants& base = constants.base();
  const int m_intervals = grid.intervals();
  const double duration = grid.duration();
  const bool periodic = variant == FunctionTheoremVariant::periodic;
  if (periodic && (m < 1 || m > m_intervals - 1))
    throw InvalidArgument("function theorem (periodic): need 1 <= m <= M-1");
  if (!periodic && (m < 1 || m > m_intervals))
    throw InvalidArgument("function theorem (general): need 1 <= m <= M");

  Eigen::MatrixXd values = sample_values(f, grid, space->dim());
  if (periodic) {
    // Snap the endpoint so sampler roundoff cannot break the wrap.
    values.col(m_intervals) = values.col(0);
  }
  Trajectory seq(grid, space, std::move(values), periodic);

  double mean_norm = 0.0;
  Trajectory centered = recenter(seq, &mean_norm);
  double scale = max_snapshot_norm(seq);
  const bool zero_mean = mean_norm <= 1e-12 * std::max(scale, 1.0);

  const double seq0 = dq_norm0(seq, 0);
  const double dq1 = dq_norm0(seq, 1);
  const double md = static_cast<double>(m);
  const double tail = zero_mean ? 0.0 : seq0 / std::sqrt(duration);

  FunctionTheoremChecks out;
  if (periodic) {
    const double deriv = time_l2_norm(f, *space, duration, m, quad_points);
    double dq_rhs = std::pow(2.0, (md - 1.0) / md) * std::pow(md, 1.0 / md) *
                    std::pow(seq0, (md - 1.0) / md) * std::pow(deriv, 1.0 / md);
    out.dq_bound =
        InequalityReport::bound(LemmaId::function_periodic_dq, dq1, dq_rhs, kQuadratureSlack);
    double max_rhs = std::pow(2.0, (md - 1.0) / (2.0 * md)) * std::pow(md, 1.0 / (2.0 * md)) *
                         base.c_a * std::pow(seq0, 1.0 - 1.0 / (2.0 * md)) *
                         std::pow(deriv, 1.0 / (2.0 * md)) +
                     tail;
    out.pointwise_bound = InequalityReport::bound(LemmaId::function_periodic_max,
                                                  max_snapshot_norm(seq), max_rhs,
                                                  kQuadratureSlack);
  } else {
    DerivativeSampler dt_sampler = [&f](double t, int k) { return f(t, k + 1); };
    const double deriv = time_sobolev_norm(dt_sampler, *space, duration, m - 1, quad_points);
    const double cm = constants.c_m(m);
    double dq_rhs = std::pow(2.0, (md - 1.0) / md) * cm * std::pow(seq0, (md - 1.0) / md) *
                    std::pow(deriv, 1.0 / md);
    out.dq_bound =
        InequalityReport::bound(LemmaId::function_general_dq, dq1, dq_rhs, kQuadratureSlack);
    double max_rhs = std::pow(2.0, (md - 1.0) / (2.0 * md)) * base.c_a * std::sqrt(cm) *
                         std::pow(seq0, 1.0 - 1.0 / (2.0 * md)) *
                         std::pow(deriv, 1.0 / (2.0 * md)) +
                     tail;
    out.pointwise_bound = InequalityReport::bound(LemmaId::function_general_max,
                                                  max_snapshot_norm(seq), max_rhs,
                                                  kQuadratureSlack);
    out.dq_bound.aux["c_m"] = cm;
    out.pointwise_bound.aux["c_m"] = cm;
  }
  for (InequalityReport* r : {&out.dq_bound, &out.pointwise_bound}) {
    r->order_m = m;
    r->aux["mean_norm"] = mean_norm;
    r->aux["tail_term"] = tail;
  }
  return out;
}

InequalityReport check_dq_vs_derivative(const DerivativeSampler& f, const TimeGrid& grid,
                                        std::shared_ptr<const HilbertSpace> space, int k,
                                        int quad_points) {
  if (k < 1 || k > grid.intervals())
    throw InvalidArgument("check_dq_vs_derivative: need 1 <= k <= M");
  Trajectory seq(grid, space, sample_values(f, grid, space->dim()), false);
  double lhs = dq_norm0(seq, k);
  double rhs = k * time_l2_norm(f, *space, grid.duration(), k, quad_points);
  InequalityReport r = InequalityReport::bound(LemmaId::dq_derivative, lhs, rhs, kQuadratureSlack);
  r.order_k = k;
  return r;
}

InequalityReport check_weighted_dq_vs_derivative(const DerivativeSampler& f, const TimeGrid& grid,
                                                 std::shared_ptr<const HilbertSpace> space, int m,
                                                 int quad_points) {
  if (m < 2 || m > grid.intervals())
    throw InvalidArgument("check_weighted_dq_vs_derivative: need 2 <= m <= M");
  Trajectory seq(grid, space, sample_values(f, grid, space->dim()), false);
  DerivativeSampler dt_sampler = [&f](double t, int k) { return f(t, k + 1); };
  const double md = static_cast<double>(m);
  double lhs = std::pow(weighted_dq_norm(seq, 1, m - 1), 1.0 / md);
  double rhs =
      4.0 * std::pow(time_sobolev_norm(dt_sampler, *space, grid.duration(), m - 1, quad_points),
                     1.0 / md);
  InequalityReport r =
      InequalityReport::bound(LemmaId::dq_derivative_weighted, lhs, rhs, kQuadratureSlack);
  r.order_m = m;
  r.aux["internal_factor"] = std::exp(1.0 + std::exp(-1.0));
  return r;
}

Trajectory random_trajectory(std::mt19937_64& rng, std::shared_ptr<const HilbertSpace> space,
                             const TimeGrid& grid, bool periodic, int smoothing_passes,
                             bool zero_mean) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int n = space->dim();
  const int cols = grid.node_count();
  const int m_intervals = grid.intervals();
  Eigen::MatrixXd values(n, cols);
  for (int c = periodic ? 1 : 0; c < cols; ++c)
    for (int i = 0; i < n; ++i) values(i, c) = normal(rng);
  if (periodic) values.col(0) = values.col(cols - 1);

  for (int pass = 0; pass < smoothing_passes; ++pass) {
    Eigen::MatrixXd smooth = values;
    for (int c = 0; c < cols; ++c) {
      int prev = c - 1, next = c + 1;
      if (periodic) {
        if (prev < 0) prev = cols - 2;  // level M-1, since col 0 == col M
        if (next >= cols) next = 1;
      } else {
        prev = std::max(prev, 0);
        next = std::min(next, cols - 1);
      }
      smooth.col(c) = 0.25 * values.col(prev) + 0.5 * values.col(c) + 0.25 * values.col(next);
    }
    values = std::move(smooth);
    if (periodic) values.col(0) = values.col(cols - 1);
  }

  if (zero_mean) {
    Eigen::VectorXd mean = periodic ? values.rightCols(m_intervals).rowwise().mean().eval()
                                    : values.rowwise().mean().eval();
    values.colwise() -= mean;
  }
  return Trajectory(grid, std::move(space), std::move(values), periodic);
}

namespace {

InequalityReport evaluate_query(const SharpnessQuery& query, const Trajectory& traj,
                                const ConstantsTable* table) {
  if (query.use_periodic) return check_periodic(traj, query.periodic_lemma, query.order, table);
  return check_general(traj, query.general_lemma, query.order, table);
}

}  // namespace

InequalityReport sharpness_search(const SharpnessQuery& query, const ConstantsTable* table) {
  if (query.trials < 1) throw InvalidArgument("sharpness_search: need at least one trial");
  auto space = make_euclidean_space(query.dim);
  TimeGrid grid(1.0, query.intervals);
  std::mt19937_64 rng(query.seed);

  Eigen::MatrixXd best_values;
  InequalityReport best;
  best.ratio = -1.0;

  auto consider = [&](const Eigen::MatrixXd& values) {
    Trajectory traj(grid, space, values, query.use_periodic);
    InequalityReport r = evaluate_query(query, traj, table);
    if (std::isfinite(r.ratio) && r.ratio > best.ratio) {
      best = r;
      best_values = values;
    }
  };

  // The alternating sequence attains equality in the periodic
  // summation-by-parts bound, so it seeds that search.
  if (query.use_periodic && query.periodic_lemma == PeriodicLemma::summation_by_parts &&
      query.intervals % 2 == 0) {
    Eigen::MatrixXd alt = Eigen::MatrixXd::Zero(query.dim, grid.node_count());
    for (int c = 0; c < grid.node_count(); ++c) alt(0, c) = (c % 2 == 0) ? 1.0 : -1.0;
    consider(alt);
  }

  for (int t = 0; t < query.trials; ++t)
    consider(random_trajectory(rng, space, grid, query.use_periodic).values());
  if (best_values.size() == 0) return best;

  // Coordinate-wise hill climb around the best candidate.
  double step = 0.25;
  for (int sweep = 0; sweep < query.refine_sweeps; ++sweep) {
    bool improved = false;
    const int first_col = query.use_periodic ? 1 : 0;
    for (int c = first_col; c < grid.node_count(); ++c) {
      for (int i = 0; i < query.dim; ++i) {
        for (double sign : {1.0, -1.0}) {
          Eigen::MatrixXd candidate = best_values;
          candidate(i, c) += sign * step;
          if (query.use_periodic) candidate.col(0) = candidate.col(grid.node_count() - 1);
          Trajectory traj(grid, space, candidate, query.use_periodic);
          InequalityReport r = evaluate_query(query, traj, table);
          if (std::isfinite(r.ratio) && r.ratio > best.ratio * (1.0 + 1e-14)) {
            best = r;
            best_values = candidate;
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
    if (step < 1e-6) break;
  }

  best.aux["trials"] = static_cast<double>(query.trials);
  best.aux["seed"] = static_cast<double>(query.seed);
  return best;
}

}  // namespace podkit
