#include "podkit/bounds.hpp"

#include <cmath>

#include "podkit/errors.hpp"

namespace podkit {

namespace {

constexpr double kDominanceRelTol = 1e-10;
constexpr double kDominanceAbsTol = 1e-14;

bool all_entries_pass(const std::map<int, BoundEntry>& entries) {
  for (const auto& [m, entry] : entries)
    if (!entry.pass) return false;
  return true;
}

}  // namespace

BoundEntry BoundEntry::make(double rhs, double measured) {
  BoundEntry e;
  e.rhs = rhs;
  e.measured = measured;
  e.pass = measured <= rhs * (1.0 + kDominanceRelTol) + kDominanceAbsTol;
  e.overestimation = InequalityReport::make_ratio(rhs, measured);
  return e;
}

bool BoundReport::all_pass() const {
  return thm1.pass && degraded_baseline.pass && all_entries_pass(thm2) && all_entries_pass(thm3) &&
         all_entries_pass(esti1) && all_entries_pass(esti2) && all_entries_pass(diferente1) &&
         all_entries_pass(diferente2) && all_entries_pass(rho) && all_entries_pass(mu) &&
         all_entries_pass(thm_heat_euler) && all_entries_pass(thm_heat_bdf2);
}

BoundReport bound_report(const FeProblem& problem, const PodBasis& basis, int r,
                         const Trajectory& reference, const DerivativeSampler& sampler,
                         const BoundOptions& options) {
  if (r < 0 || r > basis.rank) throw InvalidArgument("bound_report: rank out of range");
  const TimeGrid& grid = reference.grid();
  const int m_intervals = grid.intervals();
  const double duration = grid.duration();
  const double tau = grid.step();
  for (int m : options.m_list)
    if (m < 1 || m > m_intervals - 1)
      throw InvalidArgument("bound_report: smoothness order out of admissible range");

  const HilbertSpace& x_space = *basis.space;
  const HilbertSpace& l2 = *problem.mass_space();
  const bool stiffness_basis = x_space.kind() == HilbertSpace::Kind::stiffness;
  const ConstantsTable table(options.cm_seed);
  const BaseConstants base = table.base();

  BoundReport report;
  report.gram_kind = gram_kind_name(x_space.kind());
  report.rank = r;
  report.intervals = m_intervals;
  report.duration = duration;
  report.periodic = reference.periodic();
  report.source_count = basis.source_count;
  report.cm_source = cm_source_name(options.cm_source);
  report.cm_seed = dhat_seed_name(options.cm_seed);

  report.sigma_tail = basis.sigma_tail(r);
  report.gamma_r = std::sqrt(report.sigma_tail);
  report.cross_tail = cross_norm_tail(basis, r, l2);
  report.cross_gamma_r = std::sqrt(report.cross_tail);

  // Zero mean of the retained snapshot sequence: exact by construction when
  // the basis subtracted it, detected otherwise.
  Eigen::MatrixXd shifted = reference.values();
  if (basis.mean_subtracted) shifted.colwise() -= basis.mean;
  {
    Eigen::VectorXd mean =
        shifted.rightCols(m_intervals + 1 - basis.first_snapshot).rowwise().mean();
    double scale = 0.0;
    for (int n = 0; n < shifted.cols(); ++n) scale = std::max(scale, x_space.norm(shifted.col(n)));
    report.zero_mean =
        basis.mean_subtracted || x_space.norm(mean) <= 1e-12 * std::max(scale, 1.0);
  }

  // Measured quantities: pointwise projection residuals and their DQs.
  {
    std::vector<Eigen::VectorXd> residuals(m_intervals + 1);
    for (int n = 0; n <= m_intervals; ++n)
      residuals[n] = shifted.col(n) - project(basis, r, shifted.col(n));
    for (int n = basis.first_snapshot; n <= m_intervals; ++n) {
      report.max_pointwise_error = std::max(report.max_pointwise_error, x_space.norm(residuals[n]));
      report.max_pointwise_error_l2 =
          std::max(report.max_pointwise_error_l2, l2.norm(residuals[n]));
    }
    double acc_x = 0.0, acc_l2 = 0.0;
    for (int n = 1; n <= m_intervals; ++n) {
      Eigen::VectorXd d = (residuals[n] - residuals[n - 1]) / tau;
      acc_x += tau * x_space.inner(d, d);
      acc_l2 += tau * l2.inner(d, d);
    }
    report.dq_error_x = std::sqrt(std::max(acc_x, 0.0));
    report.dq_error_l2 = std::sqrt(std::max(acc_l2, 0.0));
  }

  // Time integrals of the projected derivative tails, one trapezoid sweep
  // per derivative order: || (I-P) d^k u ||^2 in X and L2, plus the raw L2
  // norm of d^k u feeding the time-discretization terms.
  int max_order = 1;
  for (int m : options.m_list) max_order = std::max(max_order, m);
  const bool run_rom = options.run_rom && stiffness_basis && !basis.mean_subtracted;
  if (run_rom) max_order = std::max(max_order, 3);
  std::vector<double> tail_x(max_order + 1, 0.0), tail_l2(max_order + 1, 0.0),
      raw_l2(max_order + 1, 0.0);
  {
    const int q = options.quad_points;
    const double h = duration / (q - 1);
    for (int qi = 0; qi < q; ++qi) {
      const double t = qi * h;
      const double w = (qi == 0 || qi == q - 1) ? h / 2.0 : h;
      for (int k = 1; k <= max_order; ++k) {
        Eigen::VectorXd d = sampler(t, k);
        Eigen::VectorXd res = d - project(basis, r, d);
        tail_x[k] += w * x_space.inner(res, res);
        tail_l2[k] += w * l2.inner(res, res);
        raw_l2[k] += w * l2.inner(d, d);
      }
    }
  }
  auto sobolev_tail = [&](int m, const std::vector<double>& tail) {
    // || (I-P) du/dt ||_{H^{m-1}(0,T,.)}
    double acc = 0.0;
    for (int k = 0; k <= m - 1; ++k)
      acc += std::pow(duration, -2.0 * (m - 1 - k)) * tail[k + 1];
    return std::sqrt(acc);
  };

  const double tail1_x = report.zero_mean ? 0.0 : report.gamma_r / std::sqrt(duration);
  const double tail1_cross = report.zero_mean ? 0.0 : report.cross_gamma_r / std::sqrt(duration);

  report.thm1 = BoundEntry::make(
      base.c_a * std::pow(report.sigma_tail, 0.25) * std::sqrt(std::sqrt(tail_x[1])) + tail1_x,
      report.max_pointwise_error);
  report.degraded_baseline = BoundEntry::make(
      std::sqrt(static_cast<double>(basis.source_count)) * report.gamma_r,
      report.max_pointwise_error);

  if (stiffness_basis) report.poincare = poincare_constant(problem);

  for (int m : options.m_list) {
    const double md = m;
    const double cm = c_m_value(m, options.cm_source, table);
    report.cm_values[m] = cm;
    const double hx = sobolev_tail(m, tail_x);
    const double hl2 = sobolev_tail(m, tail_l2);

    report.thm2[m] = BoundEntry::make(
        std::sqrt(2.0) * base.c_a * std::sqrt(cm) *
                std::pow(report.sigma_tail, 0.5 - 1.0 / (4.0 * md)) *
                std::pow(hx, 1.0 / (2.0 * md)) +
            tail1_x,
        report.max_pointwise_error);
    report.thm3[m] = BoundEntry::make(
        2.0 * cm * std::pow(report.sigma_tail, (md - 1.0) / (2.0 * md)) * std::pow(hx, 1.0 / md),
        report.dq_error_x);
    report.diferente1[m] = BoundEntry::make(
        std::sqrt(2.0) * base.c_a * std::sqrt(cm) *
                std::pow(report.cross_tail, 0.5 - 1.0 / (4.0 * md)) *
                std::pow(hl2, 1.0 / (2.0 * md)) +
            tail1_cross,
        report.max_pointwise_error_l2);
    report.diferente2[m] = BoundEntry::make(
        2.0 * cm * std::pow(report.cross_tail, (md - 1.0) / (2.0 * md)) * std::pow(hl2, 1.0 / md),
        report.dq_error_l2);

    if (report.periodic) {
      const double dm_x = std::sqrt(tail_x[m]);   // ||(I-P) d^m u||_{L2(0,T,X)}
      const double dm_l2 = std::sqrt(tail_l2[m]);
      report.esti1[m] = BoundEntry::make(
          std::sqrt(2.0) * base.c_a * std::pow(report.sigma_tail, 0.5 - 1.0 / (4.0 * md)) *
                  std::pow(dm_x, 1.0 / (2.0 * md)) +
              tail1_x,
          report.max_pointwise_error);
      report.esti2[m] = BoundEntry::make(
          2.0 * std::pow(report.sigma_tail, 0.5 - 1.0 / (2.0 * md)) * std::pow(dm_x, 1.0 / md),
          report.dq_error_x);
      report.mu[m] = BoundEntry::make(
          2.0 * std::pow(report.cross_tail, 0.5 - 1.0 / (2.0 * md)) * std::pow(dm_l2, 1.0 / md),
          report.dq_error_l2);
      if (stiffness_basis) {
        report.rho[m] = BoundEntry::make(
            2.0 * report.poincare * std::pow(report.sigma_tail, 0.5 - 1.0 / (2.0 * md)) *
                std::pow(dm_x, 1.0 / md),
            report.dq_error_l2);
      }
    }
  }

  if (run_rom) {
    LoadSampler forcing = [&](double t) {
      return (problem.mass * sampler(t, 1) + problem.nu * (problem.stiffness * sampler(t, 0)))
          .eval();
    };
    for (auto scheme : {RomConfig::Scheme::euler, RomConfig::Scheme::bdf2}) {
      RomConfig cfg;
      cfg.scheme = scheme;
      cfg.rank = r;
      cfg.nu = problem.nu;
      RomResult rom = rom_solve(problem, basis, cfg, forcing, reference);
      const int p = scheme == RomConfig::Scheme::euler ? 1 : 2;
      auto& target =
          scheme == RomConfig::Scheme::euler ? report.thm_heat_euler : report.thm_heat_bdf2;
      if (scheme == RomConfig::Scheme::euler)
        report.rom_max_error_euler = rom.max_l2_error;
      else
        report.rom_max_error_bdf2 = rom.max_l2_error;
      const double time_term = std::sqrt(static_cast<double>(p) + 3.0) * std::pow(tau, p) *
                               std::sqrt(duration) * std::sqrt(raw_l2[p + 1]);
      for (int m : options.m_list) {
        const double md = m;
        const double cm = report.cm_values[m];
        const double hx = sobolev_tail(m, tail_x);
        double rhs = 4.0 * report.poincare * std::sqrt(duration) * cm *
                         std::pow(report.sigma_tail, 0.5 - 1.0 / (2.0 * md)) *
                         std::pow(hx, 1.0 / md) +
                     std::sqrt(2.0) * report.poincare * base.c_a * std::sqrt(cm) *
                         std::pow(report.sigma_tail, 0.5 - 1.0 / (4.0 * md)) *
                         std::pow(hx, 1.0 / (2.0 * md)) +
                     report.gamma_r / std::sqrt(duration) + time_term;
        target[m] = BoundEntry::make(rhs, rom.max_l2_error);
      }
    }
  }
  return report;
}

}  // namespace podkit
