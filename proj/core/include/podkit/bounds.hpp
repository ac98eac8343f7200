#pragma once

#include <map>
#include <string>
#include <vector>

#include "podkit/constants.hpp"
#include "podkit/fem.hpp"
#include "podkit/manufactured.hpp"
#include "podkit/pod.hpp"
#include "podkit/rom.hpp"

namespace podkit {

/// One evaluated bound: right-hand side vs the measured quantity it must
/// dominate. The overestimation factor is rhs / measured.
struct BoundEntry {
  double rhs = 0.0;
  double measured = 0.0;
  bool pass = false;
  double overestimation = 0.0;

  static BoundEntry make(double rhs, double measured);
};

/// Every bound right-hand side evaluated on one (basis, r, trajectory)
/// configuration, next to its measured counterpart. Entries keyed by the
/// smoothness order m. Maps stay empty when a family does not apply to the
/// configuration (periodic-only estimates, stiffness-only estimates, the
/// heat bounds when the basis carries a subtracted mean).
struct BoundReport {
  std::string gram_kind;
  int rank = 0;
  int intervals = 0;
  double duration = 0.0;
  bool periodic = false;
  bool zero_mean = false;
  int source_count = 0;

  double sigma_tail = 0.0;       // sum_{k>r} sigma_k^2
  double gamma_r = 0.0;          // its square root
  double cross_tail = 0.0;       // sum_{k>r} sigma_k^2 ||phi_k||_L2^2
  double cross_gamma_r = 0.0;
  double poincare = 0.0;         // 0 when not computed

  double max_pointwise_error = 0.0;     // max_n ||(I-P) u^n||_X
  double max_pointwise_error_l2 = 0.0;  // same in the L2 norm
  double dq_error_x = 0.0;              // (tau sum ||(I-P) D u^n||_X^2)^{1/2}
  double dq_error_l2 = 0.0;
  double rom_max_error_euler = -1.0;    // negative = not run
  double rom_max_error_bdf2 = -1.0;

  BoundEntry thm1;
  BoundEntry degraded_baseline;
  std::map<int, BoundEntry> thm2, thm3, esti1, esti2, diferente1, diferente2, rho, mu;
  std::map<int, BoundEntry> thm_heat_euler, thm_heat_bdf2;

  std::string cm_source;
  std::string cm_seed;
  std::map<int, double> cm_values;

  bool all_pass() const;
};

struct BoundOptions {
  std::vector<int> m_list = {2, 3, 4, 5};
  int quad_points = 2049;
  CmSource cm_source = CmSource::recursion;
  DhatSeed cm_seed = DhatSeed::c_b1;
  bool run_rom = true;
};

/// Evaluates the whole bound family for a POD basis of the given trajectory.
/// The derivative sampler must produce exact time derivatives of the
/// reference up to max(m_list) (and order 3 when the ROM bounds run).
BoundReport bound_report(const FeProblem& problem, const PodBasis& basis, int r,
                         const Trajectory& reference, const DerivativeSampler& sampler,
                         const BoundOptions& options = {});

}  // namespace podkit
