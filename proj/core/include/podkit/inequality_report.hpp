#pragma once

#include <limits>
#include <map>
#include <string>

namespace podkit {

enum class LemmaId {
  agmon,
  agmon_dq,
  periodic_parts,
  periodic_interpolation,
  periodic_max,
  general_parts,
  general_interpolation,
  general_max,
  function_periodic_dq,
  function_periodic_max,
  function_general_dq,
  function_general_max,
  dq_derivative,
  dq_derivative_weighted,
  energy_identity,
  cross_norm_identity,
  degraded_pointwise,
  tail_mean_bound,
  bdf2_energy,
};

const char* lemma_name(LemmaId id);

/// Outcome of one inequality (or identity) check: left side, right side,
/// their ratio, and a pass flag. params that apply (smoothness order m,
/// difference order k, attaining index n) are carried along; anything else
/// of interest lands in aux.
struct InequalityReport {
  LemmaId lemma_id{};
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
  int order_m = -1;
  int order_k = -1;
  int index_n = -1;
  std::map<std::string, double> aux;

  static constexpr double kRelTol = 1e-12;
  static constexpr double kAbsTol = 1e-14;

  /// One-sided check lhs <= rhs up to rounding slack; abs_slack adds room for
  /// quadrature error when a side comes from numerical integration.
  static InequalityReport bound(LemmaId id, double lhs, double rhs, double abs_slack = 0.0) {
    InequalityReport r;
    r.lemma_id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = make_ratio(lhs, rhs);
    r.pass = lhs <= rhs * (1.0 + kRelTol) + kAbsTol + abs_slack;
    return r;
  }

  /// Two-sided identity check |lhs - rhs| <= rel*|rhs| (abs floor when rhs = 0).
  static InequalityReport identity(LemmaId id, double lhs, double rhs, double rel_tol = 1e-10,
                                   double abs_tol = 1e-14) {
    InequalityReport r;
    r.lemma_id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = make_ratio(lhs, rhs);
    r.pass = std::abs(lhs - rhs) <= std::max(rel_tol * std::abs(rhs), abs_tol);
    return r;
  }

  static double make_ratio(double lhs, double rhs) {
    if (rhs == 0.0) return lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return lhs / rhs;
  }
};

}  // namespace podkit
