#pragma once

#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace podkit {

/// The explicit constants of the discrete Agmon / interpolation machinery.
///
///   c_A   = sqrt(2 + sqrt(2)/2)
///   c_A1  = (1 + (sqrt(2) c_A)^{4/3})^{3/4}
///   c_B1  = 2 (1 + 2 (c_A c_A1)^2)^{1/2}
struct BaseConstants {
  double c_a;
  double c_a1;
  double c_b1;
};

BaseConstants base_constants();

/// Seed for the d-hat recursion. The c-hat seed is always c_B1 / sqrt(2);
/// the d-hat seed is printed ambiguously in the source material, so the
/// admissible readings are kept selectable. c_b1 is the proven default.
enum class DhatSeed { c_b1, c_b1_over_sqrt2, unit };

double dhat_seed_value(DhatSeed seed);
const char* dhat_seed_name(DhatSeed seed);
DhatSeed dhat_seed_from_name(const std::string& name);

/// Interpolation-constant table built from the coupled recursions
///
///   hat_c_j = (1 + hat_d_{j-1}^{2(j+1)})^{(j+1)/(2 j (j+2))}
///             * (prod_{i<j} hat_c_i^{1/(i+1)})^{(j+1)/(j (j+2))}
///
/// (same shape for hat_d_j with its own history) and the product
/// c_m = prod_{j<=m-2} hat_c_j^{1/(j+1)}, c_1 = 1. Everything is accumulated
/// in the log domain; the sequences grow geometrically, so the linear-scale
/// accessors throw NumericFailure once a value no longer fits in a double.
class ConstantsTable {
 public:
  explicit ConstantsTable(DhatSeed seed = DhatSeed::c_b1);

  DhatSeed seed() const { return seed_; }
  const BaseConstants& base() const { return base_; }

  double log_hat_c(int j) const;
  double log_hat_d(int j) const;
  double hat_c(int j) const;
  double hat_d(int j) const;

  double log_c_m(int m) const;
  double c_m(int m) const;

 private:
  void extend(int jmax) const;

  DhatSeed seed_;
  BaseConstants base_;
  mutable std::mutex mutex_;  // guards the lazily grown caches below
  mutable std::vector<double> log_c_;
  mutable std::vector<double> log_d_;
  mutable std::vector<double> prefix_c_;  // sum_{i<=j} log hat_c_i / (i+1)
  mutable std::vector<double> prefix_d_;
};

/// Both recursion sequences on the linear scale, j = 0..jmax.
std::pair<std::vector<double>, std::vector<double>> hat_sequences(int jmax,
                                                                  DhatSeed seed = DhatSeed::c_b1);

/// The reported c_m values this implementation is compared against
/// (anchors at m = 1..10 and m = 1e2, 1e3, 1e4, 1e5).
const std::vector<std::pair<int, double>>& c_m_reported_anchors();

/// Reported c_m: exact at the anchors, log-m interpolated between them,
/// saturated at the last anchor beyond m = 1e5.
double c_m_reported(int m);

enum class CmSource { recursion, reported_table };
const char* cm_source_name(CmSource source);

/// c_m under either source. The recursion source may throw on overflow.
double c_m_value(int m, CmSource source, const ConstantsTable& table);

/// One row of the recursion-vs-reported comparison.
struct CmComparisonRow {
  int m;
  double log_recursion;
  double reported;
  double relative_deviation;  // |exp(log_recursion) - reported| / reported, inf if overflow
};

struct CmComparison {
  DhatSeed seed;
  std::vector<CmComparisonRow> rows;
  double max_relative_deviation;
  bool matches(double rel_tol) const { return max_relative_deviation <= rel_tol; }
};

CmComparison compare_c_m_with_reported(const ConstantsTable& table);

}  // namespace podkit
