#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "podkit/constants.hpp"
#include "podkit/inequality_report.hpp"
#include "podkit/seq_norms.hpp"
#include "podkit/trajectory.hpp"

namespace podkit {

/// Inequalities stated for periodic sequences (period M, indices wrap).
enum class PeriodicLemma {
  summation_by_parts,  // ||D^k f||_0 <= ||D^{k-1} f||_0^{1/2} ||D^{k+1} f||_0^{1/2}
  interpolation,       // ||D^1 f||_0 <= ||f||_0^{(m-1)/m} ||D^m f||_0^{1/m}
  max_estimate,        // max ||f_n|| <= c_A ||f||_0^{1-1/(2m)} ||D^m f||_0^{1/(2m)}, zero mean
};

/// Inequalities for plain sequences, with the scale-weighted norms on the
/// right-hand sides and mean corrections absorbed into explicit constants.
enum class GeneralLemma {
  agmon,              // max ||f_n|| <= c_A ||f||_0^{1/2} ||D f||_0^{1/2}, zero mean
  agmon_dq,           // max ||D^k f_n|| <= c_A1 ||D^k f||_0^{1/2} ||D^k f||_1^{1/2}
  summation_by_parts, // ||D^k f||_0 <= c_B1 ||D^{k-1} f||_0^{1/2} ||D^k f||_1^{1/2}
  interpolation,      // ||D^1 f||_0 <= c_m ||f||_0^{(m-1)/m} ||D^1 f||_{m-1}^{1/m}
  max_estimate,       // max ||f_n|| <= c_A c_m^{1/2} ||f||_0^{1-1/(2m)} ||D^1 f||_{m-1}^{1/(2m)}
};

/// Shared constants table (d-hat seed c_B1, the proven reading).
const ConstantsTable& default_constants();

/// order is k for summation_by_parts, m for interpolation / max_estimate.
InequalityReport check_periodic(const Trajectory& f, PeriodicLemma lemma, int order,
                                const ConstantsTable* table = nullptr);

/// order is k for agmon_dq / summation_by_parts, m for interpolation /
/// max_estimate, and is ignored by agmon. Sequences that are not zero-mean
/// have their mean subtracted where a lemma requires it; the shift norm is
/// recorded in aux["mean_norm"].
InequalityReport check_general(const Trajectory& f, GeneralLemma lemma, int order = 1,
                               const ConstantsTable* table = nullptr);

enum class FunctionTheoremVariant { periodic, general };

struct FunctionTheoremChecks {
  InequalityReport dq_bound;
  InequalityReport pointwise_bound;
};

/// Bounds for sequences of sampled function values: the mean-square DQ norm
/// and the pointwise maximum against continuous Bochner norms of the time
/// derivatives. The 1/sqrt(T) tail is dropped when the snapshot sum vanishes.
FunctionTheoremChecks check_function_theorem(const DerivativeSampler& f, const TimeGrid& grid,
                                             std::shared_ptr<const HilbertSpace> space,
                                             FunctionTheoremVariant variant, int m,
                                             int quad_points = 4097,
                                             const ConstantsTable* table = nullptr);

/// ||D^k f_tau||_0 <= k ||d^k f/dt^k||_{L2(0,T,X)} for sampled smooth f.
InequalityReport check_dq_vs_derivative(const DerivativeSampler& f, const TimeGrid& grid,
                                        std::shared_ptr<const HilbertSpace> space, int k,
                                        int quad_points = 4097);

/// ||D^1 f_tau||_{m-1}^{1/m} <= 4 ||df/dt||_{H^{m-1}(0,T,X)}^{1/m}.
InequalityReport check_weighted_dq_vs_derivative(const DerivativeSampler& f, const TimeGrid& grid,
                                                 std::shared_ptr<const HilbertSpace> space, int m,
                                                 int quad_points = 4097);

/// Standard-normal snapshot generator used by the fuzz corpora. Smoothing
/// passes average adjacent snapshots; zero_mean recenters the sequence.
Trajectory random_trajectory(std::mt19937_64& rng, std::shared_ptr<const HilbertSpace> space,
                             const TimeGrid& grid, bool periodic, int smoothing_passes = 0,
                             bool zero_mean = false);

struct SharpnessQuery {
  bool use_periodic = true;
  PeriodicLemma periodic_lemma = PeriodicLemma::summation_by_parts;
  GeneralLemma general_lemma = GeneralLemma::agmon;
  int order = 1;
  int trials = 1;
  std::uint64_t seed = 0;
  int dim = 2;
  int intervals = 8;
  int refine_sweeps = 40;
};

/// Empirical worst-ratio probe: random trajectories plus coordinate-wise
/// hill climbing around the best one. Deterministic for a fixed query.
InequalityReport sharpness_search(const SharpnessQuery& query,
                                  const ConstantsTable* table = nullptr);

}  // namespace podkit
