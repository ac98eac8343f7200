#include <cmath>

#include <gtest/gtest.h>

#include "podkit/errors.hpp"
#include "podkit/inequality.hpp"

using namespace podkit;

namespace {

Trajectory scalar_trajectory(const TimeGrid& grid, std::initializer_list<double> values,
                             bool periodic = false) {
  Eigen::MatrixXd m(1, values.size());
  int c = 0;
  for (double v : values) m(0, c++) = v;
  return Trajectory(grid, make_euclidean_space(1), m, periodic);
}

Trajectory alternating(int m_intervals, double tau) {
  Eigen::MatrixXd v(1, m_intervals + 1);
  for (int c = 0; c <= m_intervals; ++c) v(0, c) = (c % 2 == 0) ? 1.0 : -1.0;
  return Trajectory(TimeGrid(tau * m_intervals, m_intervals), make_euclidean_space(1), v, true);
}

}  // namespace

TEST(AgmonCheck, TwoPointHandValue) {
  // f = (1, -1): lhs = 1, rhs = c_A * 2^{3/4}, independent of tau.
  Trajectory f = scalar_trajectory(make_grid(1.0, 1), {1.0, -1.0});
  InequalityReport r = check_general(f, GeneralLemma::agmon);
  EXPECT_DOUBLE_EQ(r.lhs, 1.0);
  EXPECT_NEAR(r.rhs, 2.76710213933, 1e-10);
  EXPECT_NEAR(r.ratio, 0.361388900607, 1e-10);
  EXPECT_TRUE(r.pass);
}

TEST(AgmonCheck, ZeroTrajectoryPasses) {
  Trajectory f = scalar_trajectory(make_grid(1.0, 3), {0.0, 0.0, 0.0, 0.0});
  InequalityReport r = check_general(f, GeneralLemma::agmon);
  EXPECT_DOUBLE_EQ(r.lhs, 0.0);
  EXPECT_DOUBLE_EQ(r.rhs, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(AgmonCheck, MeanShiftCovariance) {
  // Adding a constant changes nothing: the check recenters internally.
  std::mt19937_64 rng(21);
  auto space = make_euclidean_space(3);
  TimeGrid grid(1.0, 10);
  Trajectory f = random_trajectory(rng, space, grid, false);
  Eigen::MatrixXd shifted_values = f.values();
  shifted_values.array() += 4.2;
  Trajectory shifted(grid, space, shifted_values);
  InequalityReport a = check_general(f, GeneralLemma::agmon);
  InequalityReport b = check_general(shifted, GeneralLemma::agmon);
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_NEAR(a.ratio, b.ratio, 1e-9 * a.ratio);
  EXPECT_GT(b.aux.at("mean_norm"), a.aux.at("mean_norm"));
}

TEST(PeriodicParts, AlternatingAttainsEquality) {
  InequalityReport r = check_periodic(alternating(2, 0.35), PeriodicLemma::summation_by_parts, 1);
  EXPECT_NEAR(r.ratio, 1.0, 1e-12);
  EXPECT_TRUE(r.pass);
}

TEST(PeriodicParts, ZeroTrajectoryPasses) {
  Trajectory f = scalar_trajectory(make_grid(1.0, 2), {0.0, 0.0, 0.0}, true);
  InequalityReport r = check_periodic(f, PeriodicLemma::summation_by_parts, 1);
  EXPECT_DOUBLE_EQ(r.lhs, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(PeriodicChecks, OrderRangeErrors) {
  Trajectory f = alternating(4, 0.2);
  EXPECT_THROW(check_periodic(f, PeriodicLemma::summation_by_parts, 0), InvalidArgument);
  EXPECT_THROW(check_periodic(f, PeriodicLemma::summation_by_parts, 5), InvalidArgument);
  EXPECT_THROW(check_periodic(f, PeriodicLemma::interpolation, 1), InvalidArgument);
  EXPECT_THROW(check_periodic(f, PeriodicLemma::interpolation, 5), InvalidArgument);
  EXPECT_THROW(check_periodic(f, PeriodicLemma::max_estimate, 0), InvalidArgument);
  Trajectory g = scalar_trajectory(make_grid(1.0, 2), {0.0, 1.0, 2.0});
  EXPECT_THROW(check_periodic(g, PeriodicLemma::summation_by_parts, 1), InvalidArgument);
}

TEST(GeneralChecks, OrderRangeErrors) {
  std::mt19937_64 rng(5);
  Trajectory f = random_trajectory(rng, make_euclidean_space(2), TimeGrid(1.0, 6), false);
  EXPECT_THROW(check_general(f, GeneralLemma::agmon_dq, 0), InvalidArgument);
  EXPECT_THROW(check_general(f, GeneralLemma::agmon_dq, 6), InvalidArgument);
  EXPECT_THROW(check_general(f, GeneralLemma::summation_by_parts, 6), InvalidArgument);
  EXPECT_THROW(check_general(f, GeneralLemma::interpolation, 1), InvalidArgument);
  EXPECT_THROW(check_general(f, GeneralLemma::interpolation, 7), InvalidArgument);
  EXPECT_THROW(check_general(f, GeneralLemma::max_estimate, 6), InvalidArgument);
}

TEST(FuzzSmoke, AllLemmasHoldOnRandomData) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim_dist(1, 6);
  std::uniform_int_distribution<int> grid_dist(8, 32);
  const int trials = 300;
  for (int t = 0; t < trials; ++t) {
    const int n = dim_dist(rng);
    int m_intervals = grid_dist(rng);
    if (m_intervals % 2 == 1) ++m_intervals;
    auto space = make_euclidean_space(n);
    TimeGrid grid(1.0, m_intervals);

    Trajectory p = random_trajectory(rng, space, grid, true);
    EXPECT_TRUE(check_periodic(p, PeriodicLemma::summation_by_parts, 1 + t % 5).pass);
    EXPECT_TRUE(check_periodic(p, PeriodicLemma::interpolation, 2 + t % 4).pass);
    EXPECT_TRUE(check_periodic(p, PeriodicLemma::max_estimate, 1 + t % 5).pass);

    Trajectory g = random_trajectory(rng, space, grid, false);
    EXPECT_TRUE(check_general(g, GeneralLemma::agmon).pass);
    EXPECT_TRUE(check_general(g, GeneralLemma::agmon_dq, 1 + t % 5).pass);
    EXPECT_TRUE(check_general(g, GeneralLemma::summation_by_parts, 1 + t % 5).pass);
    EXPECT_TRUE(check_general(g, GeneralLemma::interpolation, 2 + t % 4).pass);
    EXPECT_TRUE(check_general(g, GeneralLemma::max_estimate, 1 + t % 5).pass);
  }
}

TEST(ScaleInvariance, RatiosSurviveTimeAndAmplitudeScaling) {
  std::mt19937_64 rng(77);
  auto space = make_euclidean_space(4);
  TimeGrid grid(1.0, 12);
  Trajectory p = random_trajectory(rng, space, grid, true);
  Trajectory g = random_trajectory(rng, space, grid, false);

  auto expect_invariant = [](const InequalityReport& a, const InequalityReport& b) {
    EXPECT_NEAR(a.ratio, b.ratio, 1e-10 * std::max(1.0, a.ratio));
  };

  const double s = 2.7;
  Trajectory p_scaled = p.rescaled_time(s);
  Trajectory g_scaled = g.rescaled_time(s);
  Eigen::MatrixXd amplified = g.values() * 3.3;
  Trajectory g_amp(grid, space, amplified, false);

  for (int k : {1, 2, 3}) {
    expect_invariant(check_periodic(p, PeriodicLemma::summation_by_parts, k),
                     check_periodic(p_scaled, PeriodicLemma::summation_by_parts, k));
    expect_invariant(check_general(g, GeneralLemma::agmon_dq, k),
                     check_general(g_scaled, GeneralLemma::agmon_dq, k));
    expect_invariant(check_general(g, GeneralLemma::summation_by_parts, k),
                     check_general(g_scaled, GeneralLemma::summation_by_parts, k));
  }
  for (int m : {2, 3, 4}) {
    expect_invariant(check_periodic(p, PeriodicLemma::interpolation, m),
                     check_periodic(p_scaled, PeriodicLemma::interpolation, m));
    expect_invariant(check_general(g, GeneralLemma::interpolation, m),
                     check_general(g_scaled, GeneralLemma::interpolation, m));
    expect_invariant(check_general(g, GeneralLemma::max_estimate, m),
                     check_general(g_scaled, GeneralLemma::max_estimate, m));
  }
  expect_invariant(check_general(g, GeneralLemma::agmon), check_general(g_amp, GeneralLemma::agmon));
}

namespace {

DerivativeSampler sine_sampler(double duration, int dim) {
  return [duration, dim](double t, int order) {
    const double w = 2.0 * M_PI / duration;
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(0) = std::pow(w, order) * std::sin(w * t + order * M_PI / 2.0);
    return e;
  };
}

DerivativeSampler parabola_sampler(double duration) {
  return [duration](double t, int order) {
    double v = 0.0;
    if (order == 0) v = t * (duration - t);
    if (order == 1) v = duration - 2.0 * t;
    if (order == 2) v = -2.0;
    return Eigen::VectorXd::Constant(1, v);
  };
}

}  // namespace

TEST(FunctionTheorem, ZeroFunctionTrivial) {
  auto space = make_euclidean_space(2);
  DerivativeSampler zero = [](double, int) { return Eigen::VectorXd::Zero(2); };
  auto checks = check_function_theorem(zero, make_grid(1.0, 8), space,
                                       FunctionTheoremVariant::general, 2, 201);
  EXPECT_DOUBLE_EQ(checks.dq_bound.lhs, 0.0);
  EXPECT_TRUE(checks.dq_bound.pass);
  EXPECT_TRUE(checks.pointwise_bound.pass);
}

TEST(FunctionTheorem, PeriodicSine) {
  auto space = make_euclidean_space(3);
  const double duration = 2.0;
  auto checks = check_function_theorem(sine_sampler(duration, 3), make_grid(duration, 64), space,
                                       FunctionTheoremVariant::periodic, 2);
  EXPECT_TRUE(checks.dq_bound.pass);
  EXPECT_TRUE(checks.pointwise_bound.pass);
  // Sine over a full period has zero snapshot mean, so the tail is dropped.
  EXPECT_DOUBLE_EQ(checks.pointwise_bound.aux.at("tail_term"), 0.0);
}

TEST(FunctionTheorem, GeneralParabola) {
  auto space = make_euclidean_space(1);
  auto checks = check_function_theorem(parabola_sampler(1.0), make_grid(1.0, 32), space,
                                       FunctionTheoremVariant::general, 2);
  EXPECT_TRUE(checks.dq_bound.pass);
  EXPECT_TRUE(checks.pointwise_bound.pass);
  EXPECT_GT(checks.pointwise_bound.aux.at("tail_term"), 0.0);
}

TEST(DqDerivativeChecks, SmoothSamplers) {
  auto space = make_euclidean_space(3);
  const double duration = 2.0;
  TimeGrid grid(duration, 48);
  for (int k = 1; k <= 4; ++k)
    EXPECT_TRUE(check_dq_vs_derivative(sine_sampler(duration, 3), grid, space, k).pass);
  for (int m = 2; m <= 5; ++m) {
    InequalityReport r = check_weighted_dq_vs_derivative(sine_sampler(duration, 3), grid, space, m);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.aux.at("internal_factor"), 3.93);
  }
}

TEST(Sharpness, PartsEqualityFound) {
  SharpnessQuery query;
  query.use_periodic = true;
  query.periodic_lemma = PeriodicLemma::summation_by_parts;
  query.order = 1;
  query.trials = 10;
  query.seed = 42;
  query.dim = 2;
  query.intervals = 8;
  InequalityReport best = sharpness_search(query);
  EXPECT_GE(best.ratio, 1.0 - 1e-9);
  EXPECT_LE(best.ratio, 1.0 + 1e-10);
}

TEST(Sharpness, AgmonTwoPointFamilyIsFlat) {
  SharpnessQuery query;
  query.use_periodic = false;
  query.general_lemma = GeneralLemma::agmon;
  query.trials = 25;
  query.seed = 7;
  query.dim = 1;
  query.intervals = 1;
  InequalityReport best = sharpness_search(query);
  EXPECT_NEAR(best.ratio, 0.361388900607, 1e-9);
}

TEST(Sharpness, RejectsZeroTrials) {
  SharpnessQuery query;
  query.trials = 0;
  EXPECT_THROW(sharpness_search(query), InvalidArgument);
}
