#include "spectral/fem.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "spectral/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using spectral::ContinuumEstimate;
using spectral::MetricGraphModel;
using spectral::WeightedGraph;

namespace {

constexpr double kPi = std::numbers::pi;

MetricGraphModel interval_model(double length) {
  return MetricGraphModel(WeightedGraph(2, {{0, 1, length}}));
}

MetricGraphModel circle_model(int n, double edge_length) {
  std::vector<spectral::Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, edge_length});
  return MetricGraphModel(WeightedGraph(n, es));
}

MetricGraphModel star_model(const std::vector<double>& lengths) {
  std::vector<spectral::Edge> es;
  for (size_t i = 0; i < lengths.size(); ++i)
    es.push_back({0, static_cast<int>(i) + 1, lengths[i]});
  return MetricGraphModel(WeightedGraph(static_cast<int>(lengths.size()) + 1, es));
}

TEST(Fem, BaseSegmentCountTracksLengthImbalance) {
  // Uniform lengths: 2 segments per edge at level 0.
  EXPECT_EQ(spectral::continuum_spectrum(circle_model(3, 1.0), 1, 1).base_segments, 2);
  // l_max / l_min = 3: need 6 base segments so level 1 reaches l_min / 4.
  MetricGraphModel lopsided(WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 3.0}}));
  EXPECT_EQ(spectral::continuum_spectrum(lopsided, 1, 1).base_segments, 6);
}

TEST(Fem, GroundStateIsZeroAndValuesAscend) {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 8; ++trial) {
    const MetricGraphModel m = gen::balanced_model(rng, 4 + trial);
    const ContinuumEstimate est = spectral::continuum_spectrum(m, 3, 2);
    ASSERT_GE(est.size(), 4);
    EXPECT_NEAR(est.values[0], 0.0, 1e-8);
    for (int k = 1; k < est.size(); ++k) EXPECT_GE(est.values[k], est.values[k - 1] - 1e-10);
    EXPECT_EQ(est.level, 2);
    ASSERT_EQ(est.error_indicator.size(), est.values.size());
  }
}

TEST(Fem, IntervalNeumannValuesConverge) {
  const MetricGraphModel m = interval_model(1.0);
  // Level 6 on the unit interval: 2 * 2^6 = 128 segments, h = 1/128 < 1/96.
  const ContinuumEstimate est = spectral::continuum_spectrum(m, 5, 6);
  const auto want = oracle::interval_neumann(1.0, 5);
  for (int k = 1; k <= 5; ++k) {
    EXPECT_NEAR(est.values[k], want[k], 0.005 * want[k]) << "k=" << k;
  }
}

TEST(Fem, CircleValuesConvergeWithMultiplicity) {
  // C_3 with edge length 1/3 is a circle of circumference 1; eigenvalues
  // come in pairs (2 pi j)^2.
  const MetricGraphModel m = circle_model(3, 1.0 / 3.0);
  const ContinuumEstimate est = spectral::continuum_spectrum(m, 4, 6);
  const auto want = oracle::circle_eigenvalues(1.0, 4);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_NEAR(est.values[k], want[k], 0.005 * want[k]) << "k=" << k;
  }
}

TEST(Fem, RawConvergenceIsSecondOrder) {
  // Compare raw (non-extrapolated) errors across three dyadic levels; the
  // observed order log2(err_l / err_{l+1}) should sit near 2.
  const MetricGraphModel m = interval_model(1.0);
  const double exact = kPi * kPi;
  double previous_error = 0.0;
  for (int level = 4; level <= 6; ++level) {
    const ContinuumEstimate est = spectral::continuum_spectrum(m, 1, level);
    const double error = std::abs(est.fine_values[1] - exact);
    if (level > 4) {
      const double order = std::log2(previous_error / error);
      EXPECT_NEAR(order, 2.0, 0.3) << "level=" << level;
    }
    previous_error = error;
  }
}

TEST(Fem, RichardsonBeatsTheRawValue) {
  const MetricGraphModel m = interval_model(1.0);
  const ContinuumEstimate est = spectral::continuum_spectrum(m, 2, 4);
  const double exact = kPi * kPi;
  EXPECT_LT(std::abs(est.values[1] - exact), std::abs(est.fine_values[1] - exact));
  // The indicator |fine - coarse| dominates the distance of the
  // extrapolated value from the truth.
  EXPECT_LT(std::abs(est.values[1] - exact), est.error_indicator[1]);
}

TEST(Fem, StarValuesMatchTheSecularSolver) {
  std::mt19937 rng(405);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 2 + trial % 5;
    const std::vector<double> lengths = gen::star_lengths(rng, d);
    const MetricGraphModel m = star_model(lengths);
    const int k_max = std::min(4, m.order() - 1);
    const ContinuumEstimate est = spectral::continuum_spectrum(m, k_max, 3);
    const auto secular = spectral::star_secular_solve(spectral::MetricStar(lengths), k_max);
    for (int k = 1; k <= k_max; ++k) {
      const double tolerance = est.error_indicator[k] + 1e-6 * (1.0 + secular[k - 1]);
      EXPECT_NEAR(est.values[k], secular[k - 1], tolerance)
          << "trial=" << trial << " d=" << d << " k=" << k;
    }
  }
}

TEST(Fem, LevelValidationAndSizeCap) {
  const MetricGraphModel m = interval_model(1.0);
  EXPECT_THROW(spectral::continuum_spectrum(m, 1, 0), std::invalid_argument);
  spectral::EigenOptions opts;
  opts.size_cap = 8;
  EXPECT_THROW(spectral::continuum_spectrum(m, 1, 5, opts), spectral::SizeCap);
}

TEST(Fem, SingleLevelValuesExposedForStudies) {
  const auto values = spectral::fem_level_values(interval_model(1.0), 2, 32);
  ASSERT_EQ(values.size(), 3u);
  EXPECT_NEAR(values[0], 0.0, 1e-9);
  EXPECT_NEAR(values[1], kPi * kPi, 0.05);
  EXPECT_NEAR(values[2], 4.0 * kPi * kPi, 0.2);
}

}  // namespace
