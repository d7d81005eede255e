#include "spectral/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "spectral/errors.hpp"
#include "support/generators.hpp"
#include "support/jacobi.hpp"
#include "support/oracles.hpp"

using spectral::SymMatrix;
using spectral::WeightedGraph;

namespace {

WeightedGraph path(int n) {
  std::vector<spectral::Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1.0});
  return WeightedGraph(n, es);
}

WeightedGraph cycle(int n) {
  std::vector<spectral::Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, 1.0});
  return WeightedGraph(n, es);
}

WeightedGraph complete(int n) {
  std::vector<spectral::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v, 1.0});
  return WeightedGraph(n, es);
}

WeightedGraph star(int leaves) {
  std::vector<spectral::Edge> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i, 1.0});
  return WeightedGraph(leaves + 1, es);
}

std::vector<double> normalized_values(const WeightedGraph& g) {
  return spectral::eigenvalues(spectral::normalized_laplacian(g)).values;
}

TEST(StandardLaplacian, RowSumsVanishAndEntriesMatch) {
  std::mt19937 rng(5);
  const WeightedGraph g = gen::connected_graph(rng, 9, 0.8, false);
  const SymMatrix lap = spectral::standard_laplacian(g);
  for (int i = 0; i < g.order(); ++i) {
    double row = 0.0;
    for (int j = 0; j < g.order(); ++j) row += lap(i, j);
    EXPECT_NEAR(row, 0.0, 1e-12);
    EXPECT_NEAR(lap(i, i), g.weighted_degree(i), 1e-12);
  }
  for (const auto& e : g.edges()) EXPECT_DOUBLE_EQ(lap(e.u, e.v), -e.w);
}

TEST(NormalizedLaplacian, UnitDiagonalAndSpectralRange) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 15; ++trial) {
    const WeightedGraph g = gen::connected_graph(rng, 4 + trial, 0.7, trial % 2 == 1);
    const SymMatrix lap = spectral::normalized_laplacian(g);
    for (int i = 0; i < g.order(); ++i) EXPECT_NEAR(lap(i, i), 1.0, 1e-12);
    const auto values = spectral::eigenvalues(lap).values;
    EXPECT_NEAR(values.front(), 0.0, 1e-10);
    EXPECT_GE(values.front(), -1e-10);
    EXPECT_LE(values.back(), 2.0 + 1e-10);
  }
}

TEST(NormalizedLaplacian, ZeroDegreeVertexThrows) {
  WeightedGraph g(3, {{0, 1, 1.0}});  // vertex 2 isolated
  EXPECT_THROW(spectral::normalized_laplacian(g), spectral::ZeroDegreeVertex);
  try {
    spectral::normalized_laplacian(g);
    FAIL();
  } catch (const spectral::ZeroDegreeVertex& e) {
    EXPECT_EQ(e.vertex, 2);
  }
}

TEST(NormalizedLaplacian, ClosedFormFamilies) {
  auto expect_match = [](const std::vector<double>& got, const std::vector<double>& want) {
    ASSERT_EQ(got.size(), want.size());
    for (size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-10) << "i=" << i;
  };
  expect_match(normalized_values(path(3)), {0.0, 1.0, 2.0});
  for (int n : {3, 4, 5, 8, 13}) expect_match(normalized_values(cycle(n)), oracle::cycle_normalized(n));
  for (int n : {4, 6, 9}) expect_match(normalized_values(path(n)), oracle::path_normalized(n));
  for (int n : {3, 4, 7}) expect_match(normalized_values(complete(n)), oracle::complete_normalized(n));
  for (int d : {2, 3, 6}) expect_match(normalized_values(star(d)), oracle::star_normalized(d));
}

TEST(StandardLaplacian, ClosedFormFamilies) {
  for (int n : {3, 5, 10}) {
    const auto got = spectral::eigenvalues(spectral::standard_laplacian(cycle(n))).values;
    const auto want = oracle::cycle_standard(n);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-10);
  }
  for (int n : {2, 4, 7}) {
    const auto got = spectral::eigenvalues(spectral::standard_laplacian(path(n))).values;
    const auto want = oracle::path_standard(n);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-10);
  }
}

// For every k: d_min * lambda_k(normalized) <= lambda_k(standard)
//          <= d_max * lambda_k(normalized), by comparing Rayleigh quotients.
TEST(Laplacians, DegreeSandwichOnRandomGraphs) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph g = gen::connected_graph(rng, 3 + trial % 12, 0.9, trial % 3 == 0);
    double dmin = g.weighted_degree(0), dmax = dmin;
    for (int v = 1; v < g.order(); ++v) {
      dmin = std::min(dmin, g.weighted_degree(v));
      dmax = std::max(dmax, g.weighted_degree(v));
    }
    const auto std_vals = spectral::eigenvalues(spectral::standard_laplacian(g)).values;
    const auto nrm_vals = normalized_values(g);
    for (int k = 0; k < g.order(); ++k) {
      EXPECT_LE(dmin * nrm_vals[k], std_vals[k] + 1e-9) << "trial=" << trial << " k=" << k;
      EXPECT_GE(dmax * nrm_vals[k], std_vals[k] - 1e-9) << "trial=" << trial << " k=" << k;
    }
  }
}

TEST(Laplacians, MatchJacobiOracleOnRandomGraphs) {
  std::mt19937 rng(333);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = gen::connected_graph(rng, 5 + 2 * trial, 0.8, false);
    const SymMatrix lap = spectral::normalized_laplacian(g);
    const auto got = spectral::eigenvalues(lap).values;
    const auto want = oracle::jacobi_eigenvalues(lap.mat());
    for (size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-9);
  }
}

TEST(RayleighQuotient, MatchesMatrixQuadraticForm) {
  std::mt19937 rng(17);
  const WeightedGraph g = gen::connected_graph(rng, 8, 0.8, false);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::vector<double> f(g.order());
  for (auto& x : f) x = entry(rng);

  double num = 0.0, den = 0.0;
  for (const auto& e : g.edges()) num += e.w * (f[e.u] - f[e.v]) * (f[e.u] - f[e.v]);
  for (int v = 0; v < g.order(); ++v) den += g.weighted_degree(v) * f[v] * f[v];
  EXPECT_NEAR(spectral::rayleigh_quotient(g, f), num / den, 1e-12);

  EXPECT_THROW(spectral::rayleigh_quotient(g, std::vector<double>(g.order(), 0.0)),
               spectral::ZeroFunction);
}

TEST(RayleighQuotient, BoundsSecondEigenvalueFromAbove) {
  // Any mean-zero (in the degree inner product) test function gives an upper
  // bound for lambda_1 of the normalized Laplacian.
  const WeightedGraph g = path(6);
  std::vector<double> f(6);
  for (int v = 0; v < 6; ++v) f[v] = v - 2.5;
  double mean = 0.0, mass = 0.0;
  for (int v = 0; v < 6; ++v) {
    mean += g.weighted_degree(v) * f[v];
    mass += g.weighted_degree(v);
  }
  for (int v = 0; v < 6; ++v) f[v] -= mean / mass;
  const double lambda1 = normalized_values(g)[1];
  EXPECT_LE(lambda1, spectral::rayleigh_quotient(g, f) + 1e-12);
}

TEST(FiedlerVector, PathValueAndDeterminism) {
  const SymMatrix lap = spectral::normalized_laplacian(path(4));
  const auto [value, vec] = spectral::fiedler_vector(lap);
  EXPECT_NEAR(value, 1.0 - std::cos(std::numbers::pi / 3.0), 1e-10);
  EXPECT_NEAR(vec.norm(), 1.0, 1e-12);
  EXPECT_GT(vec(0), 0.0);  // sign fixed by first nonzero entry

  const auto [value2, vec2] = spectral::fiedler_vector(lap);
  EXPECT_EQ(value, value2);
  EXPECT_EQ((vec - vec2).norm(), 0.0);
}

TEST(FiedlerVector, DisconnectedThrows) {
  WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_THROW(spectral::fiedler_vector(spectral::standard_laplacian(g)), spectral::Disconnected);
}

}  // namespace
