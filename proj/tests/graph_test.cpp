#include "spectral/graph.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "spectral/errors.hpp"
#include "spectral/graph_io.hpp"
#include "support/generators.hpp"

using spectral::Edge;
using spectral::WeightedGraph;

namespace {

WeightedGraph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1.0});
  return WeightedGraph(n, es);
}

WeightedGraph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, 1.0});
  return WeightedGraph(n, es);
}

TEST(WeightedGraph, DegreesAndNeighbors) {
  WeightedGraph g(4, {{0, 1, 2.0}, {1, 2, 0.5}, {3, 1, 1.0}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_DOUBLE_EQ(g.weighted_degree(1), 3.5);
  EXPECT_EQ(g.valence(1), 3);
  EXPECT_EQ(g.max_valence(), 3);
  EXPECT_EQ(g.min_valence(), 1);
  EXPECT_DOUBLE_EQ(g.total_weight(), 3.5);
  // Neighbor lists come back sorted by vertex id regardless of input order.
  const auto& nb = g.neighbors(1);
  ASSERT_EQ(nb.size(), 3u);
  EXPECT_EQ(nb[0].first, 0);
  EXPECT_EQ(nb[1].first, 2);
  EXPECT_EQ(nb[2].first, 3);
}

TEST(WeightedGraph, RejectsSelfLoopsAndBadVertices) {
  EXPECT_THROW(WeightedGraph(3, {{1, 1, 1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(3, {{0, 3, 1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(3, {{-1, 0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(3, {{0, 1, -0.25}}), std::invalid_argument);
}

TEST(WeightedGraph, ParallelEdgesMergeAndZeroWeightDrops) {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 0, 2.5}, {1, 2, 0.0}});
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_DOUBLE_EQ(g.edges()[0].w, 3.5);
  EXPECT_EQ(g.valence(2), 0);
}

TEST(WeightedGraph, Connectivity) {
  EXPECT_TRUE(path(5).is_connected());
  EXPECT_TRUE(cycle(3).is_connected());
  WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_FALSE(split.is_connected());
  WeightedGraph isolated(3, {{0, 1, 1.0}});
  EXPECT_FALSE(isolated.is_connected());
  EXPECT_TRUE(WeightedGraph(1, {}).is_connected());
}

TEST(WeightedGraph, UnitWeightFlag) {
  EXPECT_TRUE(path(4).is_unit_weighted());
  WeightedGraph g(2, {{0, 1, 1.5}});
  EXPECT_FALSE(g.is_unit_weighted());
}

TEST(CartesianProduct, TwoPathsMakeAFourCycle) {
  //  (0,0)--(0,1)
  //    |      |      P_2 x P_2 with vertex (a,b) -> 2a + b
  //  (1,0)--(1,1)
  const WeightedGraph g = cartesian_product(path(2), path(2));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g.valence(0), 2);
  EXPECT_TRUE(g.is_connected());
  EXPECT_EQ(g.neighbors(0)[0].first, 1);
  EXPECT_EQ(g.neighbors(0)[1].first, 2);
}

TEST(CartesianProduct, OrderAndDegreeStructure) {
  const WeightedGraph g = cartesian_product(cycle(3), path(4));
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.edge_count(), 3 * 4 + 3 * 3);
  // Degree in the product is the sum of factor degrees.
  EXPECT_EQ(g.valence(0 * 4 + 0), 2 + 1);
  EXPECT_EQ(g.valence(0 * 4 + 1), 2 + 2);
}

TEST(CartesianProduct, RequiresUnitWeights) {
  WeightedGraph weighted(2, {{0, 1, 2.0}});
  EXPECT_THROW(cartesian_product(weighted, path(2)), spectral::WeightedInput);
  EXPECT_THROW(cartesian_product(path(2), weighted), spectral::WeightedInput);
}

TEST(EdgeListIo, RoundTrip) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph g = gen::connected_graph(rng, 3 + trial % 9, 0.7, trial % 2 == 0);
    std::ostringstream out;
    spectral::write_edge_list(out, g);
    std::istringstream in(out.str());
    const WeightedGraph back = spectral::read_edge_list(in);
    ASSERT_EQ(back.order(), g.order());
    ASSERT_EQ(back.edge_count(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      EXPECT_EQ(back.edges()[e].u, g.edges()[e].u);
      EXPECT_EQ(back.edges()[e].v, g.edges()[e].v);
      EXPECT_DOUBLE_EQ(back.edges()[e].w, g.edges()[e].w);
    }
  }
}

TEST(EdgeListIo, CommentsBlankLinesAndDefaultWeight) {
  std::istringstream in(
      "# triangle with one heavy edge\n"
      "\n"
      "3 3\n"
      "0 1\n"
      "1 2 2.5\n"
      "\n"
      "2 0   # closing edge\n");
  const WeightedGraph g = spectral::read_edge_list(in);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_DOUBLE_EQ(g.weighted_degree(1), 3.5);
}

TEST(EdgeListIo, MalformedInputsThrowParseError) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return spectral::read_edge_list(in);
  };
  EXPECT_THROW(parse(""), spectral::ParseError);
  EXPECT_THROW(parse("2\n0 1\n"), spectral::ParseError);       // missing edge count
  EXPECT_THROW(parse("2 2\n0 1\n"), spectral::ParseError);     // fewer edges than declared
  EXPECT_THROW(parse("2 1\n0 x\n"), spectral::ParseError);     // bad token
  EXPECT_THROW(parse("2 1\n0 2 1\n"), spectral::ParseError);   // vertex out of range
  EXPECT_THROW(parse("2 1\n0 1 -1\n"), spectral::ParseError);  // negative weight
  EXPECT_THROW(parse("2 1\n0 1 abc\n"), spectral::ParseError); // weight not a number
  EXPECT_THROW(spectral::read_edge_list_file("/nonexistent/graph.txt"), spectral::ParseError);
}

}  // namespace
