#pragma once

#include <utility>
#include <vector>

namespace spectral {

struct Edge {
  int u;
  int v;
  double w;
};

/// Undirected graph with nonnegative edge weights. Vertices are 0..n-1,
/// self-loops are rejected and parallel input edges merge by summing their
/// weights, so the stored edge list is always simple.
class WeightedGraph {
public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of v as (vertex, weight) pairs, sorted by vertex.
  const std::vector<std::pair<int, double>>& neighbors(int v) const { return adj_[v]; }

  /// d_v^w, the sum of incident edge weights.
  double weighted_degree(int v) const { return weighted_degree_[v]; }
  /// Number of incident edges (combinatorial valence).
  int valence(int v) const { return static_cast<int>(adj_[v].size()); }

  int max_valence() const;
  int min_valence() const;
  double total_weight() const;

  bool is_connected() const;
  /// True when every edge has weight exactly 1.
  bool is_unit_weighted() const;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::vector<double> weighted_degree_;
};

/// Cartesian product G1 x G2 on V1 x V2; both factors must be unit weighted.
/// Vertex (a, b) maps to index a * g2.order() + b.
WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2);

}  // namespace spectral
