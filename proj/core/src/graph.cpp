#include "spectral/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "spectral/errors.hpp"

namespace spectral {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");

  std::map<std::pair<int, int>, double> merged;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ")");
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.w < 0)
      throw std::invalid_argument("negative edge weight on (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ")");
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.w;
  }

  adj_.resize(n);
  weighted_degree_.assign(n, 0.0);
  for (const auto& [key, w] : merged) {
    if (w == 0.0) continue;  // zero-weight edges carry no Laplacian content
    edges_.push_back({key.first, key.second, w});
    adj_[key.first].emplace_back(key.second, w);
    adj_[key.second].emplace_back(key.first, w);
    weighted_degree_[key.first] += w;
    weighted_degree_[key.second] += w;
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int WeightedGraph::max_valence() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

int WeightedGraph::min_valence() const {
  if (n_ == 0) return 0;
  int d = static_cast<int>(adj_[0].size());
  for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
  return d;
}

double WeightedGraph::total_weight() const {
  double s = 0;
  for (const Edge& e : edges_) s += e.w;
  return s;
}

bool WeightedGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : adj_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

bool WeightedGraph::is_unit_weighted() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2) {
  if (!g1.is_unit_weighted() || !g2.is_unit_weighted())
    throw WeightedInput("cartesian product is defined for unit-weighted factors");

  const int n1 = g1.order(), n2 = g2.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(g1.edges().size()) * n2 +
                static_cast<size_t>(g2.edges().size()) * n1);
  for (const Edge& e : g1.edges())
    for (int b = 0; b < n2; ++b) edges.push_back({e.u * n2 + b, e.v * n2 + b, 1.0});
  for (const Edge& e : g2.edges())
    for (int a = 0; a < n1; ++a) edges.push_back({a * n2 + e.u, a * n2 + e.v, 1.0});
  return WeightedGraph(n1 * n2, std::move(edges));
}

}  // namespace spectral
