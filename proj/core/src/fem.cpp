#include "spectral/fem.hpp"

#include <cmath>
#include <stdexcept>

#include "spectral/errors.hpp"
#include "spectral/sym_matrix.hpp"

namespace spectral {

namespace {

int base_segment_count(const MetricGraphModel& m) {
  // At level 1 (2s segments per edge) the longest segment must not exceed
  // l_min / 4: 2s >= 4 l_max / l_min.
  return std::max(1, static_cast<int>(std::ceil(2.0 * m.max_length() / m.min_length() - 1e-12)));
}

}  // namespace

std::vector<double> fem_level_values(const MetricGraphModel& m, int k_max, int segments_per_edge,
                                     const EigenOptions& opts) {
  if (segments_per_edge < 1) throw std::invalid_argument("need at least one segment per edge");
  const WeightedGraph& g = m.graph();
  const int n_nodes = g.order() + g.edge_count() * (segments_per_edge - 1);
  if (k_max + 1 > n_nodes)
    throw std::invalid_argument("k_max exceeds the discretization's mode count");
  if (n_nodes > opts.size_cap) throw SizeCap(n_nodes, opts.size_cap);

  Eigen::MatrixXd stiffness = Eigen::MatrixXd::Zero(n_nodes, n_nodes);
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(n_nodes, n_nodes);
  int next_node = g.order();
  for (const Edge& e : g.edges()) {
    const double h = e.w / segments_per_edge;
    int prev = e.u;
    for (int seg = 0; seg < segments_per_edge; ++seg) {
      const int cur = (seg + 1 == segments_per_edge) ? e.v : next_node++;
      stiffness(prev, prev) += 1.0 / h;
      stiffness(cur, cur) += 1.0 / h;
      stiffness(prev, cur) -= 1.0 / h;
      stiffness(cur, prev) -= 1.0 / h;
      mass(prev, prev) += h / 3.0;
      mass(cur, cur) += h / 3.0;
      mass(prev, cur) += h / 6.0;
      mass(cur, prev) += h / 6.0;
      prev = cur;
    }
  }

  Spectrum spec =
      generalized_eigenvalues(SymMatrix(std::move(stiffness)), SymMatrix(std::move(mass)), opts);
  return {spec.values.begin(), spec.values.begin() + k_max + 1};
}

ContinuumEstimate continuum_spectrum(const MetricGraphModel& m, int k_max, int level,
                                     const EigenOptions& opts) {
  if (level < 1) throw std::invalid_argument("refinement level must be at least 1");
  const int s = base_segment_count(m);

  ContinuumEstimate est;
  est.level = level;
  est.base_segments = s;
  est.coarse_values = fem_level_values(m, k_max, s << (level - 1), opts);
  est.fine_values = fem_level_values(m, k_max, s << level, opts);
  est.values.resize(k_max + 1);
  est.error_indicator.resize(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    // One Richardson step for an O(h^2) method: the fine error is about a
    // quarter of the coarse error.
    est.values[k] = (4.0 * est.fine_values[k] - est.coarse_values[k]) / 3.0;
    est.error_indicator[k] = std::abs(est.fine_values[k] - est.coarse_values[k]);
  }
  return est;
}

}  // namespace spectral
