#include "spectral/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spectral/errors.hpp"
#include "spectral/fem.hpp"
#include "spectral/laplacian.hpp"

namespace spectral {

MetricGraphModel::MetricGraphModel(WeightedGraph g) : g_(std::move(g)) {
  if (g_.order() < 2 || g_.edge_count() == 0)
    throw std::invalid_argument("metric graph model needs at least one edge");
  if (!g_.is_connected()) throw Disconnected("metric graph model must be connected");
  min_length_ = std::numeric_limits<double>::infinity();
  max_length_ = 0.0;
  for (const Edge& e : g_.edges()) {
    min_length_ = std::min(min_length_, e.w);
    max_length_ = std::max(max_length_, e.w);
  }
}

MetricGraphModel MetricGraphModel::dilated(double beta) const {
  if (beta <= 0.0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<Edge> edges = g_.edges();
  for (Edge& e : edges) e.w *= beta;
  return MetricGraphModel(WeightedGraph(g_.order(), std::move(edges)));
}

MetricGraphModel subdivide(const MetricGraphModel& m, int parts) {
  if (parts < 1) throw std::invalid_argument("subdivision count must be at least 1");
  if (parts == 1) return m;
  const WeightedGraph& g = m.graph();
  std::vector<Edge> edges;
  int next = g.order();
  for (const Edge& e : g.edges()) {
    const double piece = e.w / parts;
    int prev = e.u;
    for (int i = 1; i < parts; ++i) {
      edges.push_back({prev, next, piece});
      prev = next++;
    }
    edges.push_back({prev, e.v, piece});
  }
  return MetricGraphModel(WeightedGraph(next, std::move(edges)));
}

Spectrum weighted_normalized_spectrum(const MetricGraphModel& m, const EigenOptions& opts) {
  return eigenvalues(normalized_laplacian(m.graph()), opts);
}

LowerBoundReport lower_bound_check(const MetricGraphModel& m, int k_max, int level,
                                   const EigenOptions& opts) {
  const int k_eff = std::min(k_max, m.order() - 1);
  ContinuumEstimate est = continuum_spectrum(m, k_eff, level, opts);
  Spectrum discrete = weighted_normalized_spectrum(m, opts);

  LowerBoundReport report;
  report.ell_max = m.max_length();
  report.factor = std::numbers::pi * std::numbers::pi / (8.0 * report.ell_max * report.ell_max);
  report.all_hold = true;
  for (int k = 1; k <= k_eff; ++k) {
    BoundRow row;
    row.k = k;
    row.continuum = est.values[k];
    row.error_indicator = est.error_indicator[k];
    row.bound = report.factor * discrete.values[k];
    // The FEM value overestimates the true eigenvalue (conforming Galerkin),
    // so the inequality is tested against the extrapolated value minus its
    // error band.
    row.holds = row.continuum + row.error_indicator >= row.bound * (1.0 - 1e-9) - 1e-12;
    row.slack = row.bound > 0.0 ? row.continuum / row.bound
                                : std::numeric_limits<double>::infinity();
    report.all_hold = report.all_hold && row.holds;
    report.rows.push_back(row);
  }
  return report;
}

SandwichReport sandwich_check(const MetricGraphModel& m, int k_max, int level,
                              const EigenOptions& opts) {
  if (!m.length_balanced())
    throw NotLengthBalanced("model has an edge longer than twice the shortest edge");
  const int k_eff = std::min(k_max, m.order() - 1);
  ContinuumEstimate est = continuum_spectrum(m, k_eff, level, opts);
  Spectrum discrete = weighted_normalized_spectrum(m, opts);

  SandwichReport report;
  report.ell_min = m.min_length();
  report.max_valence = m.max_valence();
  report.c1_min = report.c2_min = std::numeric_limits<double>::infinity();
  report.c1_max = report.c2_max = 0.0;
  const double lmin2 = report.ell_min * report.ell_min;
  for (int k = 1; k <= k_eff; ++k) {
    SandwichRow row;
    row.k = k;
    row.lambda_nr = discrete.values[k];
    row.continuum = est.values[k];
    row.c1_hat = row.lambda_nr / (lmin2 * row.continuum);
    row.c2_hat = report.max_valence * row.c1_hat;
    report.c1_min = std::min(report.c1_min, row.c1_hat);
    report.c1_max = std::max(report.c1_max, row.c1_hat);
    report.c2_min = std::min(report.c2_min, row.c2_hat);
    report.c2_max = std::max(report.c2_max, row.c2_hat);
    report.rows.push_back(row);
  }
  return report;
}

SubdivisionReport subdivision_stability(const MetricGraphModel& m, int k,
                                        const std::vector<int>& counts,
                                        const EigenOptions& opts) {
  if (!m.length_balanced())
    throw NotLengthBalanced("model has an edge longer than twice the shortest edge");
  if (k < 1 || k > m.order() - 1) throw std::invalid_argument("k out of range");

  SubdivisionReport report;
  report.k = k;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int parts : counts) {
    MetricGraphModel sub = subdivide(m, parts);
    Spectrum spec = weighted_normalized_spectrum(sub, opts);
    const double value = double(parts) * parts * spec.values[k];
    lo = std::min(lo, value);
    hi = std::max(hi, value);
    report.rows.push_back({parts, value});
  }
  report.spread = hi / lo;
  return report;
}

DilationReport dilation_check(const MetricGraphModel& m, double beta, int k_max, int level,
                              const EigenOptions& opts) {
  MetricGraphModel scaled = m.dilated(beta);

  DilationReport report;
  report.beta = beta;
  report.discrete_defect =
      (normalized_laplacian(m.graph()).mat() - normalized_laplacian(scaled.graph()).mat())
          .cwiseAbs()
          .maxCoeff();

  const int k_eff = std::min(k_max, m.order() - 1);
  ContinuumEstimate base = continuum_spectrum(m, k_eff, level, opts);
  ContinuumEstimate dil = continuum_spectrum(scaled, k_eff, level, opts);
  report.all_within = true;
  for (int k = 1; k <= k_eff; ++k) {
    DilationRow row;
    row.k = k;
    row.base = base.values[k];
    row.dilated = dil.values[k];
    row.expected = row.base / (beta * beta);
    row.tolerance = base.error_indicator[k] / (beta * beta) + dil.error_indicator[k] +
                    1e-9 * std::abs(row.expected) + 1e-12;
    row.within = std::abs(row.dilated - row.expected) <= row.tolerance;
    report.all_within = report.all_within && row.within;
    report.rows.push_back(row);
  }
  return report;
}

InterpolationReport vertex_interpolation(const MetricGraphModel& m,
                                         const std::vector<double>& g) {
  if (!m.length_balanced())
    throw NotLengthBalanced("model has an edge longer than twice the shortest edge");
  if (static_cast<int>(g.size()) != m.order())
    throw std::invalid_argument("one value per vertex required");

  InterpolationReport report;
  report.scale = m.min_length();
  const WeightedGraph& graph = m.graph();
  double energy = 0.0, diff2 = 0.0;
  for (const Edge& e : graph.edges()) {
    const double len = e.w / report.scale;  // rescaled so the shortest edge is 1
    const double middle = len - 0.25 / graph.valence(e.u) - 0.25 / graph.valence(e.v);
    const double d = g[e.u] - g[e.v];
    energy += d * d / middle;
    diff2 += d * d;
  }
  report.dirichlet_energy = energy;
  report.energy_bound = 2.0 * diff2;
  double mass = 0.0;
  for (double value : g) mass += value * value;
  report.ball_mass = 0.25 * mass;
  report.energy_holds = energy <= report.energy_bound * (1.0 + 1e-12) + 1e-15;
  return report;
}

}  // namespace spectral
