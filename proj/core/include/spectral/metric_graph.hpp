#pragma once

#include <vector>

#include "spectral/eigensolver.hpp"
#include "spectral/graph.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

// A graph model of a metric graph: each edge carries a positive length,
// stored as the edge weight of a simple connected WeightedGraph.
class MetricGraphModel {
 public:
  explicit MetricGraphModel(WeightedGraph g);

  const WeightedGraph& graph() const { return g_; }
  int order() const { return g_.order(); }
  double min_length() const { return min_length_; }
  double max_length() const { return max_length_; }
  double total_length() const { return g_.total_weight(); }
  int max_valence() const { return g_.max_valence(); }

  // Every edge at most twice the shortest edge.
  bool length_balanced() const { return max_length_ <= 2.0 * min_length_ + 1e-12 * min_length_; }

  MetricGraphModel dilated(double beta) const;

 private:
  WeightedGraph g_;
  double min_length_;
  double max_length_;
};

// Splits every edge into `parts` equal-length edges; preserves total length
// and length balance.
MetricGraphModel subdivide(const MetricGraphModel& m, int parts);

// Spectrum of the normalized Laplacian with edge weights w_e = l_e. Exactly
// invariant under rescaling all lengths.
Spectrum weighted_normalized_spectrum(const MetricGraphModel& m, const EigenOptions& opts = {});

// Star of d intervals glued at one point.
struct MetricStar {
  std::vector<double> lengths;
  explicit MetricStar(std::vector<double> lengths);
  int degree() const { return static_cast<int>(lengths.size()); }
  double max_length() const;
};

// First k_max positive eigenvalues of the star, ascending with multiplicity.
// Roots come from two branches: zeros of sum_e tan(sqrt(lambda) l_e) between
// consecutive poles, and pole clusters where cos(sqrt(lambda) l_e) = 0 for
// c >= 2 edges at once (multiplicity c-1).
std::vector<double> star_secular_solve(const MetricStar& s, int k_max);

struct BoundRow {
  int k;
  double continuum;       // eigenvalue estimate of the metric graph
  double error_indicator;
  double bound;           // (pi^2 / (8 l_max^2)) * discrete eigenvalue
  bool holds;
  double slack;           // continuum / bound
};

struct LowerBoundReport {
  double ell_max;
  double factor;  // pi^2 / (8 l_max^2)
  std::vector<BoundRow> rows;
  bool all_hold;
};

LowerBoundReport lower_bound_check(const MetricGraphModel& m, int k_max, int level = 2,
                                   const EigenOptions& opts = {});

struct SandwichRow {
  int k;
  double lambda_nr;
  double continuum;
  double c1_hat;  // lambda_nr / (l_min^2 * continuum)
  double c2_hat;  // max_valence * lambda_nr / (l_min^2 * continuum)
};

struct SandwichReport {
  double ell_min;
  int max_valence;
  std::vector<SandwichRow> rows;
  double c1_min, c1_max, c2_min, c2_max;
};

// Requires a length-balanced model (NotLengthBalanced otherwise). Reports the
// empirical two-sided ratios; asserts nothing about universal constants.
SandwichReport sandwich_check(const MetricGraphModel& m, int k_max, int level = 2,
                              const EigenOptions& opts = {});

struct SubdivisionRow {
  int parts;
  double value;  // parts^2 * lambda_k of the subdivided weighted Laplacian
};

struct SubdivisionReport {
  int k;
  std::vector<SubdivisionRow> rows;
  double spread;  // max / min over rows
};

SubdivisionReport subdivision_stability(const MetricGraphModel& m, int k,
                                        const std::vector<int>& counts,
                                        const EigenOptions& opts = {});

struct DilationRow {
  int k;
  double base;      // estimate for the original model
  double dilated;   // estimate for the dilated model
  double expected;  // base / beta^2
  double tolerance;
  bool within;
};

struct DilationReport {
  double beta;
  double discrete_defect;  // entrywise gap between the two weighted Laplacians
  std::vector<DilationRow> rows;
  bool all_within;
};

DilationReport dilation_check(const MetricGraphModel& m, double beta, int k_max, int level = 2,
                              const EigenOptions& opts = {});

struct InterpolationReport {
  double scale;             // lengths were divided by this to make l_min = 1
  double dirichlet_energy;  // exact energy of the interpolant
  double energy_bound;      // 2 * sum of squared differences
  double ball_mass;         // (1/4) * sum of squared vertex values
  bool energy_holds;
};

// Piecewise interpolant of a vertex function: constant on the ball of radius
// 1/(4 d_v) around each vertex, affine between balls. Requires length balance.
InterpolationReport vertex_interpolation(const MetricGraphModel& m,
                                         const std::vector<double>& g);

}  // namespace spectral
