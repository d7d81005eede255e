#pragma once

#include <vector>

#include "spectral/eigensolver.hpp"
#include "spectral/metric_graph.hpp"

namespace spectral {

// Piecewise-linear Galerkin estimate of metric-graph eigenvalues. Each edge is
// split into s * 2^level segments, where the base count s keeps every segment
// at or below l_min / 4 from level 1 on. Function continuity at vertices plus
// the natural variational conditions encode the zero slope-sum vertex law.
struct ContinuumEstimate {
  std::vector<double> values;           // Richardson-extrapolated estimates
  std::vector<double> fine_values;      // raw estimates at `level`
  std::vector<double> coarse_values;    // raw estimates at `level - 1`
  std::vector<double> error_indicator;  // |fine - coarse| per k
  int level;
  int base_segments;  // s

  int size() const { return static_cast<int>(values.size()); }
};

ContinuumEstimate continuum_spectrum(const MetricGraphModel& m, int k_max, int level,
                                     const EigenOptions& opts = {});

// Single-level solve (k_max + 1 lowest values, ascending), exposed for
// convergence studies.
std::vector<double> fem_level_values(const MetricGraphModel& m, int k_max, int segments_per_edge,
                                     const EigenOptions& opts = {});

}  // namespace spectral
