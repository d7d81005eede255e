#pragma once

#include "spectral/cover.hpp"
#include "spectral/eigensolver.hpp"
#include "spectral/rotation.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

// Isoceles triangle with unit base (a graph edge), apex at a cone point.
// Base angles are pi/(2*max_valence), so the 2*d_v triangles meeting at a
// graph vertex of valence d_v fit within total angle <= pi there.
struct TriangleGeometry {
  double side;  // length of the two equal sides
  double area;
};

TriangleGeometry triangle_geometry(int max_valence);

// Result of coning every face of an embedded graph to a new apex vertex.
// Vertices [0, base_order) and darts [0, base_dart_count) are the original
// graph; cone vertex base_order + f sits over face f of the base tracing.
struct ConedGraph {
  RotationSystem map;
  int base_order;
  int base_dart_count;
  TriangleGeometry geometry;
};

ConedGraph cone_construction(const RotationSystem& base);

// Stars of the coned triangulation around original vertices, measured by
// triangle area: mu(S_v) = 2 d_v area, mu(S_u cap S_v) = 2 area per edge.
// This is always an exact 2-fold cover whose cover Laplacian equals the
// normalized Laplacian of the base graph.
TwoFoldCover star_cover(const RotationSystem& base);

// Star graph with d legs and a midpoint inserted on every leg. Its spectral
// gap stays bounded away from zero as d grows (1 - 1/sqrt(2) for d >= 2).
Spectrum subdivided_star_spectrum(int d);

struct GenusBoundRow {
  int k;
  double lambda;  // k-th normalized Laplacian eigenvalue
  double ratio;   // lambda * n / (max_valence * (genus + k))
};

struct GenusBoundReport {
  int order;
  int edge_count;
  int genus;
  int max_valence;
  std::vector<GenusBoundRow> rows;
  double max_ratio;
};

// Evaluates the eigenvalue/genus ratio profile of the embedded graph; the
// sup ratio is reported as a measured constant, never asserted against one.
// k_max is clamped to n - 1.
GenusBoundReport genus_bound_evaluate(const RotationSystem& r, int k_max,
                                      const EigenOptions& opts = {});

}  // namespace spectral
