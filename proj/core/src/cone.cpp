#include "spectral/cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spectral/errors.hpp"
#include "spectral/laplacian.hpp"

namespace spectral {

TriangleGeometry triangle_geometry(int max_valence) {
  if (max_valence < 1) throw std::invalid_argument("max valence must be at least 1");
  // Valence 1 only occurs for a single edge; the base-angle formula hits
  // cos(pi/2) = 0 there, and any positive area works, so reuse the valence-2
  // shape (right isoceles triangle).
  const int d = std::max(max_valence, 2);
  const double theta = std::numbers::pi / (2.0 * d);
  return {1.0 / (2.0 * std::cos(theta)), 0.25 * std::tan(theta)};
}

ConedGraph cone_construction(const RotationSystem& base) {
  base.underlying_graph();  // validates simplicity (no loops or parallel edges)

  const int V = base.order();
  const int D = base.dart_count();
  const auto faces = base.trace_faces();
  const int F = static_cast<int>(faces.size());

  std::vector<std::vector<int>> rot(V + F);
  // apex_dart_of[q]: the new dart at vertex_of(q) leading to the apex of the
  // face whose boundary walk contains q; it precedes q in the new rotation.
  std::vector<int> apex_dart_of(D, -1);
  std::vector<int> inv(D);
  for (int d = 0; d < D; ++d) inv[d] = base.partner(d);

  int next = D;
  for (int f = 0; f < F; ++f) {
    std::vector<int>& apex_rot = rot[V + f];
    for (int q : faces[f]) {
      const int at_vertex = next++;
      const int at_apex = next++;
      inv.push_back(at_apex);
      inv.push_back(at_vertex);
      apex_dart_of[q] = at_vertex;
      apex_rot.push_back(at_apex);
    }
    // Reverse boundary order at the apex makes every traced face of the coned
    // map a triangle (one graph edge, two cone edges).
    std::reverse(apex_rot.begin(), apex_rot.end());
  }
  for (int v = 0; v < V; ++v) {
    for (int q : base.rotation(v)) {
      rot[v].push_back(apex_dart_of[q]);
      rot[v].push_back(q);
    }
  }
  int max_valence = 0;
  for (int v = 0; v < V; ++v)
    max_valence = std::max(max_valence, static_cast<int>(base.rotation(v).size()));
  return {RotationSystem(std::move(rot), std::move(inv)), V, D, triangle_geometry(max_valence)};
}

TwoFoldCover star_cover(const RotationSystem& base) {
  WeightedGraph g = base.underlying_graph();
  for (int v = 0; v < g.order(); ++v)
    if (g.valence(v) == 0) throw ZeroDegreeVertex(v);
  const TriangleGeometry geom = triangle_geometry(g.max_valence());

  TwoFoldCover cover;
  for (int v = 0; v < g.order(); ++v)
    cover.cells.push_back({v, 2.0 * g.valence(v) * geom.area});
  for (const Edge& e : g.edges())
    cover.intersections[{std::min(e.u, e.v), std::max(e.u, e.v)}] = 2.0 * geom.area;
  return cover;
}

Spectrum subdivided_star_spectrum(int d) {
  if (d < 1) throw std::invalid_argument("star needs at least one leg");
  std::vector<Edge> edges;
  for (int i = 0; i < d; ++i) {
    edges.push_back({0, 1 + i, 1.0});          // center to midpoint
    edges.push_back({1 + i, 1 + d + i, 1.0});  // midpoint to leaf
  }
  return eigenvalues(normalized_laplacian(WeightedGraph(2 * d + 1, std::move(edges))));
}

GenusBoundReport genus_bound_evaluate(const RotationSystem& r, int k_max,
                                      const EigenOptions& opts) {
  const int genus = r.euler_genus();
  WeightedGraph g = r.underlying_graph();
  const int n = g.order();
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  k_max = std::min(k_max, n - 1);

  Spectrum spec = eigenvalues(normalized_laplacian(g), opts);
  GenusBoundReport report;
  report.order = n;
  report.edge_count = g.edge_count();
  report.genus = genus;
  report.max_valence = g.max_valence();
  report.max_ratio = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double lambda = spec.values[k];
    const double ratio = lambda * n / (report.max_valence * (genus + k));
    report.rows.push_back({k, lambda, ratio});
    report.max_ratio = std::max(report.max_ratio, ratio);
  }
  return report;
}

}  // namespace spectral
