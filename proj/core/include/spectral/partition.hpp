#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spectral/eigensolver.hpp"
#include "spectral/graph.hpp"
#include "spectral/mesh.hpp"

namespace spectral {

struct Partition {
  std::vector<int> side;                      // 0 or 1 per dual vertex
  std::vector<std::pair<int, int>> cut_edges; // dual edges with endpoints on both sides
  double cut_weight;
  double conductance;   // cut weight / smaller side's weighted degree sum
  double balance;       // smaller side's share of the total weighted degree
  double fiedler_value;
};

// Fiedler sweep cut of the dual graph: vertices ordered by the degree-scaled
// Fiedler vector, all prefix cuts scored, best conductance wins among
// prefixes with balance >= balance_floor (all prefixes if none qualifies).
// Conductance ties break toward better balance, then lower prefix index.
Partition spectral_cut(const WeightedGraph& dual, double balance_floor = 0.1,
                       const EigenOptions& opts = {});

struct PartitionReport {
  int cut_count;
  double cut_facet_measure;  // total length/area of facets crossed by the cut
  double conductance;
  double balance;
  double volume_balance;     // smaller side's share of the mesh volume
  double fiedler_value;
  double kappa;
  double epsilon;
  // Present when the domain's first nonzero Neumann value is supplied.
  std::optional<double> fiedler_ratio;  // fiedler / (kappa^2 * lambda1 * eps^2)
  std::optional<double> cut_ratio;      // cut_count * eps / (kappa * sqrt(lambda1))
};

PartitionReport partition_report(const SimplicialMesh& m, const WeightedGraph& dual,
                                 const Partition& p,
                                 std::optional<double> lambda1_domain = std::nullopt);

}  // namespace spectral
