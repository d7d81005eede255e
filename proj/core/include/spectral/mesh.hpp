#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spectral/cover.hpp"
#include "spectral/graph.hpp"

namespace spectral {

// Conforming simplicial mesh in dimension 2 or 3. Periodic meshes carry
// vertex identification pairs: geometry (volumes, diameters, facet measures)
// always uses the raw per-simplex coordinates, while facet matching uses the
// identified vertex classes, so a torus built from an unfolded rectangle has
// correct volumes and no boundary.
class SimplicialMesh {
 public:
  struct Adjacency {
    int a;
    int b;
    double facet_measure;  // length (2-D) or area (3-D) of the shared facet
  };

  SimplicialMesh(int dimension, std::vector<std::vector<double>> coordinates,
                 std::vector<std::vector<int>> simplices,
                 std::vector<std::pair<int, int>> identifications = {});

  int dimension() const { return dim_; }
  int vertex_count() const { return static_cast<int>(coords_.size()); }
  int simplex_count() const { return static_cast<int>(simplices_.size()); }
  const std::vector<int>& simplex(int i) const { return simplices_[i]; }
  const std::vector<double>& coordinate(int v) const { return coords_[v]; }

  double volume(int i) const { return volumes_[i]; }
  double diameter(int i) const { return diameters_[i]; }
  double total_volume() const { return total_volume_; }
  double max_diameter() const { return max_diameter_; }

  const std::vector<Adjacency>& adjacency() const { return adjacency_; }
  int boundary_facets(int i) const { return boundary_facets_[i]; }
  int boundary_facet_count() const { return boundary_facet_count_; }
  bool periodic() const { return periodic_; }

  static SimplicialMesh read(std::istream& in);
  static SimplicialMesh read_file(const std::string& path);

  const std::vector<std::pair<int, int>>& identifications() const { return identifications_; }

 private:
  int dim_;
  std::vector<std::vector<double>> coords_;
  std::vector<std::vector<int>> simplices_;
  std::vector<std::pair<int, int>> identifications_;
  bool periodic_;
  std::vector<double> volumes_;
  std::vector<double> diameters_;
  std::vector<Adjacency> adjacency_;
  std::vector<int> boundary_facets_;
  int boundary_facet_count_;
  double total_volume_;
  double max_diameter_;
};

std::string mesh_to_text(const SimplicialMesh& m);

// Facet-cone split of each simplex (coning its facets to the barycenter cuts
// it into d+1 pieces of volume vol/(d+1)). The cell of sigma is sigma plus
// the neighboring pieces leaning on its facets; two facet-adjacent cells
// overlap in the two pieces at their shared facet. Covers interior points
// exactly twice; points in boundary cones only once (almost_two_fold). The
// dual graph carries the intersection measures as edge weights.
std::pair<TwoFoldCover, WeightedGraph> barycentric_cover(const SimplicialMesh& m);

struct MeshQuality {
  double kappa;    // max volume ratio across facet-adjacent simplices
  double epsilon;  // max simplex diameter
};

MeshQuality kappa_epsilon(const SimplicialMesh& m);

}  // namespace spectral
