#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spectral/graph.hpp"

namespace spectral {

// Combinatorial map of an orientable embedding: every edge contributes two
// darts, `involution` pairs them, and rotations[v] lists the darts based at v
// in counterclockwise order around the vertex.
class RotationSystem {
 public:
  RotationSystem(std::vector<std::vector<int>> rotations, std::vector<int> involution);

  int order() const { return static_cast<int>(rotations_.size()); }
  int dart_count() const { return static_cast<int>(involution_.size()); }
  int edge_count() const { return dart_count() / 2; }

  const std::vector<int>& rotation(int v) const { return rotations_[v]; }
  int partner(int dart) const { return involution_[dart]; }
  int vertex_of(int dart) const { return dart_vertex_[dart]; }
  // Next dart counterclockwise at the dart's base vertex.
  int successor(int dart) const;

  // Each face is the dart cycle of its boundary walk; union over faces is a
  // partition of the darts.
  std::vector<std::vector<int>> trace_faces() const;
  int face_count() const { return static_cast<int>(trace_faces().size()); }
  int euler_genus() const;

  // Unit-weight simple graph carried by the map; rejects loops and parallel
  // edges, which a WeightedGraph cannot represent faithfully.
  WeightedGraph underlying_graph() const;

 private:
  std::vector<std::vector<int>> rotations_;
  std::vector<int> involution_;
  std::vector<int> dart_vertex_;
  std::vector<int> dart_position_;  // index of the dart inside its rotation
};

RotationSystem cycle_rotation(int n);           // n >= 3, genus 0
RotationSystem planar_grid_rotation(int s);     // s x s grid, s >= 2, genus 0
RotationSystem toroidal_grid_rotation(int s);   // s >= 3, genus 1
RotationSystem complete_planar_k4_rotation();   // K_4 in the plane, genus 0
RotationSystem double_torus_grid_rotation(int s);  // s >= 4, genus 2

// Dispatch on the documented family names: planar_grid, toroidal_grid, cycle,
// complete_planar_k4, double_torus_grid. Throws UnknownFamily otherwise.
RotationSystem family_rotation(const std::string& name, int size);

// Builds the counterclockwise rotation at each vertex from coordinates by
// sorting incident edges by angle. Only meaningful for plane embeddings.
RotationSystem rotation_from_positions(const WeightedGraph& g,
                                       const std::vector<std::pair<double, double>>& xy);

RotationSystem read_rotation_json(std::istream& in);
RotationSystem read_rotation_json_file(const std::string& path);
std::string rotation_to_json(const RotationSystem& r);

}  // namespace spectral
