#pragma once

#include "spectral/mesh.hpp"

namespace spectral {

// Rectangle [0,w] x [0,h] as an nx-by-ny grid of cells, each split into two
// triangles along the same diagonal. All triangles congruent, so kappa = 1.
SimplicialMesh grid_mesh(int nx, int ny, double width = 1.0, double height = 1.0);

// Single row of cells; cut count stays O(1) as the strip grows.
SimplicialMesh strip_mesh(int n, double width = 1.0, double height = 1.0);

// Grid whose rows alternate between heights h1 and h2; vertically adjacent
// triangles have volume ratio h2/h1, so kappa = max(h1,h2)/min(h1,h2).
SimplicialMesh alternating_rows_mesh(int nx, int ny, double h1, double h2);

// Flat torus: unfolded (nx+1) x (ny+1) vertex sheet with opposite sides
// identified. Needs nx, ny >= 3 so distinct facets stay distinct. No
// boundary, so its cover is exactly 2-fold.
SimplicialMesh periodic_grid_mesh(int nx, int ny, double width = 1.0, double height = 1.0);

// Unit cube as n^3 cells of 6 Kuhn tetrahedra each (conforming, uniform).
SimplicialMesh cube_tet_mesh(int n);

}  // namespace spectral
