#include "spectral/mesh_gen.hpp"

#include <stdexcept>
#include <vector>

namespace spectral {

namespace {

SimplicialMesh build_grid(int nx, int ny, const std::vector<double>& xs,
                          const std::vector<double>& ys, bool wrap) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("grid needs at least one cell per axis");
  if (wrap && (nx < 3 || ny < 3))
    throw std::invalid_argument("periodic grid needs at least 3 cells per axis");
  auto vid = [nx](int x, int y) { return y * (nx + 1) + x; };

  std::vector<std::vector<double>> coords;
  coords.reserve((nx + 1) * (ny + 1));
  for (int y = 0; y <= ny; ++y)
    for (int x = 0; x <= nx; ++x) coords.push_back({xs[x], ys[y]});

  std::vector<std::vector<int>> tris;
  tris.reserve(2 * nx * ny);
  for (int y = 0; y < ny; ++y) {
    for (int x = 0; x < nx; ++x) {
      const int ll = vid(x, y), lr = vid(x + 1, y), ul = vid(x, y + 1), ur = vid(x + 1, y + 1);
      tris.push_back({ll, lr, ur});
      tris.push_back({ll, ur, ul});
    }
  }

  std::vector<std::pair<int, int>> ident;
  if (wrap) {
    for (int y = 0; y <= ny; ++y) ident.push_back({vid(nx, y), vid(0, y)});
    for (int x = 0; x <= nx; ++x) ident.push_back({vid(x, ny), vid(x, 0)});
  }
  return SimplicialMesh(2, std::move(coords), std::move(tris), std::move(ident));
}

std::vector<double> uniform_breaks(int n, double total) {
  std::vector<double> b(n + 1);
  for (int i = 0; i <= n; ++i) b[i] = total * i / n;
  return b;
}

}  // namespace

SimplicialMesh grid_mesh(int nx, int ny, double width, double height) {
  return build_grid(nx, ny, uniform_breaks(nx, width), uniform_breaks(ny, height), false);
}

SimplicialMesh strip_mesh(int n, double width, double height) {
  return grid_mesh(n, 1, width, height);
}

SimplicialMesh alternating_rows_mesh(int nx, int ny, double h1, double h2) {
  std::vector<double> ys(ny + 1);
  ys[0] = 0.0;
  for (int y = 0; y < ny; ++y) ys[y + 1] = ys[y] + (y % 2 == 0 ? h1 : h2);
  return build_grid(nx, ny, uniform_breaks(nx, 1.0), ys, false);
}

SimplicialMesh periodic_grid_mesh(int nx, int ny, double width, double height) {
  return build_grid(nx, ny, uniform_breaks(nx, width), uniform_breaks(ny, height), true);
}

SimplicialMesh cube_tet_mesh(int n) {
  if (n < 1) throw std::invalid_argument("cube mesh needs at least one cell per axis");
  auto vid = [n](int x, int y, int z) { return (z * (n + 1) + y) * (n + 1) + x; };

  std::vector<std::vector<double>> coords;
  coords.reserve((n + 1) * (n + 1) * (n + 1));
  for (int z = 0; z <= n; ++z)
    for (int y = 0; y <= n; ++y)
      for (int x = 0; x <= n; ++x)
        coords.push_back({double(x) / n, double(y) / n, double(z) / n});

  // Kuhn split: walk from corner (0,0,0) to (1,1,1) along each of the six
  // axis orders; the resulting tetrahedra tile the cube conformingly.
  const int orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> tets;
  tets.reserve(6 * n * n * n);
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        for (const auto& order : orders) {
          int p[3] = {x, y, z};
          std::vector<int> tet = {vid(p[0], p[1], p[2])};
          for (int step = 0; step < 3; ++step) {
            ++p[order[step]];
            tet.push_back(vid(p[0], p[1], p[2]));
          }
          tets.push_back(std::move(tet));
        }
      }
    }
  }
  return SimplicialMesh(3, std::move(coords), std::move(tets));
}

}  // namespace spectral
