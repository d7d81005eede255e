#include "spectral/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "spectral/errors.hpp"

namespace spectral {

RotationSystem::RotationSystem(std::vector<std::vector<int>> rotations,
                               std::vector<int> involution)
    : rotations_(std::move(rotations)), involution_(std::move(involution)) {
  const int darts = static_cast<int>(involution_.size());
  if (darts == 0 || darts % 2 != 0)
    throw std::invalid_argument("dart count must be positive and even");
  for (int d = 0; d < darts; ++d) {
    const int p = involution_[d];
    if (p < 0 || p >= darts || p == d || involution_[p] != d)
      throw std::invalid_argument("involution must pair darts without fixed points");
  }
  dart_vertex_.assign(darts, -1);
  dart_position_.assign(darts, -1);
  for (int v = 0; v < order(); ++v) {
    for (size_t i = 0; i < rotations_[v].size(); ++i) {
      const int d = rotations_[v][i];
      if (d < 0 || d >= darts) throw std::invalid_argument("dart id out of range in rotation");
      if (dart_vertex_[d] != -1) throw std::invalid_argument("dart appears in two rotations");
      dart_vertex_[d] = v;
      dart_position_[d] = static_cast<int>(i);
    }
  }
  for (int d = 0; d < darts; ++d)
    if (dart_vertex_[d] == -1) throw std::invalid_argument("dart missing from all rotations");
}

int RotationSystem::successor(int dart) const {
  const auto& rot = rotations_[dart_vertex_[dart]];
  return rot[(dart_position_[dart] + 1) % rot.size()];
}

std::vector<std::vector<int>> RotationSystem::trace_faces() const {
  std::vector<bool> seen(dart_count(), false);
  std::vector<std::vector<int>> faces;
  for (int d0 = 0; d0 < dart_count(); ++d0) {
    if (seen[d0]) continue;
    std::vector<int> face;
    int d = d0;
    do {
      seen[d] = true;
      face.push_back(d);
      d = successor(involution_[d]);
    } while (d != d0);
    faces.push_back(std::move(face));
  }
  return faces;
}

int RotationSystem::euler_genus() const {
  // BFS over vertices through darts; Euler's formula needs one component.
  std::vector<bool> visited(order(), false);
  std::queue<int> q;
  q.push(0);
  visited[0] = true;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int d : rotations_[v]) {
      const int u = vertex_of(involution_[d]);
      if (!visited[u]) {
        visited[u] = true;
        ++reached;
        q.push(u);
      }
    }
  }
  if (reached != order()) throw Disconnected("rotation system is not connected");

  const int chi_defect = 2 - order() + edge_count() - static_cast<int>(trace_faces().size());
  if (chi_defect % 2 != 0)
    throw NonOrientableArtifact("Euler characteristic " + std::to_string(2 - chi_defect) +
                                " is odd; not an orientable closed surface");
  return chi_defect / 2;
}

WeightedGraph RotationSystem::underlying_graph() const {
  std::set<std::pair<int, int>> present;
  std::vector<Edge> edges;
  for (int d = 0; d < dart_count(); ++d) {
    if (d > involution_[d]) continue;
    const int u = vertex_of(d), v = vertex_of(involution_[d]);
    if (u == v) throw std::invalid_argument("rotation system carries a self-loop");
    if (!present.insert({std::min(u, v), std::max(u, v)}).second)
      throw std::invalid_argument("rotation system carries parallel edges");
    edges.push_back({u, v, 1.0});
  }
  return WeightedGraph(order(), std::move(edges));
}

RotationSystem cycle_rotation(int n) {
  if (n < 3) throw TooSmall("cycle family needs size >= 3, got " + std::to_string(n));
  std::vector<std::vector<int>> rot(n);
  std::vector<int> inv(2 * n);
  for (int i = 0; i < n; ++i) {
    inv[2 * i] = 2 * i + 1;
    inv[2 * i + 1] = 2 * i;
    rot[i] = {2 * i, 2 * ((i + n - 1) % n) + 1};
  }
  return RotationSystem(std::move(rot), std::move(inv));
}

RotationSystem rotation_from_positions(const WeightedGraph& g,
                                       const std::vector<std::pair<double, double>>& xy) {
  if (static_cast<int>(xy.size()) != g.order())
    throw std::invalid_argument("one coordinate pair per vertex required");
  const auto& edges = g.edges();
  std::vector<std::vector<std::pair<double, int>>> by_angle(g.order());
  std::vector<int> inv(2 * edges.size());
  for (size_t j = 0; j < edges.size(); ++j) {
    const auto& e = edges[j];
    inv[2 * j] = static_cast<int>(2 * j + 1);
    inv[2 * j + 1] = static_cast<int>(2 * j);
    const double dx = xy[e.v].first - xy[e.u].first, dy = xy[e.v].second - xy[e.u].second;
    by_angle[e.u].push_back({std::atan2(dy, dx), static_cast<int>(2 * j)});
    by_angle[e.v].push_back({std::atan2(-dy, -dx), static_cast<int>(2 * j + 1)});
  }
  std::vector<std::vector<int>> rot(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::sort(by_angle[v].begin(), by_angle[v].end());
    for (const auto& [angle, d] : by_angle[v]) rot[v].push_back(d);
  }
  return RotationSystem(std::move(rot), std::move(inv));
}

RotationSystem planar_grid_rotation(int s) {
  if (s < 2) throw TooSmall("planar_grid family needs size >= 2, got " + std::to_string(s));
  std::vector<Edge> edges;
  std::vector<std::pair<double, double>> xy(s * s);
  for (int y = 0; y < s; ++y) {
    for (int x = 0; x < s; ++x) {
      const int v = y * s + x;
      xy[v] = {double(x), double(y)};
      if (x + 1 < s) edges.push_back({v, v + 1, 1.0});
      if (y + 1 < s) edges.push_back({v, v + s, 1.0});
    }
  }
  return rotation_from_positions(WeightedGraph(s * s, std::move(edges)), xy);
}

namespace {

// Toroidal grid darts: vertex v = y*s + x owns its east edge (darts 4v, 4v+1)
// and its north edge (darts 4v+2, 4v+3); odd darts sit at the head vertex.
struct TorusDarts {
  int s;
  int vid(int x, int y) const { return ((y + s) % s) * s + (x + s) % s; }
  int east(int x, int y) const { return 4 * vid(x, y); }
  int north(int x, int y) const { return 4 * vid(x, y) + 2; }
  int west(int x, int y) const { return 4 * vid(x - 1, y) + 1; }
  int south(int x, int y) const { return 4 * vid(x, y - 1) + 3; }
};

}  // namespace

RotationSystem toroidal_grid_rotation(int s) {
  if (s < 3) throw TooSmall("toroidal_grid family needs size >= 3, got " + std::to_string(s));
  TorusDarts t{s};
  std::vector<int> inv(4 * s * s);
  std::vector<std::vector<int>> rot(s * s);
  for (int y = 0; y < s; ++y) {
    for (int x = 0; x < s; ++x) {
      const int v = t.vid(x, y);
      inv[4 * v] = 4 * v + 1;
      inv[4 * v + 1] = 4 * v;
      inv[4 * v + 2] = 4 * v + 3;
      inv[4 * v + 3] = 4 * v + 2;
      rot[v] = {t.east(x, y), t.north(x, y), t.west(x, y), t.south(x, y)};
    }
  }
  return RotationSystem(std::move(rot), std::move(inv));
}

RotationSystem complete_planar_k4_rotation() {
  std::vector<Edge> edges = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0},
                             {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}};
  const double r3 = std::sqrt(3.0) / 2.0;
  std::vector<std::pair<double, double>> xy = {{0.0, 0.0}, {1.0, 0.0}, {-0.5, r3}, {-0.5, -r3}};
  return rotation_from_positions(WeightedGraph(4, std::move(edges)), xy);
}

RotationSystem double_torus_grid_rotation(int s) {
  if (s < 4) throw TooSmall("double_torus_grid family needs size >= 4, got " + std::to_string(s));
  TorusDarts t{s};
  RotationSystem torus = toroidal_grid_rotation(s);
  std::vector<std::vector<int>> rot(s * s);
  for (int v = 0; v < s * s; ++v) rot[v] = torus.rotation(v);
  std::vector<int> inv(4 * s * s + 8);
  for (int d = 0; d < 4 * s * s; ++d) inv[d] = torus.partner(d);

  // A handle between the faces with corner squares {0,1}^2 and {2,3}^2, with
  // four edges routed through it. Corner order reverses across the handle so
  // the four new quadrilateral faces close; this adds exactly one to the genus.
  const int D = 4 * s * s;
  struct Tube {
    int ax, ay, bx, by;
  };
  const Tube tubes[4] = {{0, 1, 2, 3}, {1, 1, 2, 2}, {1, 0, 3, 2}, {0, 0, 3, 3}};
  auto insert_after = [](std::vector<int>& r, int anchor, int dart) {
    auto it = std::find(r.begin(), r.end(), anchor);
    r.insert(it + 1, dart);
  };
  for (int i = 0; i < 4; ++i) {
    const int ta = D + 2 * i, tb = D + 2 * i + 1;
    inv[ta] = tb;
    inv[tb] = ta;
    const Tube& u = tubes[i];
    switch (i) {
      case 0:  // between S and E, i.e. after S
        insert_after(rot[t.vid(u.ax, u.ay)], t.south(u.ax, u.ay), ta);
        insert_after(rot[t.vid(u.bx, u.by)], t.south(u.bx, u.by), tb);
        break;
      case 1:  // a-side after W; b-side after E
        insert_after(rot[t.vid(u.ax, u.ay)], t.west(u.ax, u.ay), ta);
        insert_after(rot[t.vid(u.bx, u.by)], t.east(u.bx, u.by), tb);
        break;
      case 2:  // a-side after N; b-side after N
        insert_after(rot[t.vid(u.ax, u.ay)], t.north(u.ax, u.ay), ta);
        insert_after(rot[t.vid(u.bx, u.by)], t.north(u.bx, u.by), tb);
        break;
      case 3:  // a-side after E; b-side after W
        insert_after(rot[t.vid(u.ax, u.ay)], t.east(u.ax, u.ay), ta);
        insert_after(rot[t.vid(u.bx, u.by)], t.west(u.bx, u.by), tb);
        break;
    }
  }
  return RotationSystem(std::move(rot), std::move(inv));
}

RotationSystem family_rotation(const std::string& name, int size) {
  if (name == "cycle") return cycle_rotation(size);
  if (name == "planar_grid") return planar_grid_rotation(size);
  if (name == "toroidal_grid") return toroidal_grid_rotation(size);
  if (name == "double_torus_grid") return double_torus_grid_rotation(size);
  if (name == "complete_planar_k4") {
    if (size != 0 && size != 4)
      throw std::invalid_argument("complete_planar_k4 has fixed size 4");
    return complete_planar_k4_rotation();
  }
  throw UnknownFamily(name);
}

RotationSystem read_rotation_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad rotation JSON: ") + e.what());
  }
  try {
    std::vector<std::vector<int>> rot = j.at("rotations").get<std::vector<std::vector<int>>>();
    size_t darts = 0;
    for (const auto& r : rot) darts += r.size();
    std::vector<int> inv(darts, -1);
    for (const auto& pair : j.at("involution")) {
      const int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
      if (a < 0 || b < 0 || a >= static_cast<int>(darts) || b >= static_cast<int>(darts) ||
          inv[a] != -1 || inv[b] != -1)
        throw ParseError("bad involution pair in rotation JSON");
      inv[a] = b;
      inv[b] = a;
    }
    return RotationSystem(std::move(rot), std::move(inv));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad rotation JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid rotation system: ") + e.what());
  }
}

RotationSystem read_rotation_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_rotation_json(in);
}

std::string rotation_to_json(const RotationSystem& r) {
  nlohmann::json j;
  j["rotations"] = nlohmann::json::array();
  for (int v = 0; v < r.order(); ++v) j["rotations"].push_back(r.rotation(v));
  j["involution"] = nlohmann::json::array();
  for (int d = 0; d < r.dart_count(); ++d)
    if (d < r.partner(d)) j["involution"].push_back({d, r.partner(d)});
  return j.dump();
}

}  // namespace spectral
