#include "spectral/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

double squared_distance(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return s;
}

std::string facet_to_string(const std::vector<int>& facet) {
  std::string s;
  for (size_t i = 0; i < facet.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(facet[i]);
  }
  return s;
}

}  // namespace

SimplicialMesh::SimplicialMesh(int dimension, std::vector<std::vector<double>> coordinates,
                               std::vector<std::vector<int>> simplices,
                               std::vector<std::pair<int, int>> identifications)
    : dim_(dimension),
      coords_(std::move(coordinates)),
      simplices_(std::move(simplices)),
      identifications_(std::move(identifications)),
      periodic_(!identifications_.empty()) {
  if (dim_ != 2 && dim_ != 3) throw std::invalid_argument("mesh dimension must be 2 or 3");
  const int nv = vertex_count();
  for (const auto& c : coords_)
    if (static_cast<int>(c.size()) != dim_)
      throw std::invalid_argument("coordinate arity does not match dimension");

  UnionFind classes(nv);
  for (const auto& [a, b] : identifications_) {
    if (a < 0 || b < 0 || a >= nv || b >= nv)
      throw std::invalid_argument("identification pair out of range");
    classes.unite(a, b);
  }

  volumes_.reserve(simplices_.size());
  diameters_.reserve(simplices_.size());
  max_diameter_ = 0.0;
  total_volume_ = 0.0;
  for (size_t i = 0; i < simplices_.size(); ++i) {
    const auto& s = simplices_[i];
    if (static_cast<int>(s.size()) != dim_ + 1)
      throw std::invalid_argument("simplex arity does not match dimension");
    std::vector<int> canon;
    for (int v : s) {
      if (v < 0 || v >= nv) throw std::invalid_argument("simplex vertex out of range");
      canon.push_back(classes.find(v));
    }
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
      throw DegenerateSimplex(static_cast<int>(i));

    Eigen::MatrixXd edges(dim_, dim_);
    for (int c = 0; c < dim_; ++c)
      for (int r = 0; r < dim_; ++r)
        edges(r, c) = coords_[s[c + 1]][r] - coords_[s[0]][r];
    double vol = std::abs(edges.determinant());
    for (int f = 2; f <= dim_; ++f) vol /= f;
    volumes_.push_back(vol);
    total_volume_ += vol;

    double diam2 = 0.0;
    for (int a = 0; a <= dim_; ++a)
      for (int b = a + 1; b <= dim_; ++b)
        diam2 = std::max(diam2, squared_distance(coords_[s[a]], coords_[s[b]]));
    diameters_.push_back(std::sqrt(diam2));
    max_diameter_ = std::max(max_diameter_, diameters_.back());
  }
  for (size_t i = 0; i < simplices_.size(); ++i) {
    double floor = 1e-14;
    for (int f = 0; f < dim_; ++f) floor *= max_diameter_;
    if (volumes_[i] <= floor) throw DegenerateSimplex(static_cast<int>(i));
  }

  // Facet key: identified vertex classes; facet geometry: raw coordinates of
  // the first incidence.
  struct Incidence {
    int simplex;
    std::vector<int> raw;
  };
  std::map<std::vector<int>, std::vector<Incidence>> facets;
  for (size_t i = 0; i < simplices_.size(); ++i) {
    const auto& s = simplices_[i];
    for (int omit = 0; omit <= dim_; ++omit) {
      std::vector<int> raw, key;
      for (int v = 0; v <= dim_; ++v) {
        if (v == omit) continue;
        raw.push_back(s[v]);
        key.push_back(classes.find(s[v]));
      }
      std::sort(key.begin(), key.end());
      facets[key].push_back({static_cast<int>(i), raw});
    }
  }

  boundary_facets_.assign(simplices_.size(), 0);
  boundary_facet_count_ = 0;
  for (const auto& [key, incidences] : facets) {
    if (incidences.size() > 2) throw NonManifoldFacet(facet_to_string(key));
    if (incidences.size() == 1) {
      ++boundary_facets_[incidences[0].simplex];
      ++boundary_facet_count_;
      continue;
    }
    const auto& raw = incidences[0].raw;
    double measure;
    if (dim_ == 2) {
      measure = std::sqrt(squared_distance(coords_[raw[0]], coords_[raw[1]]));
    } else {
      Eigen::Vector3d p, q;
      for (int r = 0; r < 3; ++r) {
        p(r) = coords_[raw[1]][r] - coords_[raw[0]][r];
        q(r) = coords_[raw[2]][r] - coords_[raw[0]][r];
      }
      measure = 0.5 * p.cross(q).norm();
    }
    const int a = std::min(incidences[0].simplex, incidences[1].simplex);
    const int b = std::max(incidences[0].simplex, incidences[1].simplex);
    adjacency_.push_back({a, b, measure});
  }
  std::sort(adjacency_.begin(), adjacency_.end(), [](const Adjacency& x, const Adjacency& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
}

SimplicialMesh SimplicialMesh::read(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    if (raw.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(raw);
  }
  if (lines.empty()) throw ParseError("empty mesh file");

  std::istringstream header(lines[0]);
  int dim = 0, nv = 0, ns = 0, np = 0;
  if (!(header >> dim >> nv >> ns)) throw ParseError("mesh header must read `d nv ns`");
  std::string token;
  if (header >> token) {
    if (token != "periodic" || !(header >> np) || np < 0)
      throw ParseError("mesh header trailer must be `periodic np`");
  }
  if (nv <= 0 || ns <= 0) throw ParseError("mesh must have vertices and simplices");
  if (static_cast<int>(lines.size()) != 1 + nv + ns + np)
    throw ParseError("mesh file line count does not match header");

  std::vector<std::vector<double>> coords(nv, std::vector<double>(dim));
  for (int v = 0; v < nv; ++v) {
    std::istringstream ls(lines[1 + v]);
    for (int c = 0; c < dim; ++c)
      if (!(ls >> coords[v][c])) throw ParseError("bad coordinate line: " + lines[1 + v]);
  }
  std::vector<std::vector<int>> simplices(ns, std::vector<int>(dim + 1));
  for (int s = 0; s < ns; ++s) {
    std::istringstream ls(lines[1 + nv + s]);
    for (int c = 0; c <= dim; ++c)
      if (!(ls >> simplices[s][c])) throw ParseError("bad simplex line: " + lines[1 + nv + s]);
  }
  std::vector<std::pair<int, int>> ident(np);
  for (int p = 0; p < np; ++p) {
    std::istringstream ls(lines[1 + nv + ns + p]);
    if (!(ls >> ident[p].first >> ident[p].second))
      throw ParseError("bad identification line: " + lines[1 + nv + ns + p]);
  }
  try {
    return SimplicialMesh(dim, std::move(coords), std::move(simplices), std::move(ident));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SimplicialMesh SimplicialMesh::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read(in);
}

std::string mesh_to_text(const SimplicialMesh& m) {
  std::string out = std::to_string(m.dimension()) + " " + std::to_string(m.vertex_count()) +
                    " " + std::to_string(m.simplex_count());
  if (m.periodic()) out += " periodic " + std::to_string(m.identifications().size());
  out += "\n";
  char buf[64];
  for (int v = 0; v < m.vertex_count(); ++v) {
    const auto& c = m.coordinate(v);
    for (int i = 0; i < m.dimension(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", c[i]);
      out += buf;
      out += (i + 1 == m.dimension()) ? "\n" : " ";
    }
  }
  for (int s = 0; s < m.simplex_count(); ++s) {
    const auto& t = m.simplex(s);
    for (size_t i = 0; i < t.size(); ++i) {
      out += std::to_string(t[i]);
      out += (i + 1 == t.size()) ? "\n" : " ";
    }
  }
  for (const auto& [a, b] : m.identifications())
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

std::pair<TwoFoldCover, WeightedGraph> barycentric_cover(const SimplicialMesh& m) {
  const int n = m.simplex_count();
  const double frac = 1.0 / (m.dimension() + 1);

  TwoFoldCover cover;
  cover.almost_two_fold = m.boundary_facet_count() > 0;
  std::vector<double> measures(n);
  for (int i = 0; i < n; ++i) measures[i] = m.volume(i);
  std::vector<Edge> dual_edges;
  for (const auto& adj : m.adjacency()) {
    measures[adj.a] += frac * m.volume(adj.b);
    measures[adj.b] += frac * m.volume(adj.a);
    const double w = frac * (m.volume(adj.a) + m.volume(adj.b));
    cover.intersections[{adj.a, adj.b}] = w;
    dual_edges.push_back({adj.a, adj.b, w});
  }
  for (int i = 0; i < n; ++i) cover.cells.push_back({i, measures[i]});
  return {std::move(cover), WeightedGraph(n, std::move(dual_edges))};
}

MeshQuality kappa_epsilon(const SimplicialMesh& m) {
  double kappa = 1.0;
  for (const auto& adj : m.adjacency()) {
    const double ratio = m.volume(adj.a) / m.volume(adj.b);
    kappa = std::max({kappa, ratio, 1.0 / ratio});
  }
  return {kappa, m.max_diameter()};
}

}  // namespace spectral
