#include "spectral/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "spectral/errors.hpp"
#include "spectral/laplacian.hpp"

namespace spectral {

Partition spectral_cut(const WeightedGraph& dual, double balance_floor, const EigenOptions& opts) {
  const int n = dual.order();
  if (n < 2) throw TooSmall("dual graph has fewer than 2 vertices; nothing to cut");
  if (balance_floor < 0.0 || balance_floor > 0.5)
    throw std::invalid_argument("balance floor must lie in [0, 0.5]");

  const auto [fiedler_value, fiedler_vec] = fiedler_vector(normalized_laplacian(dual), opts);

  // Sweep in the order of the degree-scaled embedding; index breaks ties so
  // symmetric graphs still cut deterministically.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> y(n);
  for (int v = 0; v < n; ++v) y[v] = fiedler_vec(v) / std::sqrt(dual.weighted_degree(v));
  std::sort(order.begin(), order.end(),
            [&y](int a, int b) { return y[a] != y[b] ? y[a] < y[b] : a < b; });

  const double total = 2.0 * dual.total_weight();
  std::vector<bool> in_prefix(n, false);
  double cut = 0.0, vol = 0.0;
  int best_prefix = -1;
  double best_cond = 0.0, best_balance = 0.0;
  bool best_meets_floor = false;
  struct Candidate {
    double cut, cond, balance;
  };
  std::vector<Candidate> sweep(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    const int v = order[i];
    double to_prefix = 0.0;
    for (const auto& [u, w] : dual.neighbors(v))
      if (in_prefix[u]) to_prefix += w;
    in_prefix[v] = true;
    cut += dual.weighted_degree(v) - 2.0 * to_prefix;
    vol += dual.weighted_degree(v);
    const double small = std::min(vol, total - vol);
    sweep[i] = {cut, cut / small, small / total};
  }
  for (int i = 0; i + 1 < n; ++i) {
    const bool meets = sweep[i].balance >= balance_floor - 1e-12;
    const bool better =
        best_prefix < 0 || (meets && !best_meets_floor) ||
        (meets == best_meets_floor &&
         (sweep[i].cond < best_cond ||
          (sweep[i].cond == best_cond && sweep[i].balance > best_balance)));
    if (better) {
      best_prefix = i;
      best_cond = sweep[i].cond;
      best_balance = sweep[i].balance;
      best_meets_floor = meets;
    }
  }

  Partition p;
  p.side.assign(n, 1);
  for (int i = 0; i <= best_prefix; ++i) p.side[order[i]] = 0;
  for (const Edge& e : dual.edges())
    if (p.side[e.u] != p.side[e.v]) p.cut_edges.push_back({e.u, e.v});
  p.cut_weight = sweep[best_prefix].cut;
  p.conductance = best_cond;
  p.balance = best_balance;
  p.fiedler_value = fiedler_value;
  return p;
}

PartitionReport partition_report(const SimplicialMesh& m, const WeightedGraph& dual,
                                 const Partition& p, std::optional<double> lambda1_domain) {
  if (static_cast<int>(p.side.size()) != m.simplex_count() ||
      dual.order() != m.simplex_count())
    throw std::invalid_argument("partition/dual/mesh sizes disagree");

  std::map<std::pair<int, int>, double> facet_measure;
  for (const auto& adj : m.adjacency()) facet_measure[{adj.a, adj.b}] = adj.facet_measure;

  PartitionReport report;
  report.cut_count = static_cast<int>(p.cut_edges.size());
  report.cut_facet_measure = 0.0;
  for (const auto& [a, b] : p.cut_edges)
    report.cut_facet_measure += facet_measure.at({std::min(a, b), std::max(a, b)});

  double side_volume = 0.0;
  for (int i = 0; i < m.simplex_count(); ++i)
    if (p.side[i] == 0) side_volume += m.volume(i);
  report.volume_balance = std::min(side_volume, m.total_volume() - side_volume) / m.total_volume();

  report.conductance = p.conductance;
  report.balance = p.balance;
  report.fiedler_value = p.fiedler_value;
  const MeshQuality q = kappa_epsilon(m);
  report.kappa = q.kappa;
  report.epsilon = q.epsilon;
  if (lambda1_domain) {
    const double l1 = *lambda1_domain;
    if (l1 <= 0.0) throw std::invalid_argument("domain eigenvalue must be positive");
    report.fiedler_ratio = report.fiedler_value / (q.kappa * q.kappa * l1 * q.epsilon * q.epsilon);
    report.cut_ratio = report.cut_count * q.epsilon / (q.kappa * std::sqrt(l1));
  }
  return report;
}

}  // namespace spectral
