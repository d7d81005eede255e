#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/metric_graph.hpp"

namespace spectral {

MetricStar::MetricStar(std::vector<double> branch_lengths) : lengths(std::move(branch_lengths)) {
  if (lengths.empty()) throw std::invalid_argument("star needs at least one branch");
  for (double l : lengths)
    if (l <= 0.0) throw std::invalid_argument("branch lengths must be positive");
}

double MetricStar::max_length() const {
  return *std::max_element(lengths.begin(), lengths.end());
}

namespace {

double tangent_sum(const std::vector<double>& lengths, double x) {
  double sum = 0.0;
  for (double l : lengths) sum += std::tan(x * l);
  return sum;
}

// One sign-change root of the tangent sum strictly inside the pole-free
// interval (a, b); the function runs from -inf at a+ to +inf at b-.
double bisect_gap(const std::vector<double>& lengths, double a, double b) {
  double lo = a, hi = b;
  for (double delta = 1e-3 * (b - a);; delta *= 1e-3) {
    if (delta < 1e-15 * (b - a))
      throw RootBracketFailure(a, b, "no sign change for the tangent sum");
    lo = a + delta;
    hi = b - delta;
    if (tangent_sum(lengths, lo) < 0.0 && tangent_sum(lengths, hi) > 0.0) break;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tangent_sum(lengths, mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> star_secular_solve(const MetricStar& s, int k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");

  // Poles of the tangent sum: (pi/2 + pi j) / l_e. With j < per_edge poles
  // from each edge, the merged list is complete up to the smallest per-edge
  // maximum, which is far enough to harvest k_max eigenvalues.
  const int per_edge = k_max + 2;
  std::vector<double> poles;
  double x_limit = std::numeric_limits<double>::infinity();
  for (double l : s.lengths) {
    for (int j = 0; j < per_edge; ++j)
      poles.push_back((std::numbers::pi / 2 + std::numbers::pi * j) / l);
    x_limit = std::min(x_limit, poles.back());
  }
  std::sort(poles.begin(), poles.end());

  std::vector<double> roots;  // values of x = sqrt(lambda), ascending
  double prev_cluster = -1.0;
  size_t i = 0;
  while (i < poles.size() && static_cast<int>(roots.size()) < k_max) {
    const double x = poles[i];
    if (x > x_limit * (1.0 + 1e-12)) break;
    size_t j = i + 1;
    while (j < poles.size() && poles[j] - x <= 1e-12 * std::max(1.0, x)) ++j;
    const int cluster = static_cast<int>(j - i);

    // Tangent-sum root in the gap before this cluster; the gap (0, first
    // pole) holds no positive root.
    if (prev_cluster > 0.0) {
      const double r = bisect_gap(s.lengths, prev_cluster, x);
      roots.push_back(r);
    }
    // Eigenvalues pinned at the pole: one branch function per edge whose
    // cosine vanishes here, minus one linear relation at the center.
    for (int c = 1; c < cluster && static_cast<int>(roots.size()) < k_max + 1; ++c)
      roots.push_back(x);

    prev_cluster = x;
    i = j;
  }
  if (static_cast<int>(roots.size()) < k_max)
    throw RootBracketFailure(0.0, x_limit, "pole enumeration exhausted before k_max roots");

  roots.resize(k_max);
  std::vector<double> lambdas(roots.size());
  std::transform(roots.begin(), roots.end(), lambdas.begin(),
                 [](double x) { return x * x; });
  return lambdas;
}

}  // namespace spectral
