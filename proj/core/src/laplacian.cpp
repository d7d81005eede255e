#include "spectral/laplacian.hpp"

#include <cmath>
#include <stdexcept>

#include "spectral/errors.hpp"

namespace spectral {

SymMatrix standard_laplacian(const WeightedGraph& g) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) -= e.w;
    m(e.v, e.u) -= e.w;
    m(e.u, e.u) += e.w;
    m(e.v, e.v) += e.w;
  }
  return SymMatrix(std::move(m));
}

SymMatrix normalized_laplacian(const WeightedGraph& g) {
  const int n = g.order();
  std::vector<double> inv_sqrt(n);
  for (int v = 0; v < n; ++v) {
    const double d = g.weighted_degree(v);
    if (d <= 0.0) throw ZeroDegreeVertex(v);
    inv_sqrt[v] = 1.0 / std::sqrt(d);
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (const Edge& e : g.edges()) {
    const double x = e.w * inv_sqrt[e.u] * inv_sqrt[e.v];
    m(e.u, e.v) -= x;
    m(e.v, e.u) -= x;
  }
  return SymMatrix(std::move(m));
}

double rayleigh_quotient(const WeightedGraph& g, const std::vector<double>& f) {
  if (static_cast<int>(f.size()) != g.order())
    throw std::invalid_argument("vertex function size mismatch");
  double num = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = f[e.u] - f[e.v];
    num += e.w * d * d;
  }
  double den = 0.0;
  for (int v = 0; v < g.order(); ++v) den += g.weighted_degree(v) * f[v] * f[v];
  if (den == 0.0) throw ZeroFunction();
  return num / den;
}

std::pair<double, Eigen::VectorXd> fiedler_vector(const SymMatrix& m, const EigenOptions& opts) {
  if (m.order() < 2) throw std::invalid_argument("fiedler_vector needs order >= 2");
  Spectrum s = eigenvalues(m, opts);
  const double lambda1 = s.values[1];
  const double gate = std::max(s.residual_bound, opts.tol * std::max(m.max_abs(), 1.0));
  if (lambda1 < gate)
    throw Disconnected("second eigenvalue " + std::to_string(lambda1) +
                       " below residual tolerance; graph is disconnected");

  Eigen::VectorXd v = s.vectors->col(1);
  v.normalize();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return {lambda1, std::move(v)};
}

}  // namespace spectral
