#include "spectral/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <lapacke.h>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

double max_column_residual(const Eigen::MatrixXd& residuals) {
  return residuals.size() == 0 ? 0.0 : residuals.colwise().norm().maxCoeff();
}

}  // namespace

Spectrum eigenvalues(const SymMatrix& m, const EigenOptions& opts) {
  const int n = m.order();
  if (n > opts.size_cap) throw SizeCap(n, opts.size_cap);

  Spectrum out;
  if (n == 0) return out;

  Eigen::MatrixXd vectors = m.mat();  // overwritten with eigenvectors
  std::vector<double> w(n);
  const int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, vectors.data(), n, w.data());
  if (info != 0)
    throw NoConvergence("dsyevd failed with info=" + std::to_string(info));

  out.values = std::move(w);
  const Eigen::Map<const Eigen::VectorXd> lambda(out.values.data(), n);
  Eigen::MatrixXd resid = m.mat() * vectors - vectors * lambda.asDiagonal();
  out.residual_bound = max_column_residual(resid);

  const double norm = std::max(std::abs(out.values.front()), std::abs(out.values.back()));
  if (out.residual_bound > opts.tol * std::max(norm, 1e-300))
    throw NoConvergence("residual " + std::to_string(out.residual_bound) +
                        " exceeds tol * ||m|| = " + std::to_string(opts.tol * norm));

  if (opts.want_vectors) out.vectors = std::move(vectors);
  return out;
}

Spectrum generalized_eigenvalues(const SymMatrix& stiffness, const SymMatrix& mass,
                                 const EigenOptions& opts) {
  const int n = stiffness.order();
  if (n != mass.order())
    throw std::invalid_argument("stiffness and mass orders differ");
  if (n > opts.size_cap) throw SizeCap(n, opts.size_cap);

  Spectrum out;
  if (n == 0) return out;

  Eigen::MatrixXd vectors = stiffness.mat();
  Eigen::MatrixXd b = mass.mat();
  std::vector<double> w(n);
  const int info = LAPACKE_dsygvd(LAPACK_COL_MAJOR, 1, 'V', 'L', n, vectors.data(), n,
                                  b.data(), n, w.data());
  if (info > n)
    throw NoConvergence("mass matrix is not positive definite (dsygvd info=" +
                        std::to_string(info) + ")");
  if (info != 0)
    throw NoConvergence("dsygvd failed with info=" + std::to_string(info));

  out.values = std::move(w);
  const Eigen::Map<const Eigen::VectorXd> lambda(out.values.data(), n);
  Eigen::MatrixXd resid =
      stiffness.mat() * vectors - mass.mat() * (vectors * lambda.asDiagonal());
  out.residual_bound = max_column_residual(resid);

  const double scale =
      stiffness.max_abs() +
      std::max(std::abs(out.values.front()), std::abs(out.values.back())) * mass.max_abs();
  if (out.residual_bound > opts.tol * std::max(scale, 1e-300) * n)
    throw NoConvergence("generalized residual " + std::to_string(out.residual_bound) +
                        " out of tolerance");

  if (opts.want_vectors) out.vectors = std::move(vectors);
  return out;
}

}  // namespace spectral
