#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "spectral/eigensolver.hpp"
#include "spectral/graph.hpp"
#include "spectral/spectrum.hpp"
#include "spectral/sym_matrix.hpp"

namespace spectral {

/// Weighted Laplacian: diagonal d_v^w, off-diagonal -w(u,v). Row sums are 0.
SymMatrix standard_laplacian(const WeightedGraph& g);

/// Normalized Laplacian I - S^{-1/2} W S^{-1/2}; spectrum lies in [0, 2].
/// Throws ZeroDegreeVertex when some weighted degree vanishes.
SymMatrix normalized_laplacian(const WeightedGraph& g);

/// sum_e w_e (f(u)-f(v))^2 / sum_v d_v^w f(v)^2. Throws ZeroFunction.
double rayleigh_quotient(const WeightedGraph& g, const std::vector<double>& f);

/// Second-smallest eigenpair of a connected graph's Laplacian matrix. The
/// vector is unit length with its first nonzero entry made positive. Throws
/// Disconnected when the second eigenvalue sits below the residual tolerance.
std::pair<double, Eigen::VectorXd> fiedler_vector(const SymMatrix& m,
                                                  const EigenOptions& opts = {});

}  // namespace spectral
