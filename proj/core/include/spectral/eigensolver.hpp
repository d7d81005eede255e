#pragma once

#include "spectral/spectrum.hpp"
#include "spectral/sym_matrix.hpp"

namespace spectral {

struct EigenOptions {
  double tol = 1e-10;       // postcondition: residual_bound <= tol * ||m||
  int size_cap = 5000;      // SizeCap above this order
  bool want_vectors = true; // drop the eigenvector matrix from the result
};

/// Full ascending spectrum of a dense symmetric matrix (tridiagonal reduction
/// followed by divide-and-conquer diagonalization). Deterministic for
/// identical input. Throws SizeCap, NoConvergence.
Spectrum eigenvalues(const SymMatrix& m, const EigenOptions& opts = {});

/// Ascending spectrum of the pencil K x = lambda M x with M positive definite.
/// Residuals are measured as ||K v - lambda M v|| for M-normalized vectors.
Spectrum generalized_eigenvalues(const SymMatrix& stiffness, const SymMatrix& mass,
                                 const EigenOptions& opts = {});

}  // namespace spectral
