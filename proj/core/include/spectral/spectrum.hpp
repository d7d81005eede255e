#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace spectral {

/// Full spectrum of a symmetric matrix: eigenvalues in ascending order and the
/// largest achieved eigenpair residual max_i ||A v_i - lambda_i v_i||.
/// Eigenvector columns, when kept, are aligned with `values`.
struct Spectrum {
  std::vector<double> values;
  double residual_bound = 0.0;
  std::optional<Eigen::MatrixXd> vectors;

  int size() const { return static_cast<int>(values.size()); }
};

}  // namespace spectral
