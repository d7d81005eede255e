#pragma once

#include <Eigen/Core>

namespace spectral {

/// Dense symmetric real matrix. Construction symmetrizes by averaging and
/// rejects inputs whose asymmetry exceeds 1e-12 of the larger entry magnitude.
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(Eigen::MatrixXd m);

  int order() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  /// Largest entry magnitude; 0 for the empty matrix.
  double max_abs() const;

  static SymMatrix zero(int n) { return SymMatrix(Eigen::MatrixXd::Zero(n, n)); }
  static SymMatrix identity(int n) { return SymMatrix(Eigen::MatrixXd::Identity(n, n)); }

private:
  Eigen::MatrixXd m_;
};

}  // namespace spectral
