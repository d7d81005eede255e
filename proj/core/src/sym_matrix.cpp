#include "spectral/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spectral {

SymMatrix::SymMatrix(Eigen::MatrixXd m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("symmetric matrix must be square, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const double a = m(i, j), b = m(j, i);
      const double mag = std::max(std::abs(a), std::abs(b));
      if (std::abs(a - b) > 1e-12 * std::max(mag, 1.0))
        throw std::invalid_argument("asymmetric entry at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + "): " + std::to_string(a) + " vs " +
                                    std::to_string(b));
    }
  }
  m_ = 0.5 * (m + m.transpose());
}

double SymMatrix::max_abs() const {
  return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

}  // namespace spectral
