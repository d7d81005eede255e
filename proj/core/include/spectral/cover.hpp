#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/sym_matrix.hpp"

namespace spectral {

struct Cell {
  long id;
  double measure;  // mu(U_v) > 0
};

/// Finite family of measured cells covering almost every point of the ambient
/// space exactly twice, recorded purely by cell measures and pairwise
/// intersection measures. Intersections are keyed by cell *index* pairs
/// (i < j); zero-measure intersections are not stored.
struct TwoFoldCover {
  std::vector<Cell> cells;
  std::map<std::pair<int, int>, double> intersections;
  /// Set for covers that are 2-fold only away from a boundary (mesh covers);
  /// such covers bypass the exactness gate.
  bool almost_two_fold = false;

  int size() const { return static_cast<int>(cells.size()); }
  double intersection(int i, int j) const;

  /// max_v |sum_u mu(U_u cap U_v) - mu(U_v)| / mu(U_v)
  double exactness_defect() const;
  bool is_exact(double tol = 1e-9) const;
};

/// Per-cell lower bounds on the Neumann value lambda(U_v); eta is their
/// minimum. Entries must be nonnegative.
struct NeumannProfile {
  explicit NeumannProfile(std::vector<double> cell_values);
  static NeumannProfile uniform(int cells, double value);

  const std::vector<double>& values() const { return values_; }
  double eta() const { return eta_; }

private:
  std::vector<double> values_;
  double eta_;
};

/// Intersection graph of the cover: one vertex per cell, edge weight
/// mu(U_u cap U_v) for every strictly positive intersection.
WeightedGraph cover_graph(const TwoFoldCover& c);

/// Normalized Laplacian of cover_graph(c). Throws IsolatedCell.
SymMatrix cover_laplacian(const TwoFoldCover& c);

/// Gram operator of the normalized indicator system: diagonal 1, off-diagonal
/// mu(U_u cap U_v) / sqrt(mu(U_u) mu(U_v)).
SymMatrix gram_matrix(const TwoFoldCover& c);

/// Max-norm of (2I - Gram) - cover Laplacian; at most 1e-9 for exact covers.
/// Throws InexactCover when the exactness gate fails.
double gram_identity_defect(const TwoFoldCover& c);

struct TransferRow {
  int k;
  double cover_value;  // lambda_k of the cover Laplacian
  double bound;        // 2 lambda_k(M) / eta
  bool holds;
  double slack;        // bound / cover_value (inf when cover_value is 0)
};

struct TransferReport {
  double eta;
  std::vector<TransferRow> rows;
  bool all_hold;
  double min_slack;
};

/// Checks lambda_k(cover) <= 2 lambda_k(M) / eta for k = 1..k_max.
/// `continuum` lists the ambient eigenvalues ascending starting at lambda_0.
/// Throws BadEta; k is truncated to the cover size minus one.
TransferReport check_transfer(const TwoFoldCover& c, const std::vector<double>& continuum,
                              const NeumannProfile& profile, int k_max);

struct Arc {
  double center;
  double half_width;
};

/// Builds an exact 2-fold cover of a circle of circumference `total_length`
/// (or of the segment [0, total_length]) from arcs, with analytically computed
/// overlaps. Validates exact double coverage by sweeping over arc breakpoints;
/// throws NotTwoFold with a witness point otherwise.
TwoFoldCover interval_cover_builder(double total_length, const std::vector<Arc>& arcs,
                                    bool circle);

/// Cover JSON: {"cells":[{"id":..,"measure":..}],
///              "intersections":[{"a":..,"b":..,"measure":..}]}
/// with an optional "almost_two_fold" flag. Ids a/b refer to cell ids.
TwoFoldCover read_cover_json(std::istream& in);
TwoFoldCover read_cover_json_file(const std::string& path);
std::string cover_to_json(const TwoFoldCover& c);

}  // namespace spectral
