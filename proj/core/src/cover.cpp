#include "spectral/cover.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "spectral/errors.hpp"
#include "spectral/laplacian.hpp"

namespace spectral {

double TwoFoldCover::intersection(int i, int j) const {
  if (i == j) return 0.0;
  auto it = intersections.find({std::min(i, j), std::max(i, j)});
  return it == intersections.end() ? 0.0 : it->second;
}

double TwoFoldCover::exactness_defect() const {
  std::vector<double> row_sum(cells.size(), 0.0);
  for (const auto& [key, w] : intersections) {
    row_sum[key.first] += w;
    row_sum[key.second] += w;
  }
  double defect = 0.0;
  for (size_t v = 0; v < cells.size(); ++v)
    defect = std::max(defect, std::abs(row_sum[v] - cells[v].measure) / cells[v].measure);
  return defect;
}

bool TwoFoldCover::is_exact(double tol) const {
  return !almost_two_fold && exactness_defect() <= tol;
}

NeumannProfile::NeumannProfile(std::vector<double> cell_values) : values_(std::move(cell_values)) {
  if (values_.empty()) throw std::invalid_argument("Neumann profile needs at least one cell");
  for (double v : values_)
    if (v < 0.0) throw std::invalid_argument("Neumann lower bounds must be nonnegative");
  eta_ = *std::min_element(values_.begin(), values_.end());
}

NeumannProfile NeumannProfile::uniform(int cells, double value) {
  return NeumannProfile(std::vector<double>(cells, value));
}

WeightedGraph cover_graph(const TwoFoldCover& c) {
  std::vector<Edge> edges;
  edges.reserve(c.intersections.size());
  for (const auto& [key, w] : c.intersections)
    if (w > 0.0) edges.push_back({key.first, key.second, w});
  return WeightedGraph(c.size(), std::move(edges));
}

SymMatrix cover_laplacian(const TwoFoldCover& c) {
  WeightedGraph g = cover_graph(c);
  for (int v = 0; v < g.order(); ++v)
    if (g.valence(v) == 0) throw IsolatedCell(c.cells[v].id);
  return normalized_laplacian(g);
}

SymMatrix gram_matrix(const TwoFoldCover& c) {
  const int n = c.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (const auto& [key, w] : c.intersections) {
    const auto [i, j] = key;
    const double x = w / std::sqrt(c.cells[i].measure * c.cells[j].measure);
    m(i, j) = x;
    m(j, i) = x;
  }
  return SymMatrix(std::move(m));
}

double gram_identity_defect(const TwoFoldCover& c) {
  const double defect = c.exactness_defect();
  if (c.almost_two_fold || defect > 1e-9) throw InexactCover(defect);
  const int n = c.size();
  Eigen::MatrixXd lhs = 2.0 * Eigen::MatrixXd::Identity(n, n) - gram_matrix(c).mat();
  Eigen::MatrixXd diff = lhs - cover_laplacian(c).mat();
  return diff.cwiseAbs().maxCoeff();
}

TransferReport check_transfer(const TwoFoldCover& c, const std::vector<double>& continuum,
                              const NeumannProfile& profile, int k_max) {
  if (profile.values().size() != c.cells.size())
    throw std::invalid_argument("Neumann profile size does not match cover");
  if (profile.eta() <= 0.0) throw BadEta(profile.eta());
  if (!std::is_sorted(continuum.begin(), continuum.end()))
    throw std::invalid_argument("continuum eigenvalue list must be ascending");

  const int k_eff = std::min(k_max, c.size() - 1);
  if (static_cast<int>(continuum.size()) <= k_eff)
    throw std::invalid_argument("continuum list too short for requested k range");

  Spectrum cover_spec = eigenvalues(cover_laplacian(c));

  TransferReport report;
  report.eta = profile.eta();
  report.all_hold = true;
  report.min_slack = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= k_eff; ++k) {
    TransferRow row;
    row.k = k;
    row.cover_value = cover_spec.values[k];
    row.bound = 2.0 * continuum[k] / report.eta;
    // Tolerance absorbs eigensolver residual on the discrete side.
    row.holds = row.cover_value <= row.bound + 10.0 * cover_spec.residual_bound + 1e-12;
    row.slack = row.cover_value > 0.0 ? row.bound / row.cover_value
                                      : std::numeric_limits<double>::infinity();
    report.all_hold = report.all_hold && row.holds;
    report.min_slack = std::min(report.min_slack, row.slack);
    report.rows.push_back(row);
  }
  return report;
}

namespace {

double positive_mod(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  return r;
}

// Linear interval with start and width; circle arcs keep start in [0, L).
struct Span {
  double start;
  double width;
};

double overlap_1d(double a0, double a1, double b0, double b1) {
  return std::max(0.0, std::min(a1, b1) - std::max(b0, a0));
}

double circle_overlap(const Span& a, const Span& b, double period) {
  double total = 0.0;
  for (int k = -1; k <= 1; ++k)
    total += overlap_1d(a.start, a.start + a.width, b.start + k * period,
                        b.start + k * period + b.width);
  return total;
}

}  // namespace

TwoFoldCover interval_cover_builder(double total_length, const std::vector<Arc>& arcs,
                                    bool circle) {
  if (total_length <= 0.0) throw std::invalid_argument("total_length must be positive");
  const double L = total_length;

  std::vector<Span> spans;
  spans.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.half_width <= 0.0) throw std::invalid_argument("arc half width must be positive");
    if (circle) {
      const double width = std::min(2.0 * a.half_width, L);
      spans.push_back({width == L ? 0.0 : positive_mod(a.center - a.half_width, L), width});
    } else {
      const double lo = std::max(0.0, a.center - a.half_width);
      const double hi = std::min(L, a.center + a.half_width);
      if (hi - lo <= 0.0)
        throw std::invalid_argument("arc lies outside the segment and has zero measure");
      spans.push_back({lo, hi - lo});
    }
  }

  // Validate exact double coverage between consecutive breakpoints.
  const double eps = 1e-12 * L;
  std::vector<double> breaks;
  for (const Span& s : spans) {
    if (circle && s.width == L) continue;  // full-circle cell has no breakpoint
    breaks.push_back(circle ? s.start : s.start);
    breaks.push_back(circle ? positive_mod(s.start + s.width, L) : s.start + s.width);
  }
  breaks.push_back(0.0);
  breaks.push_back(circle ? 0.0 : L);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [eps](double a, double b) { return b - a < eps; }),
               breaks.end());

  const size_t n_gaps = circle ? breaks.size() : breaks.size() - 1;
  for (size_t i = 0; i < n_gaps; ++i) {
    const double lo = breaks[i];
    const double hi = (i + 1 < breaks.size()) ? breaks[i + 1] : breaks.front() + L;
    if (hi - lo < eps) continue;
    const double mid = circle ? positive_mod(0.5 * (lo + hi), L) : 0.5 * (lo + hi);
    int count = 0;
    for (const Span& s : spans) {
      if (circle) {
        if (s.width == L || positive_mod(mid - s.start, L) < s.width) ++count;
      } else {
        if (mid > s.start && mid < s.start + s.width) ++count;
      }
    }
    if (count != 2) throw NotTwoFold(mid, count);
  }

  TwoFoldCover cover;
  for (size_t i = 0; i < spans.size(); ++i)
    cover.cells.push_back({static_cast<long>(i), spans[i].width});
  for (size_t i = 0; i < spans.size(); ++i) {
    for (size_t j = i + 1; j < spans.size(); ++j) {
      const double w = circle ? circle_overlap(spans[i], spans[j], L)
                              : overlap_1d(spans[i].start, spans[i].start + spans[i].width,
                                           spans[j].start, spans[j].start + spans[j].width);
      if (w > eps)
        cover.intersections[{static_cast<int>(i), static_cast<int>(j)}] = w;
    }
  }
  return cover;
}

TwoFoldCover read_cover_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad cover JSON: ") + e.what());
  }
  try {
    TwoFoldCover c;
    std::map<long, int> index_of;
    for (const auto& cell : j.at("cells")) {
      const long id = cell.at("id").get<long>();
      const double measure = cell.at("measure").get<double>();
      if (measure <= 0.0) throw ParseError("cell measure must be positive");
      if (!index_of.emplace(id, c.size()).second)
        throw ParseError("duplicate cell id " + std::to_string(id));
      c.cells.push_back({id, measure});
    }
    for (const auto& inter : j.at("intersections")) {
      const long a = inter.at("a").get<long>(), b = inter.at("b").get<long>();
      const double measure = inter.at("measure").get<double>();
      if (measure < 0.0) throw ParseError("intersection measure must be nonnegative");
      auto ia = index_of.find(a), ib = index_of.find(b);
      if (ia == index_of.end() || ib == index_of.end() || a == b)
        throw ParseError("bad intersection pair (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")");
      if (measure > 0.0)
        c.intersections[{std::min(ia->second, ib->second), std::max(ia->second, ib->second)}] =
            measure;
    }
    c.almost_two_fold = j.value("almost_two_fold", false);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad cover JSON: ") + e.what());
  }
}

TwoFoldCover read_cover_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_cover_json(in);
}

std::string cover_to_json(const TwoFoldCover& c) {
  nlohmann::json j;
  j["cells"] = nlohmann::json::array();
  for (const Cell& cell : c.cells)
    j["cells"].push_back({{"id", cell.id}, {"measure", cell.measure}});
  j["intersections"] = nlohmann::json::array();
  for (const auto& [key, w] : c.intersections)
    j["intersections"].push_back(
        {{"a", c.cells[key.first].id}, {"b", c.cells[key.second].id}, {"measure", w}});
  if (c.almost_two_fold) j["almost_two_fold"] = true;
  return j.dump();
}

}  // namespace spectral
