#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report_util.hpp"
#include "spectral/cone.hpp"
#include "spectral/cover.hpp"
#include "spectral/errors.hpp"
#include "spectral/fem.hpp"
#include "spectral/graph_io.hpp"
#include "spectral/laplacian.hpp"
#include "spectral/mesh.hpp"
#include "spectral/metric_graph.hpp"
#include "spectral/partition.hpp"
#include "spectral/rotation.hpp"

namespace {

using nlohmann::ordered_json;
using spectool::dump17;
using spectool::format_double;
using spectool::write_output;

constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitUnbalanced = 4;
constexpr int kExitDegenerateMesh = 5;

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  int kmax = 10;
  double tol = 1e-10;
  int level = 2;
  double balance_floor = 0.1;
  bool standard = false;
  bool require_connected = false;
  std::string family;
  int size = 0;
  std::optional<double> dilate;
  std::optional<double> lambda1;
  std::optional<double> eta;
  std::string continuum;  // comma-separated ascending list
  std::string partition_out;
};

spectral::EigenOptions eigen_options(const Options& o) {
  spectral::EigenOptions e;
  e.tol = o.tol;
  return e;
}

ordered_json values_json(const std::vector<double>& values) {
  ordered_json arr = ordered_json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const auto& c : cells) {
    if (!row.empty()) row += ',';
    row += c;
  }
  row += '\n';
  return row;
}

int cmd_spectrum(const Options& o) {
  spectral::WeightedGraph g = spectral::read_edge_list_file(o.input);
  if (o.require_connected && !g.is_connected())
    throw spectral::Disconnected("input graph is not connected");
  const spectral::SymMatrix lap =
      o.standard ? spectral::standard_laplacian(g) : spectral::normalized_laplacian(g);
  spectral::Spectrum spec = spectral::eigenvalues(lap, eigen_options(o));
  std::vector<double> values = spec.values;
  if (o.kmax + 1 < static_cast<int>(values.size())) values.resize(o.kmax + 1);

  if (o.format == "csv") {
    std::string out = csv_row({"k", "value"});
    for (size_t k = 0; k < values.size(); ++k)
      out += csv_row({std::to_string(k), format_double(values[k])});
    write_output(o.out, out);
    return 0;
  }
  ordered_json j;
  j["command"] = "spectrum";
  j["matrix"] = o.standard ? "standard" : "normalized";
  j["order"] = g.order();
  j["edges"] = g.edge_count();
  j["values"] = values_json(values);
  j["residual_bound"] = spec.residual_bound;
  write_output(o.out, dump17(j));
  return 0;
}

int cmd_cover_check(const Options& o) {
  spectral::TwoFoldCover cover = spectral::read_cover_json_file(o.input);
  const double defect = cover.exactness_defect();
  const bool exact = cover.is_exact();
  spectral::Spectrum spec =
      spectral::eigenvalues(spectral::cover_laplacian(cover), eigen_options(o));

  ordered_json j;
  j["command"] = "cover-check";
  j["cells"] = cover.size();
  j["almost_two_fold"] = cover.almost_two_fold;
  j["exactness_defect"] = defect;
  j["exact"] = exact;
  if (exact) j["gram_identity_defect"] = spectral::gram_identity_defect(cover);
  j["values"] = values_json(spec.values);

  std::optional<spectral::TransferReport> transfer;
  if (o.eta) {
    if (o.continuum.empty())
      throw std::invalid_argument("--eta needs --continuum with the reference eigenvalues");
    std::vector<double> continuum;
    std::stringstream ss(o.continuum);
    std::string item;
    while (std::getline(ss, item, ','))
      continuum.push_back(std::stod(item));
    transfer = spectral::check_transfer(
        cover, continuum, spectral::NeumannProfile::uniform(cover.size(), *o.eta),
        std::min<int>(o.kmax, static_cast<int>(continuum.size()) - 1));
    ordered_json t;
    t["eta"] = transfer->eta;
    t["all_hold"] = transfer->all_hold;
    t["min_slack"] = transfer->min_slack;
    t["rows"] = ordered_json::array();
    for (const auto& row : transfer->rows)
      t["rows"].push_back({{"k", row.k},
                           {"cover_value", row.cover_value},
                           {"bound", row.bound},
                           {"holds", row.holds},
                           {"slack", row.slack}});
    j["transfer"] = std::move(t);
  }

  if (o.format == "csv") {
    std::string out;
    if (transfer) {
      out = csv_row({"k", "cover_value", "bound", "holds", "slack"});
      for (const auto& row : transfer->rows)
        out += csv_row({std::to_string(row.k), format_double(row.cover_value),
                        format_double(row.bound), row.holds ? "1" : "0",
                        format_double(row.slack)});
    } else {
      out = csv_row({"k", "value"});
      for (size_t k = 0; k < spec.values.size(); ++k)
        out += csv_row({std::to_string(k), format_double(spec.values[k])});
    }
    write_output(o.out, out);
    return 0;
  }
  write_output(o.out, dump17(j));
  return 0;
}

int cmd_genus_bound(const Options& o) {
  std::optional<spectral::RotationSystem> rs;
  if (!o.family.empty())
    rs = spectral::family_rotation(o.family, o.size);
  else if (!o.input.empty())
    rs = spectral::read_rotation_json_file(o.input);
  else
    throw std::invalid_argument("genus-bound needs a rotation file or --family");

  const int n = rs->order();
  spectral::GenusBoundReport report =
      spectral::genus_bound_evaluate(*rs, std::min(o.kmax, n - 1), eigen_options(o));

  if (o.format == "csv") {
    std::string out = csv_row({"k", "lambda", "ratio"});
    for (const auto& row : report.rows)
      out += csv_row({std::to_string(row.k), format_double(row.lambda),
                      format_double(row.ratio)});
    write_output(o.out, out);
    return 0;
  }
  ordered_json j;
  j["command"] = "genus-bound";
  j["order"] = report.order;
  j["edges"] = report.edge_count;
  j["genus"] = report.genus;
  j["max_valence"] = report.max_valence;
  j["rows"] = ordered_json::array();
  for (const auto& row : report.rows)
    j["rows"].push_back({{"k", row.k}, {"lambda", row.lambda}, {"ratio", row.ratio}});
  j["max_ratio"] = report.max_ratio;
  write_output(o.out, dump17(j));
  return 0;
}

int cmd_metric(const Options& o) {
  spectral::MetricGraphModel model(spectral::read_edge_list_file(o.input));
  const auto opts = eigen_options(o);
  const int kmax = std::min(o.kmax, model.order() - 1);

  ordered_json j;
  j["command"] = "metric";
  j["order"] = model.order();
  j["edges"] = model.graph().edge_count();
  j["ell_min"] = model.min_length();
  j["ell_max"] = model.max_length();
  j["length_balanced"] = model.length_balanced();

  spectral::Spectrum nr = spectral::weighted_normalized_spectrum(model, opts);
  j["values"] = values_json(nr.values);

  std::string csv;
  spectral::LowerBoundReport lower = spectral::lower_bound_check(model, kmax, o.level, opts);
  {
    ordered_json r;
    r["factor"] = lower.factor;
    r["all_hold"] = lower.all_hold;
    r["rows"] = ordered_json::array();
    for (const auto& row : lower.rows) {
      r["rows"].push_back({{"k", row.k},
                           {"continuum", row.continuum},
                           {"error_indicator", row.error_indicator},
                           {"bound", row.bound},
                           {"holds", row.holds},
                           {"slack", row.slack}});
      csv += csv_row({"lower_bound", std::to_string(row.k), format_double(row.continuum),
                      format_double(row.bound), row.holds ? "1" : "0",
                      format_double(row.slack)});
    }
    j["lower_bound"] = std::move(r);
  }

  const bool balanced = model.length_balanced();
  if (balanced) {
    spectral::SandwichReport sandwich = spectral::sandwich_check(model, kmax, o.level, opts);
    ordered_json r;
    r["c1_min"] = sandwich.c1_min;
    r["c1_max"] = sandwich.c1_max;
    r["c2_min"] = sandwich.c2_min;
    r["c2_max"] = sandwich.c2_max;
    r["rows"] = ordered_json::array();
    for (const auto& row : sandwich.rows) {
      r["rows"].push_back({{"k", row.k},
                           {"lambda_nr", row.lambda_nr},
                           {"continuum", row.continuum},
                           {"c1_hat", row.c1_hat},
                           {"c2_hat", row.c2_hat}});
      csv += csv_row({"sandwich", std::to_string(row.k), format_double(row.lambda_nr),
                      format_double(row.continuum), format_double(row.c1_hat),
                      format_double(row.c2_hat)});
    }
    j["sandwich"] = std::move(r);

    spectral::SubdivisionReport stability =
        spectral::subdivision_stability(model, 1, {1, 2, 4, 8}, opts);
    ordered_json s;
    s["k"] = stability.k;
    s["spread"] = stability.spread;
    s["rows"] = ordered_json::array();
    for (const auto& row : stability.rows) {
      s["rows"].push_back({{"parts", row.parts}, {"value", row.value}});
      csv += csv_row({"subdivision", std::to_string(row.parts), format_double(row.value), "",
                      "", ""});
    }
    j["subdivision"] = std::move(s);
  } else {
    j["gated"] = "not-length-balanced: sandwich and subdivision reports skipped";
  }

  if (o.dilate) {
    spectral::DilationReport dil = spectral::dilation_check(model, *o.dilate, kmax, o.level, opts);
    ordered_json r;
    r["beta"] = dil.beta;
    r["discrete_defect"] = dil.discrete_defect;
    r["all_within"] = dil.all_within;
    r["rows"] = ordered_json::array();
    for (const auto& row : dil.rows) {
      r["rows"].push_back({{"k", row.k},
                           {"base", row.base},
                           {"dilated", row.dilated},
                           {"expected", row.expected},
                           {"tolerance", row.tolerance},
                           {"within", row.within}});
      csv += csv_row({"dilation", std::to_string(row.k), format_double(row.dilated),
                      format_double(row.expected), row.within ? "1" : "0", ""});
    }
    j["dilation"] = std::move(r);
  }

  if (o.format == "csv")
    write_output(o.out, csv_row({"report", "k", "a", "b", "c", "d"}) + csv);
  else
    write_output(o.out, dump17(j));
  return balanced ? 0 : kExitUnbalanced;
}

int cmd_partition(const Options& o) {
  spectral::SimplicialMesh mesh = spectral::SimplicialMesh::read_file(o.input);
  auto [cover, dual] = spectral::barycentric_cover(mesh);
  spectral::Partition part = spectral::spectral_cut(dual, o.balance_floor, eigen_options(o));
  spectral::PartitionReport report = spectral::partition_report(mesh, dual, part, o.lambda1);

  if (!o.partition_out.empty()) {
    std::string lines;
    for (size_t i = 0; i < part.side.size(); ++i)
      lines += std::to_string(i) + " " + std::to_string(part.side[i]) + "\n";
    write_output(o.partition_out, lines);
  }

  ordered_json j;
  j["command"] = "partition";
  j["dimension"] = mesh.dimension();
  j["simplices"] = mesh.simplex_count();
  j["periodic"] = mesh.periodic();
  j["cut_count"] = report.cut_count;
  j["cut_facet_measure"] = report.cut_facet_measure;
  j["conductance"] = report.conductance;
  j["balance"] = report.balance;
  j["volume_balance"] = report.volume_balance;
  j["fiedler_value"] = report.fiedler_value;
  j["kappa"] = report.kappa;
  j["epsilon"] = report.epsilon;
  if (report.fiedler_ratio) {
    j["fiedler_ratio"] = *report.fiedler_ratio;
    j["cut_ratio"] = *report.cut_ratio;
  }
  ordered_json assignment = ordered_json::array();
  for (int s : part.side) assignment.push_back(s);
  j["assignment"] = std::move(assignment);
  write_output(o.out, dump17(j));
  return 0;
}

int exit_code_for(const spectral::Error& e, const std::string& subcommand) {
  const std::string& code = e.code();
  if (code == "parse-error" || code == "unknown-family") return kExitParse;
  if (code == "not-length-balanced") return kExitUnbalanced;
  if (code == "degenerate-simplex" || code == "non-manifold-facet") return kExitDegenerateMesh;
  if (code == "too-small") return subcommand == "partition" ? kExitDegenerateMesh : kExitParse;
  return kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral graph workbench"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("input", o.input, "input file")->required();
    cmd->add_option("--out", o.out, "write the report here (atomic); default stdout");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--kmax", o.kmax, "largest eigenvalue index in reports")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.tol, "eigensolver residual tolerance")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum of an edge list");
  add_common(spectrum, true);
  spectrum->add_flag("--standard", o.standard, "standard Laplacian instead of normalized");
  spectrum->add_flag("--require-connected", o.require_connected,
                     "fail when the graph is disconnected");

  CLI::App* cover = app.add_subcommand("cover-check", "validate a 2-fold cover file");
  add_common(cover, true);
  cover->add_option("--eta", o.eta, "uniform Neumann floor for the transfer check");
  cover->add_option("--continuum", o.continuum,
                    "comma-separated ascending reference eigenvalues (with --eta)");

  CLI::App* genus = app.add_subcommand("genus-bound", "eigenvalue/genus ratio report");
  add_common(genus, false);
  genus->add_option("input", o.input, "rotation-system JSON file");
  genus->add_option("--family", o.family,
                    "planar_grid | toroidal_grid | cycle | complete_planar_k4 | double_torus_grid");
  genus->add_option("--size", o.size, "family size parameter");

  CLI::App* metric = app.add_subcommand("metric", "metric-graph bound suite for a model file");
  add_common(metric, true);
  metric->add_option("--level", o.level, "FEM refinement level")->check(CLI::PositiveNumber);
  metric->add_option("--dilate", o.dilate, "also check the dilation law for this factor");

  CLI::App* partition = app.add_subcommand("partition", "spectral sweep cut of a mesh");
  add_common(partition, true);
  partition->add_option("--balance-floor", o.balance_floor,
                        "smallest acceptable side fraction for the sweep cut");
  partition->add_option("--lambda1", o.lambda1,
                        "first nonzero Neumann value of the domain, for diagnostic ratios");
  partition->add_option("--partition-out", o.partition_out,
                        "also write one `index side` line per simplex here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "spectool: parse-error: " << e.what() << "\n";
    return kExitParse;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    if (sub == "spectrum") return cmd_spectrum(o);
    if (sub == "cover-check") return cmd_cover_check(o);
    if (sub == "genus-bound") return cmd_genus_bound(o);
    if (sub == "metric") return cmd_metric(o);
    return cmd_partition(o);
  } catch (const spectral::Error& e) {
    std::cerr << "spectool: " << e.what() << "\n";
    return exit_code_for(e, sub);
  } catch (const std::invalid_argument& e) {
    std::cerr << "spectool: invalid-argument: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "spectool: internal-error: " << e.what() << "\n";
    return kExitSolver;
  }
}
