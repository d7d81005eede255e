#include "spectral/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

// Next non-blank, non-comment line; false at EOF.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

WeightedGraph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("empty edge-list input");

  int n = 0;
  long m = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0)
      throw ParseError("bad edge-list header, expected `n m`: " + line);
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream row(line);
    int u, v;
    double w = 1.0;
    if (!(row >> u >> v)) throw ParseError("bad edge line: " + line);
    std::string tok;
    if (row >> tok && tok[0] != '#') {  // optional weight, then optional comment
      size_t used = 0;
      try {
        w = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("bad edge weight `" + tok + "`: " + line);
      if (row >> tok && tok[0] != '#')
        throw ParseError("trailing junk `" + tok + "`: " + line);
    }
    edges.push_back({u, v, w});
  }

  try {
    return WeightedGraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

WeightedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  out << g.order() << " " << g.edges().size() << "\n";
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.w);
    out << e.u << " " << e.v << " " << buf << "\n";
  }
}

std::string spectrum_to_json(const Spectrum& s) {
  nlohmann::json j;
  j["values"] = s.values;
  j["residual_bound"] = s.residual_bound;
  return j.dump();
}

}  // namespace spectral
