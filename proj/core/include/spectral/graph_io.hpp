#pragma once

#include <iosfwd>
#include <string>

#include "spectral/graph.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

/// Edge-list text format: header `n m`, then m lines `u v [w]` (default
/// weight 1), 0-indexed. Blank lines and `#` comments are skipped.
/// Throws ParseError on malformed input.
WeightedGraph read_edge_list(std::istream& in);
WeightedGraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const WeightedGraph& g);

/// JSON spectrum payload: {"values":[...], "residual_bound":x}.
std::string spectrum_to_json(const Spectrum& s);

}  // namespace spectral
