#pragma once

#include "wis/graph.hpp"

#include <string>
#include <string_view>

namespace wis {

// Graph file:
//   c <comment>
//   p is <n> <m>
//   e <u> <v>        (m lines, 1 <= u,v <= n, u != v)
// Errors carry the 1-based line number.
Graph parse_graph(std::string_view text);

/// Canonical form: header then edges sorted with u < v. The graph must be
/// dense (vertices 1..n).
std::string serialize_graph(const Graph& g);

// Weight file: `w <v> <num>` or `w <v> <num>/<den>`, `c` comments.
// Vertices of g without a line get weight 1.
WeightFunction parse_weights(std::string_view text, const Graph& g);
std::string serialize_weights(const WeightFunction& w);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace wis
