#pragma once

#include <iosfwd>
#include <string>

#include "pancyclic/graph.hpp"

namespace pancyclic {

// Text format: first non-comment line "n m", then m lines "u v" with
// 0 <= u < v < n. Lines whose first non-blank character is '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes edges in ascending (u, v) order; the output is byte-stable.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace pancyclic
