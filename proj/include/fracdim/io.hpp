#pragma once

#include <iosfwd>
#include <string>

#include "fracdim/graph.hpp"

namespace fracdim {

// Edge-list text format: first non-comment line holds n; each following
// non-comment line holds "u v" with 0 <= u < v < n. '#' starts a comment,
// blank lines are ignored. Parse errors carry a line number.
Graph read_edge_list(std::istream& in, const std::string& source_name = "<stream>");
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

// Sidecar label file: one "index label" line per vertex.
void write_labels(std::ostream& out, const Graph& g);

}  // namespace fracdim
