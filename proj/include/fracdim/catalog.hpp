#pragma once

#include <vector>

#include "fracdim/graph.hpp"

namespace fracdim {

// Brute-force isomorphism test: min-over-permutations canonical codes.
// Intended for the enumeration sizes below (n <= 8 or so).
bool isomorphic(const Graph& a, const Graph& b);

// All graphs on exactly n vertices up to isomorphism, by filtered
// enumeration of edge subsets.
std::vector<Graph> all_graphs(int n);

// All connected graphs on exactly n vertices up to isomorphism.
std::vector<Graph> connected_graphs(int n);

// The verification catalogs: every connected graph on 2..5 vertices (the
// G side) and every graph on 2..4 vertices including disconnected and
// null graphs (the H side).
std::vector<Graph> g_catalog();
std::vector<Graph> h_catalog();

}  // namespace fracdim
