#include "fracdim/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fracdim {

namespace {

// Upper-triangle adjacency bitmask under a vertex permutation.
std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    int bit = 0;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (g.adjacent(perm[u], perm[v])) code |= (std::uint64_t{1} << bit);
        }
    }
    return code;
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("canonical code limited to 10 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = code_under(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        best = std::min(best, code_under(g, perm));
    }
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Graph::Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (code & (std::uint64_t{1} << bit)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    return canonical_code(a) == canonical_code(b);
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("all_graphs limited to n <= 6");
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Graph g = graph_from_code(n, code);
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n)) {
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> g_catalog() {
    std::vector<Graph> out;
    for (int n = 2; n <= 5; ++n) {
        for (Graph& g : connected_graphs(n)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> h_catalog() {
    std::vector<Graph> out;
    for (int n = 2; n <= 4; ++n) {
        for (Graph& g : all_graphs(n)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace fracdim
