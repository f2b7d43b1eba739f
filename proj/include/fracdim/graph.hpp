#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracdim {

// Sentinel distance between vertices in different components. Never a
// valid hop count; compares unequal to every finite distance and equal
// only to itself (plain integer comparison).
inline constexpr int kUnreachable = -1;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges normalized to u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;

    // Open neighborhood, sorted ascending.
    const std::vector<int>& neighbors(int v) const;

    // Open or closed neighborhood as a sorted vector.
    std::vector<int> neighborhood(int v, bool closed) const;

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;

    void check_vertex(int v) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<bool> adj_matrix_;
    std::vector<std::string> labels_;
};

// All-pairs hop counts; kUnreachable across components.
class DistanceMatrix {
public:
    int size() const { return n_; }
    int at(int u, int v) const { return entries_[static_cast<size_t>(u) * n_ + v]; }

    // Parallel BFS from every source (OpenMP over sources).
    static DistanceMatrix bfs_all_pairs(const Graph& g);

    // Serial reference kernel, kept for testing and benchmarking.
    static DistanceMatrix bfs_all_pairs_serial(const Graph& g);

private:
    DistanceMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n, kUnreachable) {}

    int n_;
    std::vector<int> entries_;
};

// Regular-graph parameters: degree k, max common neighbors over adjacent
// pairs (lambda) and nonadjacent pairs (mu), with the conventions
// mu(K_n) = 0 and lambda(complement of K_n) = -1.
struct RegularParams {
    int k;
    int lambda;
    int mu;
    bool conventions_applied;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);

// Max finite distance if connected, else kUnreachable. K_1 has diameter 0.
int diameter(const Graph& g);

RegularParams regular_params(const Graph& g);

// Exhaustive backtracking automorphism search, degree-pruned. Desk scale
// only; graphs above kVertexTransitivityLimit vertices are rejected.
inline constexpr int kVertexTransitivityLimit = 32;
bool is_vertex_transitive(const Graph& g);

namespace gen {

Graph complete(int n);
Graph null(int n);
Graph path(int n);
Graph cycle(int n);          // n >= 3
Graph star(int leaves);      // K_{1,leaves}; center is vertex 0
Graph complete_bipartite(int a, int b);  // part A = 0..a-1
Graph hypercube(int d);      // vertices are d-bit codes
Graph petersen();
Graph circulant(int n, const std::vector<int>& offsets);
Graph random_gnm(int n, int m, std::uint64_t seed);

}  // namespace gen

// Dispatch by family name with integer parameters; used by the CLI's
// gen:<family>:<params> specs. Unknown family or bad params throw
// std::invalid_argument.
Graph generate(const std::string& family, const std::vector<int>& params);

}  // namespace fracdim
