#include "fracdim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace fracdim {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
        throw std::invalid_argument("label count does not match vertex count");
    }
    adj_matrix_.assign(static_cast<size_t>(n) * n, false);
    adjacency_.resize(n);
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u > v) std::swap(u, v);
        if (adj_matrix_[static_cast<size_t>(u) * n + v]) {
            throw std::invalid_argument("duplicate edge rejected");
        }
        adj_matrix_[static_cast<size_t>(u) * n + v] = true;
        adj_matrix_[static_cast<size_t>(v) * n + u] = true;
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
    }
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_matrix_[static_cast<size_t>(u) * n_ + v];
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

std::vector<int> Graph::neighborhood(int v, bool closed) const {
    std::vector<int> out = neighbors(v);
    if (closed) {
        out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    }
    return out;
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    if (labels_.empty()) throw std::logic_error("graph has no labels");
    return labels_[v];
}

namespace {

// Single-source BFS writing hop counts into row (pre-filled with kUnreachable).
void bfs_from(const Graph& g, int source, int* row) {
    row[source] = 0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int w : g.neighbors(u)) {
            if (row[w] == kUnreachable) {
                row[w] = row[u] + 1;
                frontier.push(w);
            }
        }
    }
}

}  // namespace

DistanceMatrix DistanceMatrix::bfs_all_pairs(const Graph& g) {
    DistanceMatrix d(g.vertex_count());
    const int n = g.vertex_count();
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        bfs_from(g, s, &d.entries_[static_cast<size_t>(s) * n]);
    }
    return d;
}

DistanceMatrix DistanceMatrix::bfs_all_pairs_serial(const Graph& g) {
    DistanceMatrix d(g.vertex_count());
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        bfs_from(g, s, &d.entries_[static_cast<size_t>(s) * n]);
    }
    return d;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Graph::Edge> edges = a.edges();
    const int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<int> row(g.vertex_count(), kUnreachable);
    bfs_from(g, 0, row.data());
    return std::find(row.begin(), row.end(), kUnreachable) == row.end();
}

bool is_regular(const Graph& g) {
    for (int v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) != g.degree(0)) return false;
    }
    return true;
}

int diameter(const Graph& g) {
    DistanceMatrix d = DistanceMatrix::bfs_all_pairs(g);
    int best = 0;
    for (int u = 0; u < d.size(); ++u) {
        for (int v = u + 1; v < d.size(); ++v) {
            if (d.at(u, v) == kUnreachable) return kUnreachable;
            best = std::max(best, d.at(u, v));
        }
    }
    return best;
}

namespace {

int common_neighbor_count(const Graph& g, int u, int v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return static_cast<int>(out.size());
}

}  // namespace

RegularParams regular_params(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("regular_params needs at least 2 vertices");
    for (int v = 1; v < n; ++v) {
        if (g.degree(v) != g.degree(0)) {
            throw std::invalid_argument(
                "graph is not regular: deg(0)=" + std::to_string(g.degree(0)) +
                " but deg(" + std::to_string(v) + ")=" + std::to_string(g.degree(v)));
        }
    }
    RegularParams p{g.degree(0), -1, 0, false};
    bool any_adjacent = false, any_nonadjacent = false;
    int lambda = 0, mu = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int c = common_neighbor_count(g, u, v);
            if (g.adjacent(u, v)) {
                any_adjacent = true;
                lambda = std::max(lambda, c);
            } else {
                any_nonadjacent = true;
                mu = std::max(mu, c);
            }
        }
    }
    if (any_adjacent) {
        p.lambda = lambda;
    } else {
        p.lambda = -1;  // null graph convention
        p.conventions_applied = true;
    }
    if (any_nonadjacent) {
        p.mu = mu;
    } else {
        p.mu = 0;  // complete graph convention
        p.conventions_applied = true;
    }
    return p;
}

namespace {

// Extend a partial vertex map to a full automorphism if possible.
// image[i] is the image of vertex i for i < depth.
bool extend_automorphism(const Graph& g, std::vector<int>& image,
                         std::vector<bool>& used, int depth) {
    const int n = g.vertex_count();
    if (depth == n) return true;
    for (int target = 0; target < n; ++target) {
        if (used[target] || g.degree(target) != g.degree(depth)) continue;
        bool consistent = true;
        for (int i = 0; i < depth; ++i) {
            if (g.adjacent(i, depth) != g.adjacent(image[i], target)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        image[depth] = target;
        used[target] = true;
        if (extend_automorphism(g, image, used, depth + 1)) return true;
        used[target] = false;
    }
    return false;
}

// Does some automorphism send vertex 0 to `to`?
bool has_automorphism_zero_to(const Graph& g, int to) {
    const int n = g.vertex_count();
    if (g.degree(0) != g.degree(to)) return false;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    image[0] = to;
    used[to] = true;
    return extend_automorphism(g, image, used, 1);
}

}  // namespace

bool is_vertex_transitive(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kVertexTransitivityLimit) {
        throw std::invalid_argument("vertex-transitivity check limited to " +
                                    std::to_string(kVertexTransitivityLimit) +
                                    " vertices");
    }
    if (n <= 1) return true;
    if (!is_regular(g)) return false;
    for (int v = 1; v < n; ++v) {
        if (!has_automorphism_zero_to(g, v)) return false;
    }
    return true;
}

namespace gen {

Graph complete(int n) {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph null(int n) { return Graph(n, {}); }

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Graph::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Graph::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
    std::vector<Graph::Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite parts must be nonempty");
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
}

Graph hypercube(int d) {
    if (d < 0 || d > 10) throw std::invalid_argument("hypercube dimension out of range");
    const int n = 1 << d;
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < d; ++bit)
            if (!(u & (1 << bit))) edges.emplace_back(u, u | (1 << bit));
    return Graph(n, std::move(edges));
}

Graph petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph(10, std::move(edges));
}

Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 1) throw std::invalid_argument("circulant needs n >= 1");
    std::set<Graph::Edge> edges;
    for (int s : offsets) {
        if (s <= 0 || s >= n) throw std::invalid_argument("circulant offset out of range");
        for (int v = 0; v < n; ++v) {
            int w = (v + s) % n;
            if (v != w) edges.emplace(std::min(v, w), std::max(v, w));
        }
    }
    return Graph(n, {edges.begin(), edges.end()});
}

Graph random_gnm(int n, int m, std::uint64_t seed) {
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges) throw std::invalid_argument("edge count out of range");
    std::vector<Graph::Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(m);
    return Graph(n, std::move(all));
}

}  // namespace gen

Graph generate(const std::string& family, const std::vector<int>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count) {
            throw std::invalid_argument("family '" + family + "' expects " +
                                        std::to_string(count) + " parameter(s)");
        }
    };
    if (family == "complete") { need(1); return gen::complete(params[0]); }
    if (family == "null" || family == "empty") { need(1); return gen::null(params[0]); }
    if (family == "path") { need(1); return gen::path(params[0]); }
    if (family == "cycle") { need(1); return gen::cycle(params[0]); }
    if (family == "star") { need(1); return gen::star(params[0]); }
    if (family == "bipartite") { need(2); return gen::complete_bipartite(params[0], params[1]); }
    if (family == "hypercube") { need(1); return gen::hypercube(params[0]); }
    if (family == "petersen") { need(0); return gen::petersen(); }
    if (family == "circulant") {
        if (params.size() < 2) throw std::invalid_argument("circulant needs n and offsets");
        return gen::circulant(params[0], {params.begin() + 1, params.end()});
    }
    if (family == "random") {
        need(3);
        return gen::random_gnm(params[0], params[1], static_cast<std::uint64_t>(params[2]));
    }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

}  // namespace fracdim
