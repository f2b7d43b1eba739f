#include "fracdim/products.hpp"

#include <stdexcept>
#include <string>

namespace fracdim {

int ProductGraph::index_of(const ProductVertex& x) const {
    const int ng = g_.vertex_count();
    const int nh = h_.vertex_count();
    if (x.is_base) {
        if (kind_ != ProductKind::kCorona) {
            throw std::invalid_argument("base vertices exist only in corona products");
        }
        g_.check_vertex(x.u);
        return x.u;
    }
    g_.check_vertex(x.u);
    h_.check_vertex(x.v);
    int base = kind_ == ProductKind::kCorona ? ng : 0;
    return base + x.u * nh + x.v;
}

ProductVertex ProductGraph::vertex_at(int index) const {
    const int ng = g_.vertex_count();
    const int nh = h_.vertex_count();
    graph_.check_vertex(index);
    if (kind_ == ProductKind::kCorona) {
        if (index < ng) return ProductVertex::base(index);
        index -= ng;
    }
    return ProductVertex::pair(index / nh, index % nh);
}

std::vector<int> ProductGraph::copy_block(int u) const {
    g_.check_vertex(u);
    const int nh = h_.vertex_count();
    int start = (kind_ == ProductKind::kCorona ? g_.vertex_count() : 0) + u * nh;
    std::vector<int> out(nh);
    for (int v = 0; v < nh; ++v) out[v] = start + v;
    return out;
}

ProductGraph corona(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng < 1 || nh < 1) throw std::invalid_argument("corona factors must be nonempty");
    std::vector<Graph::Edge> edges = g.edges();
    std::vector<std::string> labels(ng + ng * nh);
    auto pair_index = [&](int u, int v) { return ng + u * nh + v; };
    for (int u = 0; u < ng; ++u) {
        labels[u] = std::to_string(u);
        for (int v = 0; v < nh; ++v) {
            labels[pair_index(u, v)] = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
            edges.emplace_back(u, pair_index(u, v));
        }
        for (auto [v1, v2] : h.edges()) {
            edges.emplace_back(pair_index(u, v1), pair_index(u, v2));
        }
    }
    Graph product(ng + ng * nh, std::move(edges), std::move(labels));
    return ProductGraph(ProductKind::kCorona, g, h, std::move(product));
}

ProductGraph lexicographic(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng < 1 || nh < 1) throw std::invalid_argument("lexicographic factors must be nonempty");
    std::vector<Graph::Edge> edges;
    std::vector<std::string> labels(ng * nh);
    auto pair_index = [&](int u, int v) { return u * nh + v; };
    for (int u = 0; u < ng; ++u) {
        for (int v = 0; v < nh; ++v) {
            labels[pair_index(u, v)] = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        }
        for (auto [v1, v2] : h.edges()) {
            edges.emplace_back(pair_index(u, v1), pair_index(u, v2));
        }
    }
    for (auto [u1, u2] : g.edges()) {
        for (int v1 = 0; v1 < nh; ++v1) {
            for (int v2 = 0; v2 < nh; ++v2) {
                edges.emplace_back(pair_index(u1, v1), pair_index(u2, v2));
            }
        }
    }
    Graph product(ng * nh, std::move(edges), std::move(labels));
    return ProductGraph(ProductKind::kLexicographic, g, h, std::move(product));
}

namespace {

void require_connected_distances(const DistanceMatrix& dist_g) {
    for (int u = 0; u < dist_g.size(); ++u) {
        for (int v = u + 1; v < dist_g.size(); ++v) {
            if (dist_g.at(u, v) == kUnreachable) {
                throw std::invalid_argument("closed-form product distance requires connected G");
            }
        }
    }
}

}  // namespace

int corona_distance(const DistanceMatrix& dist_g, const Graph& h,
                    const DistanceMatrix& dist_h, ProductVertex x, ProductVertex y) {
    require_connected_distances(dist_g);
    if (x == y) throw std::invalid_argument("corona_distance needs distinct vertices");
    if (x.is_base && y.is_base) return dist_g.at(x.u, y.u);
    if (x.is_base != y.is_base) {
        const ProductVertex& base = x.is_base ? x : y;
        const ProductVertex& copy = x.is_base ? y : x;
        return dist_g.at(base.u, copy.u) + 1;
    }
    if (x.u == y.u) {
        int dh = dist_h.at(x.v, y.v);
        if (dh != kUnreachable && dh <= 1) return dh;
        return 2;  // d_G(u,u) + 2
    }
    return dist_g.at(x.u, y.u) + 2;
}

int corona_distance(const Graph& g, const Graph& h, ProductVertex x, ProductVertex y) {
    return corona_distance(DistanceMatrix::bfs_all_pairs(g), h,
                           DistanceMatrix::bfs_all_pairs(h), x, y);
}

int lex_distance(const DistanceMatrix& dist_g, const Graph& h,
                 ProductVertex x, ProductVertex y) {
    if (dist_g.size() < 2) {
        throw std::invalid_argument("lex_distance requires G with at least 2 vertices");
    }
    require_connected_distances(dist_g);
    if (x == y) throw std::invalid_argument("lex_distance needs distinct vertices");
    if (x.is_base || y.is_base) {
        throw std::invalid_argument("lexicographic products have no base vertices");
    }
    if (x.u == y.u) return h.adjacent(x.v, y.v) ? 1 : 2;
    return dist_g.at(x.u, y.u);
}

int lex_distance(const Graph& g, const Graph& h, ProductVertex x, ProductVertex y) {
    return lex_distance(DistanceMatrix::bfs_all_pairs(g), h, x, y);
}

}  // namespace fracdim
