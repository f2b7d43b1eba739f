#pragma once

#include "fracdim/graph.hpp"

namespace fracdim {

enum class ProductKind { kCorona, kLexicographic };

// A vertex of a product graph: either a base vertex u of G (corona only)
// or a copy vertex (u, v) with u in V(G), v in V(H).
struct ProductVertex {
    bool is_base;
    int u;
    int v;  // ignored for base vertices

    static ProductVertex base(int u) { return {true, u, -1}; }
    static ProductVertex pair(int u, int v) { return {false, u, v}; }

    friend bool operator==(const ProductVertex& a, const ProductVertex& b) {
        if (a.is_base != b.is_base) return false;
        return a.is_base ? a.u == b.u : (a.u == b.u && a.v == b.v);
    }
};

// A corona or lexicographic product together with the bijection between
// ProductVertex values and dense indices. Copy ^uH is always a contiguous
// index block: corona numbers base vertices 0..nG-1 then copies u-major;
// lexicographic numbers copies u-major from 0.
class ProductGraph {
public:
    const Graph& graph() const { return graph_; }
    const Graph& g_factor() const { return g_; }
    const Graph& h_factor() const { return h_; }
    ProductKind kind() const { return kind_; }

    int index_of(const ProductVertex& x) const;
    ProductVertex vertex_at(int index) const;

    // Indices of the copy ^uH.
    std::vector<int> copy_block(int u) const;

    friend ProductGraph corona(const Graph& g, const Graph& h);
    friend ProductGraph lexicographic(const Graph& g, const Graph& h);

private:
    ProductGraph(ProductKind kind, Graph g, Graph h, Graph product)
        : kind_(kind), g_(std::move(g)), h_(std::move(h)), graph_(std::move(product)) {}

    ProductKind kind_;
    Graph g_;
    Graph h_;
    Graph graph_;
};

ProductGraph corona(const Graph& g, const Graph& h);
ProductGraph lexicographic(const Graph& g, const Graph& h);

// Closed-form distances, implemented independently of BFS on the product
// so each route validates the other. Both require G connected and x != y.
int corona_distance(const DistanceMatrix& dist_g, const Graph& h,
                    const DistanceMatrix& dist_h, ProductVertex x, ProductVertex y);
int corona_distance(const Graph& g, const Graph& h, ProductVertex x, ProductVertex y);

// Requires G connected with at least 2 vertices (for G = K_1 the product
// is just H and the closed form does not apply).
int lex_distance(const DistanceMatrix& dist_g, const Graph& h,
                 ProductVertex x, ProductVertex y);
int lex_distance(const Graph& g, const Graph& h, ProductVertex x, ProductVertex y);

}  // namespace fracdim
