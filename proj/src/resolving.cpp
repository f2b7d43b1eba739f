#include "fracdim/resolving.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fracdim {

std::vector<int> resolving_set(const DistanceMatrix& d, int u, int v) {
    if (u == v) throw std::invalid_argument("resolving_set needs distinct vertices");
    std::vector<int> out;
    for (int w = 0; w < d.size(); ++w) {
        if (d.at(u, w) != d.at(v, w)) out.push_back(w);
    }
    return out;
}

std::vector<int> symmetric_set(const Graph& h, int v1, int v2) {
    if (v1 == v2) throw std::invalid_argument("symmetric_set needs distinct vertices");
    const auto& n1 = h.neighbors(v1);
    const auto& n2 = h.neighbors(v2);
    std::vector<int> out;
    std::set_symmetric_difference(n1.begin(), n1.end(), n2.begin(), n2.end(),
                                  std::back_inserter(out));
    for (int v : {v1, v2}) {
        auto it = std::lower_bound(out.begin(), out.end(), v);
        if (it == out.end() || *it != v) out.insert(it, v);
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool are_twins(const Graph& g, int u, int v) {
    return g.neighborhood(u, true) == g.neighborhood(v, true) ||
           g.neighborhood(u, false) == g.neighborhood(v, false);
}

}  // namespace

TwinDecomposition twin_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (are_twins(g, u, v)) uf.unite(u, v);
        }
    }
    std::vector<std::vector<int>> buckets(n);
    for (int v = 0; v < n; ++v) buckets[uf.find(v)].push_back(v);

    TwinDecomposition out;
    for (auto& cls : buckets) {
        if (cls.empty()) continue;
        if (cls.size() == 1) {
            out.classes.push_back(std::move(cls));
            out.class_type.push_back(TwinType::kType1);
            out.m1 += 1;
            continue;
        }
        bool clique = true, independent = true;
        for (size_t i = 0; i < cls.size() && (clique || independent); ++i) {
            for (size_t j = i + 1; j < cls.size(); ++j) {
                (g.adjacent(cls[i], cls[j]) ? independent : clique) = false;
            }
        }
        bool closed_equal = true, open_equal = true;
        for (size_t i = 1; i < cls.size(); ++i) {
            if (g.neighborhood(cls[0], true) != g.neighborhood(cls[i], true)) closed_equal = false;
            if (g.neighborhood(cls[0], false) != g.neighborhood(cls[i], false)) open_equal = false;
        }
        if (clique && closed_equal) {
            out.m2 += static_cast<int>(cls.size());
            out.class_type.push_back(TwinType::kType2);
        } else if (independent && open_equal) {
            out.m3 += static_cast<int>(cls.size());
            out.class_type.push_back(TwinType::kType3);
        } else {
            throw std::logic_error(
                "twin class fits neither the clique nor the independent shape; "
                "twin relation failed to behave as an equivalence relation");
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

namespace {

PredictedRSet exact_set(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    return {false, std::move(members), -1};
}

PredictedRSet copy_cover(int u) { return {true, {}, u}; }

void require_usable_g(const ProductGraph& p) {
    if (p.g_factor().vertex_count() < 2) {
        throw std::invalid_argument("predicted R-sets require G with at least 2 vertices");
    }
    if (!is_connected(p.g_factor())) {
        throw std::invalid_argument("predicted R-sets require connected G");
    }
}

}  // namespace

PredictedRSet predicted_corona_R(const ProductGraph& p, ProductVertex x, ProductVertex y) {
    if (p.kind() != ProductKind::kCorona) {
        throw std::invalid_argument("predicted_corona_R needs a corona product");
    }
    require_usable_g(p);
    if (x == y) throw std::invalid_argument("distinct vertices required");

    if (!x.is_base && !y.is_base && x.u == y.u) {
        // Same copy: the R-set is the S-set image inside that copy.
        std::vector<int> members;
        for (int v : symmetric_set(p.h_factor(), x.v, y.v)) {
            members.push_back(p.index_of(ProductVertex::pair(x.u, v)));
        }
        return exact_set(std::move(members));
    }
    if (x.is_base && y.is_base) return copy_cover(x.u);
    if (x.is_base != y.is_base) {
        const ProductVertex& base = x.is_base ? x : y;
        const ProductVertex& copy = x.is_base ? y : x;
        if (copy.u != base.u) return copy_cover(base.u);
        // Copy hangs off the base vertex itself: any other copy works.
        return copy_cover(base.u == 0 ? 1 : 0);
    }
    return copy_cover(x.u);  // distinct copies
}

PredictedRSet predicted_lex_R(const ProductGraph& p, ProductVertex x, ProductVertex y) {
    if (p.kind() != ProductKind::kLexicographic) {
        throw std::invalid_argument("predicted_lex_R needs a lexicographic product");
    }
    require_usable_g(p);
    if (x == y) throw std::invalid_argument("distinct vertices required");
    const Graph& g = p.g_factor();
    const Graph& h = p.h_factor();

    if (x.u == y.u) {
        std::vector<int> members;
        for (int v : symmetric_set(h, x.v, y.v)) {
            members.push_back(p.index_of(ProductVertex::pair(x.u, v)));
        }
        return exact_set(std::move(members));
    }

    const bool closed_twins = g.neighborhood(x.u, true) == g.neighborhood(y.u, true);
    const bool open_twins = g.neighborhood(x.u, false) == g.neighborhood(y.u, false);
    if (closed_twins || open_twins) {
        // Closed twins see complement neighborhoods of H, open twins see
        // H neighborhoods, in each endpoint's own copy.
        const Graph h_side = closed_twins ? complement(h) : h;
        std::vector<int> members;
        for (int v : h_side.neighborhood(x.v, true)) {
            members.push_back(p.index_of(ProductVertex::pair(x.u, v)));
        }
        for (int v : h_side.neighborhood(y.v, true)) {
            members.push_back(p.index_of(ProductVertex::pair(y.u, v)));
        }
        return exact_set(std::move(members));
    }

    // Non-twins: some third vertex of G sees x.u and y.u at different
    // distances, and its whole copy then lies in the R-set.
    DistanceMatrix dg = DistanceMatrix::bfs_all_pairs(g);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == x.u || w == y.u) continue;
        if (dg.at(w, x.u) != dg.at(w, y.u)) return copy_cover(w);
    }
    throw std::logic_error("non-twin base vertices with no distinguishing third vertex");
}

}  // namespace fracdim
