// Test-only oracles, independent of the library's solve paths.
#pragma once

#include <optional>
#include <vector>

#include "fracdim/graph.hpp"
#include "fracdim/lp.hpp"
#include "fracdim/rational.hpp"

namespace oracles {

using fracdim::Rational;

// Floyd-Warshall over the adjacency matrix; independent of the BFS path.
inline std::vector<std::vector<int>> floyd_warshall(const fracdim::Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i][j] >= inf) d[i][j] = fracdim::kUnreachable;
    return d;
}

// Gaussian elimination over rationals; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a[r][col] != 0) { pivot = r; break; }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Minimum of the covering LP by exhaustive basic-feasible-point
// enumeration: every column-support subset paired with every equal-size
// subset of tight rows. Only sensible for <= 6 columns.
inline std::optional<Rational> min_by_vertex_enumeration(const fracdim::CoveringLP& lp) {
    const int n = lp.n_cols();
    const int m = lp.n_rows();
    if (m == 0) return Rational(0);
    auto feasible = [&](const std::vector<Rational>& x) {
        for (const Rational& v : x)
            if (v < 0) return false;
        for (const auto& row : lp.rows()) {
            Rational sum = 0;
            for (int j : row) sum += x[j];
            if (sum < 1) return false;
        }
        return true;
    };
    std::optional<Rational> best;
    for (int support = 1; support < (1 << n); ++support) {
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
            if (support & (1 << j)) cols.push_back(j);
        const int k = static_cast<int>(cols.size());
        for (int rowset = 0; rowset < (1 << m); ++rowset) {
            if (__builtin_popcount(rowset) != k) continue;
            std::vector<std::vector<Rational>> a;
            for (int i = 0; i < m; ++i) {
                if (!(rowset & (1 << i))) continue;
                std::vector<Rational> arow(k, Rational(0));
                for (int j : lp.rows()[i]) {
                    for (int c = 0; c < k; ++c)
                        if (cols[c] == j) arow[c] = 1;
                }
                a.push_back(std::move(arow));
            }
            auto sol = solve_square(a, std::vector<Rational>(k, Rational(1)));
            if (!sol) continue;
            std::vector<Rational> x(n, Rational(0));
            for (int c = 0; c < k; ++c) x[cols[c]] = (*sol)[c];
            if (!feasible(x)) continue;
            Rational obj = 0;
            for (const Rational& v : x) obj += v;
            if (!best || obj < *best) best = obj;
        }
    }
    return best;
}

}  // namespace oracles
