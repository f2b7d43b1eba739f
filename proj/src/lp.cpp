#include "fracdim/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fracdim {

CoveringLP::CoveringLP(int n_cols) : n_cols_(n_cols) {
    if (n_cols < 1) throw std::invalid_argument("covering LP needs at least one column");
}

void CoveringLP::add_row(std::vector<int> support, std::pair<int, int> tag) {
    if (support.empty()) throw std::invalid_argument("empty covering row is infeasible");
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (int j : support) {
        if (j < 0 || j >= n_cols_) throw std::invalid_argument("row support index out of range");
    }
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] == support) {
            tags_[i].push_back(tag);
            return;
        }
    }
    rows_.push_back(std::move(support));
    tags_.push_back({tag});
}

namespace {

// Full-tableau primal simplex on the packing program
//   max 1.y   s.t.  A^T y + s = 1,  y, s >= 0
// with n = lp.n_cols() constraint rows and m = lp.n_rows() packing
// variables. Bland's rule on both the entering and leaving choice.
struct PackingTableau {
    int n;  // constraint rows (covering columns)
    int m;  // packing variables (covering rows)
    std::vector<std::vector<Rational>> t;  // n rows, m+n+1 entries (rhs last)
    std::vector<Rational> reduced;         // m+n entries, c_j - z_j
    Rational objective;
    std::vector<int> basis;                // variable index per row

    explicit PackingTableau(const CoveringLP& lp)
        : n(lp.n_cols()), m(lp.n_rows()), objective(0) {
        t.assign(n, std::vector<Rational>(m + n + 1, Rational(0)));
        for (int i = 0; i < m; ++i) {
            for (int j : lp.rows()[i]) t[j][i] = 1;
        }
        for (int j = 0; j < n; ++j) {
            t[j][m + j] = 1;       // slack
            t[j][m + n] = 1;       // rhs
        }
        reduced.assign(m + n, Rational(0));
        for (int i = 0; i < m; ++i) reduced[i] = 1;
        basis.resize(n);
        for (int j = 0; j < n; ++j) basis[j] = m + j;
    }

    void pivot(int row, int col) {
        const Rational p = t[row][col];
        for (auto& x : t[row]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == row || t[r][col] == 0) continue;
            const Rational factor = t[r][col];
            for (int c = 0; c <= m + n; ++c) t[r][c] -= factor * t[row][c];
        }
        if (reduced[col] != 0) {
            const Rational factor = reduced[col];
            for (int c = 0; c < m + n; ++c) reduced[c] -= factor * t[row][c];
            objective += factor * t[row][m + n];
        }
        basis[row] = col;
    }

    void solve() {
        for (;;) {
            int entering = -1;
            for (int j = 0; j < m + n; ++j) {
                if (reduced[j] > 0) { entering = j; break; }
            }
            if (entering < 0) return;
            int leaving = -1;
            Rational best_ratio = 0;
            for (int r = 0; r < n; ++r) {
                if (t[r][entering] <= 0) continue;
                Rational ratio = t[r][m + n] / t[r][entering];
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) throw std::logic_error("packing program unbounded");
            pivot(leaving, entering);
        }
    }
};

}  // namespace

LPSolution solve_covering_lp(const CoveringLP& lp) {
    if (lp.n_rows() == 0) {
        // No constraints: the zero function is optimal.
        return {Rational(0), std::vector<Rational>(lp.n_cols(), Rational(0)), {}};
    }
    PackingTableau tab(lp);
    tab.solve();

    LPSolution sol;
    sol.value = tab.objective;
    sol.dual.assign(lp.n_rows(), Rational(0));
    for (int r = 0; r < tab.n; ++r) {
        if (tab.basis[r] < tab.m) sol.dual[tab.basis[r]] = tab.t[r][tab.m + tab.n];
    }
    // The covering primal is the vector of simplex multipliers, read off
    // the reduced costs of the slack columns.
    sol.primal.assign(lp.n_cols(), Rational(0));
    for (int j = 0; j < lp.n_cols(); ++j) sol.primal[j] = -tab.reduced[tab.m + j];

    std::string why;
    if (!verify_certificates(lp, sol, &why)) {
        throw std::logic_error("simplex produced invalid certificates: " + why);
    }
    for (int j = 0; j < lp.n_cols(); ++j) {
        if (sol.primal[j] > 1) {
            throw std::logic_error("optimal covering primal exceeds 1 at column " +
                                   std::to_string(j));
        }
    }
    return sol;
}

bool verify_certificates(const CoveringLP& lp, const LPSolution& sol,
                         std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    if (static_cast<int>(sol.primal.size()) != lp.n_cols() ||
        static_cast<int>(sol.dual.size()) != lp.n_rows()) {
        return fail("certificate shape mismatch");
    }
    Rational primal_obj = 0;
    for (int j = 0; j < lp.n_cols(); ++j) {
        if (sol.primal[j] < 0 || sol.primal[j] > 1) {
            return fail("primal entry " + std::to_string(j) + " outside [0,1]");
        }
        primal_obj += sol.primal[j];
    }
    for (int i = 0; i < lp.n_rows(); ++i) {
        Rational row_sum = 0;
        for (int j : lp.rows()[i]) row_sum += sol.primal[j];
        if (row_sum < 1) return fail("primal violates row " + std::to_string(i));
        if (sol.dual[i] < 0) return fail("negative dual on row " + std::to_string(i));
    }
    std::vector<Rational> col_sum(lp.n_cols(), Rational(0));
    Rational dual_obj = 0;
    for (int i = 0; i < lp.n_rows(); ++i) {
        dual_obj += sol.dual[i];
        for (int j : lp.rows()[i]) col_sum[j] += sol.dual[i];
    }
    for (int j = 0; j < lp.n_cols(); ++j) {
        if (col_sum[j] > 1) return fail("dual violates column " + std::to_string(j));
    }
    if (primal_obj != dual_obj) return fail("duality gap: primal " + to_frac_string(primal_obj) +
                                            " vs dual " + to_frac_string(dual_obj));
    if (primal_obj != sol.value) return fail("stored value disagrees with objectives");
    return true;
}

}  // namespace fracdim
