#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracdim/rational.hpp"

namespace fracdim {

// 0/1 covering program: minimize sum(x) subject to every row summing to
// at least 1, x >= 0. Rows are stored as sorted support sets; duplicate
// rows are merged, keeping every originating vertex pair as a tag.
class CoveringLP {
public:
    explicit CoveringLP(int n_cols);

    void add_row(std::vector<int> support, std::pair<int, int> tag);

    int n_cols() const { return n_cols_; }
    int n_rows() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<std::vector<std::pair<int, int>>>& row_tags() const { return tags_; }

private:
    int n_cols_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::vector<std::pair<int, int>>> tags_;
};

// Exact optimum with primal and dual certificates.
struct LPSolution {
    Rational value;
    std::vector<Rational> primal;  // per column, in [0,1]
    std::vector<Rational> dual;    // per row, >= 0
};

// Exact simplex for the covering program. Runs primal simplex with
// Bland's rule on the dual packing program (max sum(y), A^T y <= 1,
// y >= 0), which starts feasible at y = 0, then reads the covering
// primal off the optimal tableau. Certificates are re-verified before
// returning; the returned primal always satisfies x <= 1.
LPSolution solve_covering_lp(const CoveringLP& lp);

// Re-checks all LPSolution invariants from scratch: primal feasibility
// (row sums >= 1, entries in [0,1]), dual feasibility (column sums <= 1,
// entries >= 0), and exact zero duality gap. On failure, *diagnostic
// names the first violated constraint.
bool verify_certificates(const CoveringLP& lp, const LPSolution& sol,
                         std::string* diagnostic = nullptr);

}  // namespace fracdim
