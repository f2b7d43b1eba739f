#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracdim/graph.hpp"
#include "fracdim/lp.hpp"
#include "fracdim/products.hpp"
#include "fracdim/rational.hpp"
#include "fracdim/resolving.hpp"

namespace fracdim {

// Constraint systems: one row per unordered vertex pair, on the R-sets
// (fractional metric dimension) or S-sets (locating parameter).
CoveringLP resolving_lp(const Graph& g);
CoveringLP locating_lp(const Graph& h);

struct DimResult {
    Rational value;
    WeightFunction weights;
    LPSolution solution;
};

// Fractional metric dimension / locating parameter, solved exactly.
// Both require at least 2 vertices.
DimResult dim_f(const Graph& g);
DimResult l_f(const Graph& h);

// Does every S-row (resp. R-row) of the graph sum to at least 1 under w?
bool is_locating(const Graph& h, const WeightFunction& w);
bool is_resolving(const Graph& g, const WeightFunction& w);

// n / (2k - max{2 lambda, 2 mu - 2}) for a vertex-transitive graph. A
// non-regular input or a nonpositive denominator is reported as
// inapplicable via std::invalid_argument; set check_transitive = false
// to skip the (desk-scale) transitivity search.
Rational vt_closed_form(const Graph& h, bool check_transitive = true);

// Minimum |S_H{v1,v2}| over all pairs.
int min_symmetric_set_size(const Graph& h);

Rational corona_theorem_rhs(const Graph& g, const Graph& h);

// m1 * l_f(H) + (m2/2) dim_f(K_2[H]) + (m3/2) dim_f(K_2[complement H]).
Rational lex_theorem_rhs(const Graph& g, const Graph& h);

// |V(G)| |V(H)| / (2k(H) - max{2 lambda, 2 mu - 2}); H must pass the
// vertex-transitivity check.
Rational vt_lex_closed_form(const Graph& g, const Graph& h);

struct BoundChain {
    Rational lower;
    Rational value;
    Rational upper;
};

// l_f(H) <= dim_f(K_1 corona H) <= l_f(H) + 1, all three computed.
BoundChain k1_corona_bounds(const Graph& h);

// dim_f(G) <= dim_f(G corona K_1) <= |V(G)|/2.
BoundChain g_corona_k1_bounds(const Graph& g);

// Zero weight on base vertices, g(v) on every copy vertex. Checks that g
// locates H and that the lift resolves the corona product.
WeightFunction lift_locating_to_corona(const Graph& g, const Graph& h,
                                       const WeightFunction& locating);

// Piecewise resolving function of G[H] by twin type: an optimal locating
// function of H on type-1 classes, half-averages of optimal resolving
// functions of K_2[H] / K_2[complement H] on type-2 / type-3 classes.
// Checks the result resolves G[H] with weight lex_theorem_rhs(G, H).
WeightFunction assemble_lex_resolving(const Graph& g, const Graph& h,
                                      const std::optional<WeightFunction>& f1 = std::nullopt,
                                      const std::optional<WeightFunction>& f2 = std::nullopt,
                                      const std::optional<WeightFunction>& f3 = std::nullopt);

enum class Verdict { kEqual, kLhsLess, kLhsGreater };

struct VerificationReport {
    std::string claim;
    std::string g_desc;
    std::string h_desc;
    Rational lhs;
    Rational rhs;
    Verdict verdict;
    double elapsed_ms = 0;
    std::string notes;
    bool error = false;  // precondition failure in batch mode

    // For equality claims, EQUAL; for bound claims, EQUAL means the
    // whole chain held.
    bool passed() const { return !error && verdict == Verdict::kEqual; }
};

std::vector<std::string> known_claims();

// Run one named claim. Claims that only use one factor take it through
// the matching slot and ignore the other.
VerificationReport verify(const std::string& claim, const Graph* g, const Graph* h);

struct VerificationCase {
    std::string claim;
    std::optional<Graph> g;
    std::optional<Graph> h;
    std::string case_id;
};

// The full desk-scale suite over the built-in catalogs; this is what
// `verify --all` and the acceptance harness run.
std::vector<VerificationCase> build_full_suite();

// Evaluate cases (OpenMP across cases when jobs > 1); output is sorted
// by case_id regardless of execution order.
std::vector<VerificationReport> run_suite(const std::vector<VerificationCase>& cases,
                                          int jobs = 1);

std::string describe_graph(const Graph& g);
std::string verdict_name(Verdict v);
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);

}  // namespace fracdim
