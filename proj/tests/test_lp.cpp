#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fracdim/catalog.hpp"
#include "fracdim/lp.hpp"
#include "fracdim/theorems.hpp"
#include "oracles.hpp"

using namespace fracdim;

TEST_CASE("single constraint over two columns") {
    CoveringLP lp(2);
    lp.add_row({0, 1}, {0, 1});
    LPSolution sol = solve_covering_lp(lp);
    CHECK(sol.value == 1);
    CHECK(verify_certificates(lp, sol));
}

TEST_CASE("complete-graph R-system optimum is n/2") {
    for (int n = 3; n <= 5; ++n) {
        LPSolution sol = solve_covering_lp(resolving_lp(gen::complete(n)));
        CHECK(sol.value == Rational(n, 2));
    }
}

TEST_CASE("C_5 S-system optimum is 5/4") {
    CHECK(solve_covering_lp(locating_lp(gen::cycle(5))).value == Rational(5, 4));
}

TEST_CASE("empty rows are rejected") {
    CoveringLP lp(3);
    CHECK_THROWS_AS(lp.add_row({}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(lp.add_row({5}, {0, 1}), std::invalid_argument);
}

TEST_CASE("duplicate rows are merged with their tags") {
    CoveringLP lp(3);
    lp.add_row({0, 2}, {0, 2});
    lp.add_row({2, 0}, {1, 2});
    CHECK(lp.n_rows() == 1);
    CHECK(lp.row_tags()[0].size() == 2);
}

TEST_CASE("certificate verification rejects hand-built bad solutions") {
    CoveringLP lp = resolving_lp(gen::complete(3));
    std::string why;

    LPSolution gap{Rational(3), {1, 1, 1}, {0, 0, 0}};
    CHECK_FALSE(verify_certificates(lp, gap, &why));
    CHECK(why.find("gap") != std::string::npos);

    LPSolution oversized{Rational(3), {Rational(3, 2), 1, 1}, {0, 0, 0}};
    CHECK_FALSE(verify_certificates(lp, oversized, &why));
    CHECK(why.find("[0,1]") != std::string::npos);

    LPSolution infeasible{Rational(0), {0, 0, 0}, {0, 0, 0}};
    CHECK_FALSE(verify_certificates(lp, infeasible, &why));
}

TEST_CASE("row order never changes the optimal value") {
    CoveringLP base = resolving_lp(gen::cycle(5));
    Rational expected = solve_covering_lp(base).value;
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> order(base.n_rows());
        for (int i = 0; i < base.n_rows(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        CoveringLP shuffled(base.n_cols());
        for (int i : order) shuffled.add_row(base.rows()[i], base.row_tags()[i][0]);
        CHECK(solve_covering_lp(shuffled).value == expected);
    }
}

TEST_CASE("simplex equals the vertex-enumeration oracle on small systems") {
    std::vector<Graph> graphs;
    for (int n = 3; n <= 5; ++n) {
        for (Graph& g : all_graphs(n)) graphs.push_back(std::move(g));
    }
    for (const Graph& g : graphs) {
        for (const CoveringLP& lp : {resolving_lp(g), locating_lp(g)}) {
            LPSolution sol = solve_covering_lp(lp);
            auto oracle = oracles::min_by_vertex_enumeration(lp);
            REQUIRE(oracle.has_value());
            CHECK(sol.value == *oracle);
        }
    }
}

TEST_CASE("random covering systems round-trip their certificates") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        CoveringLP lp(n);
        int rows = 1 + static_cast<int>(rng() % 8);
        for (int r = 0; r < rows; ++r) {
            std::vector<int> support;
            for (int j = 0; j < n; ++j) {
                if (rng() % 2) support.push_back(j);
            }
            if (support.empty()) support.push_back(static_cast<int>(rng() % n));
            lp.add_row(support, {r, r});
        }
        LPSolution sol = solve_covering_lp(lp);
        CHECK(verify_certificates(lp, sol));
        auto oracle = oracles::min_by_vertex_enumeration(lp);
        REQUIRE(oracle.has_value());
        CHECK(sol.value == *oracle);
    }
}
