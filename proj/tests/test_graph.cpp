#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fracdim/catalog.hpp"
#include "fracdim/graph.hpp"
#include "oracles.hpp"

using namespace fracdim;

TEST_CASE("constructor rejects malformed edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("neighborhoods") {
    Graph c4 = gen::cycle(4);
    CHECK(c4.neighborhood(0, false) == std::vector<int>{1, 3});
    CHECK(gen::complete(3).neighborhood(0, true) == std::vector<int>{0, 1, 2});
    CHECK(gen::null(2).neighborhood(1, false).empty());
    CHECK_THROWS_AS(c4.neighborhood(4, false), std::invalid_argument);
}

TEST_CASE("all-pairs distances on named graphs") {
    DistanceMatrix p3 = DistanceMatrix::bfs_all_pairs(gen::path(3));
    CHECK(p3.at(0, 2) == 2);
    DistanceMatrix n2 = DistanceMatrix::bfs_all_pairs(gen::null(2));
    CHECK(n2.at(0, 1) == kUnreachable);
    DistanceMatrix pet = DistanceMatrix::bfs_all_pairs(gen::petersen());
    int max_finite = 0;
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) max_finite = std::max(max_finite, pet.at(u, v));
    CHECK(max_finite == 2);
}

TEST_CASE("BFS agrees with Floyd-Warshall oracle and serial reference") {
    std::vector<Graph> graphs = h_catalog();
    graphs.push_back(gen::petersen());
    graphs.push_back(gen::hypercube(3));
    graphs.push_back(disjoint_union(gen::path(3), gen::cycle(4)));
    for (const Graph& g : graphs) {
        DistanceMatrix par = DistanceMatrix::bfs_all_pairs(g);
        DistanceMatrix ser = DistanceMatrix::bfs_all_pairs_serial(g);
        auto fw = oracles::floyd_warshall(g);
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                CHECK(par.at(u, v) == fw[u][v]);
                CHECK(ser.at(u, v) == fw[u][v]);
            }
        }
    }
}

TEST_CASE("distance matrix shape invariants") {
    for (const Graph& g : h_catalog()) {
        DistanceMatrix d = DistanceMatrix::bfs_all_pairs(g);
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK(d.at(u, u) == 0);
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(d.at(u, v) == d.at(v, u));
        }
    }
}

TEST_CASE("complement") {
    CHECK(complement(gen::complete(3)).edge_count() == 0);
    Graph c5c = complement(gen::cycle(5));
    CHECK(c5c.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5c.degree(v) == 2);
    CHECK(complement(gen::path(3)).edges() == std::vector<Graph::Edge>{{0, 2}});
    for (const Graph& g : h_catalog()) {
        CHECK(complement(complement(g)).edges() == g.edges());
    }
}

TEST_CASE("generators match their closed-form degree sequences") {
    Graph c5 = gen::cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Graph s3 = gen::star(3);
    CHECK(s3.degree(0) == 3);
    for (int v = 1; v <= 3; ++v) CHECK(s3.degree(v) == 1);

    Graph pet = gen::petersen();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

    Graph q4 = gen::hypercube(4);
    CHECK(q4.vertex_count() == 16);
    for (int v = 0; v < 16; ++v) CHECK(q4.degree(v) == 4);

    Graph kb = gen::complete_bipartite(2, 3);
    CHECK(kb.edge_count() == 6);
    CHECK(kb.degree(0) == 3);
    CHECK(kb.degree(2) == 2);

    Graph circ = gen::circulant(7, {1, 2});
    for (int v = 0; v < 7; ++v) CHECK(circ.degree(v) == 4);

    Graph rnd = gen::random_gnm(8, 11, 42);
    CHECK(rnd.edge_count() == 11);
    CHECK(rnd.edges() == gen::random_gnm(8, 11, 42).edges());

    CHECK_THROWS_AS(generate("frobnicate", {3}), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", {2}), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", {}), std::invalid_argument);
}

TEST_CASE("regular parameters") {
    RegularParams c4 = regular_params(gen::cycle(4));
    CHECK(c4.k == 2);
    CHECK(c4.lambda == 0);
    CHECK(c4.mu == 2);
    CHECK_FALSE(c4.conventions_applied);

    RegularParams k4 = regular_params(gen::complete(4));
    CHECK(k4.k == 3);
    CHECK(k4.lambda == 2);
    CHECK(k4.mu == 0);
    CHECK(k4.conventions_applied);

    RegularParams n3 = regular_params(gen::null(3));
    CHECK(n3.k == 0);
    CHECK(n3.lambda == -1);
    CHECK(n3.mu == 0);
    CHECK(n3.conventions_applied);

    CHECK_THROWS_WITH_AS(regular_params(gen::path(3)),
                         doctest::Contains("deg(0)"), std::invalid_argument);
}

TEST_CASE("vertex transitivity") {
    CHECK(is_vertex_transitive(gen::cycle(6)));
    CHECK_FALSE(is_vertex_transitive(gen::star(3)));
    CHECK(is_vertex_transitive(gen::petersen()));
    CHECK(is_vertex_transitive(gen::hypercube(4)));
    CHECK_FALSE(is_vertex_transitive(gen::path(4)));
    CHECK_THROWS_AS(is_vertex_transitive(gen::cycle(40)), std::invalid_argument);
    // Transitive implies regular over the catalog.
    for (const Graph& g : h_catalog()) {
        if (is_vertex_transitive(g)) CHECK(is_regular(g));
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(gen::path(7)) == 6);
    CHECK(diameter(gen::complete(5)) == 1);
    CHECK(diameter(disjoint_union(gen::complete(2), gen::complete(2))) == kUnreachable);
    CHECK(diameter(gen::complete(1)) == 0);
}

TEST_CASE("Prop 2.1 inequality on regular non-complete catalog graphs") {
    std::vector<Graph> graphs = h_catalog();
    graphs.push_back(gen::petersen());
    graphs.push_back(gen::hypercube(3));
    for (const Graph& g : graphs) {
        int n = g.vertex_count();
        if (!is_regular(g) || n < 2 || g.edge_count() == n * (n - 1) / 2) continue;
        RegularParams p = regular_params(g);
        CHECK(n >= 2 * p.k - std::min(p.lambda, p.mu - 2));
    }
}

TEST_CASE("catalog enumeration counts") {
    CHECK(all_graphs(2).size() == 2);
    CHECK(all_graphs(3).size() == 4);
    CHECK(all_graphs(4).size() == 11);
    CHECK(connected_graphs(4).size() == 6);
    CHECK(connected_graphs(5).size() == 21);
    CHECK(g_catalog().size() == 30);
    CHECK(h_catalog().size() == 17);
    for (const Graph& g : g_catalog()) CHECK(is_connected(g));
}

TEST_CASE("isomorphism spot checks") {
    CHECK(isomorphic(gen::cycle(4), gen::complete_bipartite(2, 2)));
    CHECK(isomorphic(complement(gen::cycle(5)), gen::cycle(5)));
    CHECK_FALSE(isomorphic(gen::path(4), gen::star(3)));
}
