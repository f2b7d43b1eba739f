#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracdim/catalog.hpp"
#include "fracdim/products.hpp"

using namespace fracdim;

TEST_CASE("corona of K_1 and K_2 is a triangle") {
    ProductGraph p = corona(gen::complete(1), gen::complete(2));
    CHECK(p.graph().vertex_count() == 3);
    CHECK(p.graph().edge_count() == 3);
    CHECK(isomorphic(p.graph(), gen::complete(3)));
}

TEST_CASE("corona of P_2 and K_1 is a path on 4 vertices") {
    ProductGraph p = corona(gen::path(2), gen::complete(1));
    CHECK(p.graph().vertex_count() == 4);
    CHECK(isomorphic(p.graph(), gen::path(4)));
}

TEST_CASE("corona vertex and edge counts match the closed forms") {
    ProductGraph p = corona(gen::path(3), gen::complete(2));
    CHECK(p.graph().vertex_count() == 9);
    CHECK(p.graph().edge_count() == 11);
    for (const Graph& g : {gen::path(4), gen::cycle(3)}) {
        for (const Graph& h : {gen::null(3), gen::complete(3), gen::path(3)}) {
            ProductGraph q = corona(g, h);
            int ng = g.vertex_count(), nh = h.vertex_count();
            CHECK(q.graph().vertex_count() == ng + ng * nh);
            CHECK(q.graph().edge_count() == g.edge_count() + ng * (nh + h.edge_count()));
        }
    }
}

TEST_CASE("lexicographic products of small factors") {
    CHECK(isomorphic(lexicographic(gen::complete(2), gen::null(2)).graph(), gen::cycle(4)));
    CHECK(isomorphic(lexicographic(gen::complete(2), gen::complete(2)).graph(),
                     gen::complete(4)));
    ProductGraph p = lexicographic(gen::path(3), gen::complete(2));
    CHECK(p.graph().vertex_count() == 6);
    CHECK(p.graph().edge_count() == 11);
    for (const Graph& g : {gen::path(4), gen::cycle(3)}) {
        for (const Graph& h : {gen::null(3), gen::complete(3), gen::path(3)}) {
            ProductGraph q = lexicographic(g, h);
            int ng = g.vertex_count(), nh = h.vertex_count();
            CHECK(q.graph().vertex_count() == ng * nh);
            CHECK(q.graph().edge_count() ==
                  g.edge_count() * nh * nh + ng * h.edge_count());
        }
    }
}

TEST_CASE("lexicographic K_2[H] is connected for every catalog H") {
    for (const Graph& h : h_catalog()) {
        CHECK(is_connected(lexicographic(gen::complete(2), h).graph()));
    }
}

TEST_CASE("vertex indexing round-trips and keeps copies contiguous") {
    ProductGraph p = corona(gen::cycle(3), gen::path(3));
    for (int i = 0; i < p.graph().vertex_count(); ++i) {
        CHECK(p.index_of(p.vertex_at(i)) == i);
    }
    std::vector<int> block = p.copy_block(1);
    CHECK(block.size() == 3);
    for (size_t i = 1; i < block.size(); ++i) CHECK(block[i] == block[i - 1] + 1);
    ProductGraph q = lexicographic(gen::cycle(3), gen::path(3));
    for (int i = 0; i < q.graph().vertex_count(); ++i) {
        CHECK(q.index_of(q.vertex_at(i)) == i);
    }
    CHECK_THROWS_AS(q.index_of(ProductVertex::base(0)), std::invalid_argument);
}

TEST_CASE("corona closed-form distances on named cases") {
    Graph p2 = gen::path(2);
    CHECK(corona_distance(p2, gen::null(2), ProductVertex::pair(0, 0),
                          ProductVertex::pair(0, 1)) == 2);
    CHECK(corona_distance(p2, gen::complete(2), ProductVertex::pair(0, 0),
                          ProductVertex::pair(1, 1)) == 3);
    CHECK(corona_distance(p2, gen::complete(2), ProductVertex::base(0),
                          ProductVertex::pair(0, 1)) == 1);
    CHECK_THROWS_AS(corona_distance(gen::null(2), gen::complete(2), ProductVertex::base(0),
                                    ProductVertex::base(1)),
                    std::invalid_argument);
}

TEST_CASE("lexicographic closed-form distances on named cases") {
    Graph p3 = gen::path(3);
    CHECK(lex_distance(p3, gen::null(2), ProductVertex::pair(0, 0),
                       ProductVertex::pair(0, 1)) == 2);
    CHECK(lex_distance(p3, gen::null(2), ProductVertex::pair(0, 0),
                       ProductVertex::pair(2, 0)) == 2);
    CHECK(lex_distance(gen::complete(2), gen::path(3), ProductVertex::pair(0, 1),
                       ProductVertex::pair(1, 1)) == 1);
    CHECK_THROWS_AS(lex_distance(gen::complete(1), gen::path(3), ProductVertex::pair(0, 0),
                                 ProductVertex::pair(0, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(lex_distance(disjoint_union(gen::complete(2), gen::complete(2)),
                                 gen::path(3), ProductVertex::pair(0, 0),
                                 ProductVertex::pair(1, 0)),
                    std::invalid_argument);
}

TEST_CASE("closed-form distances equal BFS on catalog products") {
    std::vector<Graph> gs = {gen::path(2), gen::path(3), gen::cycle(3),
                             gen::cycle(4), gen::path(4)};
    std::vector<Graph> hs = {gen::complete(2), gen::null(2), gen::path(3),
                             gen::complete(3), gen::null(3)};
    for (const Graph& g : gs) {
        DistanceMatrix dg = DistanceMatrix::bfs_all_pairs(g);
        for (const Graph& h : hs) {
            DistanceMatrix dh = DistanceMatrix::bfs_all_pairs(h);
            ProductGraph cor = corona(g, h);
            DistanceMatrix dc = DistanceMatrix::bfs_all_pairs(cor.graph());
            for (int i = 0; i < cor.graph().vertex_count(); ++i) {
                for (int j = i + 1; j < cor.graph().vertex_count(); ++j) {
                    CHECK(dc.at(i, j) ==
                          corona_distance(dg, h, dh, cor.vertex_at(i), cor.vertex_at(j)));
                }
            }
            ProductGraph lex = lexicographic(g, h);
            DistanceMatrix dl = DistanceMatrix::bfs_all_pairs(lex.graph());
            for (int i = 0; i < lex.graph().vertex_count(); ++i) {
                for (int j = i + 1; j < lex.graph().vertex_count(); ++j) {
                    CHECK(dl.at(i, j) ==
                          lex_distance(dg, h, lex.vertex_at(i), lex.vertex_at(j)));
                }
            }
        }
    }
}

TEST_CASE("product labels carry provenance") {
    ProductGraph p = corona(gen::path(2), gen::complete(2));
    CHECK(p.graph().label(p.index_of(ProductVertex::base(1))) == "1");
    CHECK(p.graph().label(p.index_of(ProductVertex::pair(1, 0))) == "(1,0)");
}
