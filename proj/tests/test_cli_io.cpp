#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fracdim/catalog.hpp"
#include "fracdim/io.hpp"
#include "fracdim/products.hpp"

using namespace fracdim;

TEST_CASE("edge-list parsing") {
    std::istringstream in("# a comment\n3\n0 1  # inline comment\n\n1 2\n");
    Graph g = read_edge_list(in, "test");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("parse errors carry source and line") {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        std::istringstream in(text);
        try {
            read_edge_list(in, "bad.g");
            FAIL("expected a parse error for: " << text);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("bad.g") != std::string::npos);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("", "vertex count");
    expect_error("x\n", "vertex count");
    expect_error("3\n1 0\n", "u < v");
    expect_error("3\n0 3\n", "out of range");
    expect_error("3\n0 1 9\n", "trailing");
    expect_error("3\n0 1\n0 1\n", "duplicate");
}

TEST_CASE("write/read round-trips every catalog graph") {
    for (const Graph& g : h_catalog()) {
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        Graph back = read_edge_list(in);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("product graphs round-trip through the edge-list format") {
    ProductGraph p = corona(gen::cycle(3), gen::path(3));
    std::ostringstream out;
    write_edge_list(out, p.graph());
    std::istringstream in(out.str());
    Graph back = read_edge_list(in);
    CHECK(back.edges() == p.graph().edges());
}

TEST_CASE("label sidecar lists product provenance") {
    ProductGraph p = corona(gen::path(2), gen::complete(1));
    std::ostringstream out;
    write_labels(out, p.graph());
    CHECK(out.str() == "0 0\n1 1\n2 (0,0)\n3 (1,0)\n");
}
