#include <random>
#include <sstream>

#include "doctest.h"
#include "hfree/errors.hpp"
#include "hfree/graph.hpp"
#include "hfree/graph_io.hpp"

using namespace hfree;

namespace {

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);        // outer C5
        g.add_edge(v + 5, (v + 2) % 5 + 5);  // inner pentagram
        g.add_edge(v, v + 5);              // spokes
    }
    return g;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // dedup
    g.add_edge(1, 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
    CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 4), InputError);
    CHECK_THROWS_AS(Graph(-1), InputError);
}

TEST_CASE("builders") {
    CHECK(Graph::complete(4).num_edges() == 6);
    CHECK(Graph::path(5).num_edges() == 4);
    CHECK(Graph::cycle(5).num_edges() == 5);
    CHECK(Graph::cycle(2).num_edges() == 1);  // no closing edge below 3
    Graph s = Graph::star(4);
    CHECK(s.degree(0) == 4);
    CHECK(s.num_edges() == 4);
    CHECK(petersen().num_edges() == 15);
    CHECK(petersen().max_degree() == 3);
}

TEST_CASE("independent sets") {
    Graph c5 = Graph::cycle(5);
    CHECK(is_independent(c5, std::vector<int>{0, 2}));
    CHECK(!is_independent(c5, std::vector<int>{0, 1}));
    CHECK(IndependentSet(c5, {2, 0}).vertices() ==
          std::vector<int>{0, 2});  // sorted
    CHECK_THROWS_AS(IndependentSet(c5, {0, 1}), InputError);
    CHECK_THROWS_AS(IndependentSet(c5, {0, 0}), InputError);
}

TEST_CASE("induced subgraph is positional") {
    Graph c5 = Graph::cycle(5);
    auto sub = induced_subgraph(c5, std::vector<int>{3, 4, 0});
    CHECK(sub.vertices == std::vector<int>{3, 4, 0});
    CHECK(sub.graph == Graph::path(3));  // 3-4, 4-0 survive, 3-0 absent
    CHECK_THROWS_AS(induced_subgraph(c5, std::vector<int>{1, 1}), InputError);
}

TEST_CASE("induced matching between cliques") {
    // two triangles joined by a perfect antimatching: crossing edges kill
    // every two-edge candidate, so the maximum induced matching is 1
    Graph g(6);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) {
            g.add_edge(u, v);
            g.add_edge(u + 3, v + 3);
        }
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u != v) g.add_edge(u, v + 3);
    std::vector<int> a{0, 1, 2}, b{3, 4, 5};
    CHECK(max_induced_matching_between(g, a, b) == 1);

    // two genuinely disjoint edges with nothing else around
    Graph h(4);
    h.add_edge(0, 2);
    h.add_edge(1, 3);
    std::vector<int> ha{0, 1}, hb{2, 3};
    CHECK(max_induced_matching_between(h, ha, hb) == 2);

    // no cross edges at all
    Graph e(4);
    CHECK(max_induced_matching_between(e, ha, hb) == 0);
}

TEST_CASE("vertex partition validation") {
    VertexPartition ok{{{0, 1}, {2}}};
    ok.validate(3);
    CHECK(ok.part_of(3) == std::vector<int>{0, 0, 1});
    VertexPartition overlap{{{0, 1}, {1, 2}}};
    VertexPartition gap{{{0}, {2}}};
    VertexPartition shallow{{{0, 1}}};
    CHECK_THROWS_AS(overlap.validate(3), InputError);
    CHECK_THROWS_AS(gap.validate(3), InputError);
    CHECK_THROWS_AS(shallow.validate(3), InputError);
}

TEST_CASE("graph io round trip") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.4);
        CHECK(graph_from_string(graph_to_string(g)) == g);
    }
    CHECK(graph_to_string(Graph::path(2)) == "p edge 2 1\ne 1 2\n");
}

TEST_CASE("graph io rejects malformed input") {
    CHECK_THROWS_AS(graph_from_string("p edge x 0\n"), ParseError);
    CHECK_THROWS_AS(graph_from_string("p edge 2 1\ne 1 2"), ParseError);  // no \n
    CHECK_THROWS_AS(graph_from_string("p edge 2 2\ne 1 2\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(graph_from_string("p edge 2 1\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(graph_from_string("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(graph_from_string("p edge 2 0\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(graph_from_string("q edge 2 0\n"), ParseError);
    // comments are fine anywhere
    Graph g = graph_from_string("c hello\np edge 2 1\nc mid\ne 1 2\nc tail\n");
    CHECK(g == Graph::path(2));
}
