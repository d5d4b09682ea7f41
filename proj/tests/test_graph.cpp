#include <doctest.h>

#include "cqwl/graph.hpp"
#include "helpers.hpp"

using namespace cqwl;

TEST_CASE("graph text format round-trips") {
    Graph g = parse_graph("# a comment\np 4\ne 0 1\ne 2 3\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
    Graph again = parse_graph(g.to_text());
    CHECK(again == g);
}

TEST_CASE("graph parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p 2\ne 0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p 2\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p 2\nz 0 1\n"), ParseError);
}

TEST_CASE("duplicate edges collapse") {
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.num_edges() == 1);
}

TEST_CASE("hom counts on fixed instances") {
    Graph k2 = Graph::complete(2), k3 = Graph::complete(3);
    CHECK(count_hom(k2, k3) == 6);
    CHECK(count_hom(k3, k3) == 6);
    CHECK(count_hom(k3, testing::two_k3()) == 12);
    CHECK(count_hom(k3, testing::c6()) == 0);
    CHECK(count_hom(Graph(0), k3) == 1);
    CHECK(count_hom(Graph::edgeless(2), k3) == 9);
    CHECK(count_hom(k3, k2) == 0);
}

TEST_CASE("hom counting respects the budget") {
    Graph p = Graph::path(5), g = Graph::complete(6);
    CHECK_THROWS_AS(count_hom(p, g, 10), BudgetExceededError);
}

TEST_CASE("tensor product multiplies hom counts") {
    std::vector<Graph> hs = {Graph::path(3), Graph::complete(3), Graph::cycle(4)};
    std::vector<Graph> gs = {Graph::complete(3), Graph::cycle(5), Graph::path(4)};
    for (const Graph& a : gs)
        for (const Graph& b : gs) {
            Graph t = tensor(a, b);
            for (const Graph& h : hs)
                CHECK(count_hom(h, t) == count_hom(h, a) * count_hom(h, b));
        }
}

TEST_CASE("complement") {
    Graph g = complement(Graph::cycle(5));
    CHECK(g.num_edges() == 5);
    CHECK(is_isomorphic(g, Graph::cycle(5)));
    CHECK(complement(Graph::complete(4)).num_edges() == 0);
}

TEST_CASE("isomorphism and automorphisms") {
    CHECK(is_isomorphic(Graph::cycle(4), parse_graph("p 4\ne 0 2\ne 2 1\ne 1 3\ne 3 0\n")));
    CHECK(!is_isomorphic(Graph::cycle(6), testing::two_k3()));
    std::vector<int> w;
    CHECK(is_isomorphic(Graph::path(4), Graph::path(4), &w));
    CHECK(w.size() == 4);
    CHECK(automorphisms(Graph::complete(3)).size() == 6);
    CHECK(automorphisms(Graph::path(3)).size() == 2);
    CHECK(automorphisms(Graph::cycle(5)).size() == 10);
}

TEST_CASE("coloured graph validates its colouring") {
    Graph g = Graph::cycle(4), pat = Graph::complete(2);
    CHECK_NOTHROW(ColouredGraph(g, pat, {0, 1, 0, 1}));
    CHECK_THROWS_AS(ColouredGraph(g, pat, {0, 0, 1, 1}), DomainError);
}

TEST_CASE("colour-restricted hom counting") {
    // C4 over K2: each pattern vertex has a 2-element class; homs from K2
    // respecting an edge-to-edge tau.
    ColouredGraph cg(Graph::cycle(4), Graph::complete(2), {0, 1, 0, 1});
    CHECK(count_hom_tau(Graph::complete(2), cg, {0, 1}) == 4);
    // Summing over every tau that is itself a pattern homomorphism recovers
    // the unrestricted count; the diagonal choices are not valid taus on K2.
    CHECK_THROWS_AS(count_hom_tau(Graph::complete(2), cg, {0, 0}), DomainError);
    std::uint64_t total = count_hom_tau(Graph::complete(2), cg, {0, 1}) +
                          count_hom_tau(Graph::complete(2), cg, {1, 0});
    CHECK(total == count_hom(Graph::complete(2), cg.graph()));
}

TEST_CASE("bfs order starts at 0 and is a permutation") {
    Graph g = Graph::disjoint_union(Graph::path(3), Graph::cycle(3));
    std::vector<int> order = g.bfs_order();
    CHECK(order.size() == 6);
    CHECK(order[0] == 0);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
}
