#include <doctest.h>

#include "cqwl/quantum.hpp"
#include "helpers.hpp"

using namespace cqwl;

namespace {

// Brute-force injective star answers: injective X-tuples with a common
// neighbour outside nothing in particular (the centre may equal a leaf image).
std::uint64_t brute_injective_star(int k, const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> pick(k, -1);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int p) -> void {
        if (p == k) {
            for (int y = 0; y < n; ++y) {
                bool ok = true;
                for (int i = 0; i < k && ok; ++i)
                    if (!g.has_edge(pick[i], y)) ok = false;
                if (ok) {
                    ++count;
                    return;
                }
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            bool used = false;
            for (int i = 0; i < p; ++i)
                if (pick[i] == v) used = true;
            if (used) continue;
            pick[p] = v;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

TEST_CASE("normalization merges and cancels") {
    ConjunctiveQuery edge = parse_query("q(x) :- E(x,y)");
    ConjunctiveQuery path = parse_query("q(x) :- E(x,y1), E(y1,y2)");

    QuantumQuery cancelled = normalize_quantum({{Rational(1), edge}, {Rational(-1), edge}});
    CHECK(cancelled.terms.empty());

    QuantumQuery merged = normalize_quantum({{Rational(1), path}, {Rational(2), edge}});
    REQUIRE(merged.terms.size() == 1);
    CHECK(merged.terms[0].coeff == 3);
    CHECK(merged.terms[0].query.H.num_vertices() == 2);

    QuantumQuery same = normalize_quantum({{Rational(1), star_query(2)}});
    CHECK(same.terms.size() == 1);

    CHECK_THROWS_AS(
        normalize_quantum({{Rational(1), parse_query("q(x1,x2) :- E(x1,y1), E(x2,y2)")}}),
        DomainError);
    ConjunctiveQuery no_free{Graph::complete(2), {}, {"y1", "y2"}};
    CHECK_THROWS_AS(normalize_quantum({{Rational(1), no_free}}), DomainError);
}

TEST_CASE("evaluation is the weighted answer sum and is linear") {
    ConjunctiveQuery edge = parse_query("q(x) :- E(x,y)");
    QuantumQuery empty;
    CHECK(eval_quantum(empty, Graph::complete(3)) == 0);

    QuantumQuery s2 = normalize_quantum({{Rational(1), star_query(2)}});
    CHECK(eval_quantum(s2, Graph::complete(3)) == 9);

    QuantumQuery mix =
        normalize_quantum({{Rational(1, 2), edge}, {Rational(-2), star_query(2)}});
    Graph g = Graph::cycle(5);
    Rational expect = Rational(1, 2) * count_answers(edge, g) -
                      Rational(2) * count_answers(star_query(2), g);
    CHECK(eval_quantum(mix, g) == expect);
}

TEST_CASE("hereditary width") {
    std::vector<QuantumTerm> terms;
    for (int k = 1; k <= 3; ++k) terms.push_back({Rational(1), star_query(k)});
    CHECK(hsew(normalize_quantum(terms)) == 3);

    ConjunctiveQuery full_c6{Graph::cycle(6), {0, 1, 2, 3, 4, 5},
                             {"a", "b", "c", "d", "e", "f"}};
    CHECK(hsew(normalize_quantum({{Rational(1), full_c6}})) == 2);
    CHECK(hsew(normalize_quantum({{Rational(1), parse_query("q(x) :- E(x,y)")}})) == 1);
    CHECK_THROWS_AS(hsew(QuantumQuery{}), DomainError);
}

TEST_CASE("injective star counts") {
    CHECK(count_injective_star(2, Graph::complete(3)) == 6);
    CHECK(count_injective_star(1, Graph::path(3)) == 3);
    for (const Graph& g : testing::all_graphs_upto(6))
        for (int k = 1; k <= 3; ++k)
            CHECK(count_injective_star(k, g) == brute_injective_star(k, g));
}

TEST_CASE("dominating set counts on fixed instances") {
    CHECK(count_dominating_sets(1, Graph::complete(5)) == 5);
    CHECK(count_dominating_sets(1, Graph::cycle(4)) == 0);
    CHECK(count_dominating_sets(2, Graph::cycle(4)) == 6);
    CHECK(count_dominating_sets(2, testing::c6()) == 3);
}

TEST_CASE("dominating set counts match brute force") {
    for (const Graph& g : testing::all_graphs_upto(6))
        for (int k = 1; k <= 3; ++k)
            CHECK(count_dominating_sets(k, g) == testing::brute_dominating_sets(k, g));
}

TEST_CASE("quantum file parsing") {
    std::vector<QuantumTerm> terms = parse_quantum(
        "# weighted pair\n"
        "1 | q(x1,x2) :- E(x1,y), E(x2,y)\n"
        "-1/2 | q(x) :- E(x,y)\n"
        "\n");
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].coeff == 1);
    CHECK(terms[1].coeff == Rational(-1, 2));
    CHECK(terms[1].query.H.num_vertices() == 2);

    CHECK_THROWS_AS(parse_quantum("no bar here\n"), ParseError);
    CHECK_THROWS_AS(parse_quantum("x | q(x) :- E(x,y)\n"), ParseError);
}

TEST_CASE("answer counts multiply under the tensor product") {
    std::vector<ConjunctiveQuery> queries = {parse_query("q(x) :- E(x,y)"),
                                             star_query(2)};
    std::vector<Graph> gs = {Graph::complete(3), Graph::cycle(4), Graph::path(3)};
    for (const ConjunctiveQuery& q : queries)
        for (const Graph& a : gs)
            for (const Graph& b : gs)
                CHECK(count_answers(q, tensor(a, b)) ==
                      count_answers(q, a) * count_answers(q, b));
}

TEST_CASE("acyclic queries cannot tell the two test graphs apart") {
    std::vector<std::string> trees = {
        "q(x) :- E(x,y)",
        "q(x) :- E(x,y1), E(y1,y2)",
        "q(x1,x2) :- E(x1,y), E(x2,y)",
        "q(x1,x2) :- E(x1,y1), E(y1,y2), E(y2,x2)",
        "q(x1,x2,x3) :- E(x1,y), E(x2,y), E(x3,y)",
    };
    for (const std::string& s : trees) {
        ConjunctiveQuery q = parse_query(s);
        std::uint64_t on_2k3 = count_answers(q, testing::two_k3());
        std::uint64_t on_c6 = count_answers(q, testing::c6());
        CHECK(on_2k3 == on_c6);
    }

    // When the free variables induce a subtree and each existential
    // component hangs off a single free vertex, the common value is
    // 3 * 2^|X| (answers are exactly the tree homomorphisms of H[X]).
    std::vector<std::string> pendant_trees = {
        "q(x) :- E(x,y)",
        "q(x) :- E(x,y1), E(y1,y2)",
        "q(x1,x2) :- E(x1,x2), E(x2,y)",
        "q(x1,x2,x3) :- E(x1,x2), E(x2,x3), E(x1,y)",
    };
    for (const std::string& s : pendant_trees) {
        ConjunctiveQuery q = parse_query(s);
        std::uint64_t on_2k3 = count_answers(q, testing::two_k3());
        CHECK(on_2k3 == count_answers(q, testing::c6()));
        CHECK(on_2k3 == 3ULL * (1ULL << q.X.size()));
    }
}
