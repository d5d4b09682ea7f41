#include <doctest.h>

#include <random>

#include "cqwl/cfi.hpp"
#include "cqwl/query.hpp"
#include "cqwl/wl.hpp"
#include "helpers.hpp"

using namespace cqwl;

TEST_CASE("gadget graphs over the triangle") {
    CfiGraph even = cfi(Graph::complete(3), {});
    CHECK(even.result.num_vertices() == 6);
    CHECK(is_isomorphic(even.result, testing::two_k3()));
    CfiGraph odd = cfi(Graph::complete(3), {0});
    CHECK(odd.result.num_vertices() == 6);
    CHECK(is_isomorphic(odd.result, testing::c6()));
}

TEST_CASE("gadget vertex counts") {
    for (const Graph& g : connected_graphs_upto(5)) {
        bool min_deg_one = g.num_vertices() > 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) == 0) min_deg_one = false;
        if (!min_deg_one) continue;
        std::uint64_t expect = 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            expect += 1ULL << (g.degree(v) - 1);
        CHECK(cfi(g, {}).result.num_vertices() == static_cast<int>(expect));
    }
}

TEST_CASE("first projection is a homomorphism") {
    Graph g = Graph::cycle(4);
    CfiGraph chi = cfi(g, {0, 2});
    ColouredGraph cg = chi.coloured();
    Homomorphism h{chi.base_vertex};
    CHECK(h.is_valid(chi.result, g));
    for (int v = 0; v < chi.result.num_vertices(); ++v) {
        std::vector<int> s = chi.subset_of(v);
        CHECK(chi.vertex_of(chi.base_vertex[v], s) == v);
        size_t parity = (chi.base_vertex[v] == 0 || chi.base_vertex[v] == 2) ? 1 : 0;
        CHECK(s.size() % 2 == parity);
    }
}

TEST_CASE("parity law on small connected bases") {
    for (const Graph& g : connected_graphs_upto(4)) {
        if (g.num_vertices() < 2) continue;
        int n = g.num_vertices();
        std::vector<std::vector<int>> sets = {{}};
        for (int v = 0; v < n; ++v) sets.push_back({v});
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) sets.push_back({u, v});
        for (const auto& w1 : sets)
            for (const auto& w2 : sets) {
                bool predicted = cfi_iso_parity(g, w1, w2);
                bool actual = is_isomorphic(cfi(g, w1).result, cfi(g, w2).result);
                CHECK(predicted == actual);
            }
    }
}

TEST_CASE("degree cap raises a domain error") {
    CHECK_THROWS_AS(cfi(star_query(21).H, {}), BudgetExceededError);
}

TEST_CASE("cloning with unit multiplicities is the identity") {
    CfiGraph chi = cfi(Graph::complete(3), {});
    CloneSpec spec{{0, 1}, {1, 1}};
    CloneResult r = clone_blocks(chi.coloured(), spec);
    CHECK(r.coloured.graph() == chi.result);
    for (int v = 0; v < chi.result.num_vertices(); ++v) CHECK(r.rho[v] == v);
}

TEST_CASE("cloning sizes and colouring") {
    CfiGraph chi = cfi(Graph::complete(3), {});
    CloneSpec spec{{0}, {3}};
    CloneResult r = clone_blocks(chi.coloured(), spec);
    // Colour class of base vertex 0 has 2 members; tripled adds 4 vertices.
    CHECK(r.coloured.graph().num_vertices() == 10);
    Homomorphism newcol{r.coloured.colouring()};
    CHECK(newcol.is_valid(r.coloured.graph(), chi.base));
    for (int v = 0; v < r.coloured.graph().num_vertices(); ++v)
        CHECK(r.coloured.colouring()[v] == chi.base_vertex[r.rho[v]]);
}

TEST_CASE("cloning rejects bad specs") {
    CfiGraph chi = cfi(Graph::complete(3), {});
    CHECK_THROWS_AS(clone_blocks(chi.coloured(), CloneSpec{{0, 0}, {2, 2}}), DomainError);
    CHECK_THROWS_AS(clone_blocks(chi.coloured(), CloneSpec{{7}, {2}}), DomainError);
    CHECK_THROWS_AS(clone_blocks(chi.coloured(), CloneSpec{{0}, {0}}), DomainError);
}

TEST_CASE("cloning identity for colour-restricted hom counts") {
    std::mt19937 rng(12345);
    const std::vector<Graph>& patterns = connected_graphs_upto(4);
    int done = 0;
    while (done < 30) {
        const Graph& f = patterns[rng() % patterns.size()];
        if (f.num_vertices() < 2) continue;
        std::vector<int> w;
        for (int v = 0; v < f.num_vertices(); ++v)
            if (rng() % 3 == 0) w.push_back(v);
        CfiGraph chi = cfi(f, w);
        ColouredGraph cg = chi.coloured();

        // Random small H and a random homomorphism tau: H -> F.
        int hn = 1 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> hes;
        std::vector<int> tau(hn);
        for (int v = 0; v < hn; ++v) tau[v] = static_cast<int>(rng() % f.num_vertices());
        for (int u = 0; u < hn; ++u)
            for (int v = u + 1; v < hn; ++v)
                if (f.has_edge(tau[u], tau[v]) && rng() % 2) hes.emplace_back(u, v);
        Graph h(hn, hes);

        CloneSpec spec;
        int blocks = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < blocks; ++i) {
            int v = static_cast<int>(rng() % f.num_vertices());
            if (std::find(spec.block_vertices.begin(), spec.block_vertices.end(), v) !=
                spec.block_vertices.end())
                continue;
            spec.block_vertices.push_back(v);
            spec.multiplicities.push_back(1 + static_cast<int>(rng() % 3));
        }
        if (spec.block_vertices.empty()) continue;

        CloneResult r = clone_blocks(cg, spec);
        std::uint64_t base_count = count_hom_tau(h, cg, tau);
        std::uint64_t factor = 1;
        for (size_t i = 0; i < spec.block_vertices.size(); ++i) {
            int d = 0;
            for (int v = 0; v < hn; ++v)
                if (tau[v] == spec.block_vertices[i]) ++d;
            for (int j = 0; j < d; ++j) factor *= spec.multiplicities[i];
        }
        CHECK(count_hom_tau(h, r.coloured, tau) == base_count * factor);
        ++done;
    }
}
