#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cqwl/graph.hpp"
#include "cqwl/wl.hpp"

namespace cqwl::testing {

inline Graph two_k3() {
    return Graph::disjoint_union(Graph::complete(3), Graph::complete(3));
}

inline Graph c6() { return Graph::cycle(6); }

/// All graphs on 1..max_n vertices up to isomorphism: disjoint unions of a
/// non-decreasing multiset of connected representatives.
inline std::vector<Graph> all_graphs_upto(int max_n) {
    const std::vector<Graph>& conn = connected_graphs_upto(max_n);
    std::vector<Graph> out;
    auto rec = [&](auto&& self, size_t min_idx, int room, Graph acc) -> void {
        if (acc.num_vertices() > 0) out.push_back(acc);
        for (size_t i = min_idx; i < conn.size(); ++i) {
            if (conn[i].num_vertices() > room) continue;
            self(self, i, room - conn[i].num_vertices(),
                 Graph::disjoint_union(acc, conn[i]));
        }
    };
    rec(rec, 0, max_n, Graph(0));
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return a.num_vertices() < b.num_vertices();
    });
    return out;
}

/// Exact treewidth by trying every elimination ordering; oracle for the
/// DP-based solver on small graphs.
inline int brute_treewidth(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return -1;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int best = n;
    do {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
        std::vector<char> gone(n, 0);
        int width = -1;
        for (int v : perm) {
            std::vector<int> nbrs;
            for (int u = 0; u < n; ++u)
                if (!gone[u] && u != v && adj[v][u]) nbrs.push_back(u);
            width = std::max(width, static_cast<int>(nbrs.size()));
            for (int a : nbrs)
                for (int b : nbrs)
                    if (a != b) adj[a][b] = 1;
            gone[v] = 1;
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Brute-force count of size-k dominating sets.
inline std::uint64_t brute_dominating_sets(int k, const Graph& g) {
    int n = g.num_vertices();
    std::uint64_t count = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            std::vector<char> covered(n, 0);
            for (int v : pick) {
                covered[v] = 1;
                for (int u : g.neighbors(v)) covered[u] = 1;
            }
            for (int v = 0; v < n; ++v)
                if (!covered[v]) return;
            ++count;
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace cqwl::testing
