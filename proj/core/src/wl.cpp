#include "cqwl/wl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "cqwl/width.hpp"

namespace cqwl {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

void decode_tuple(std::uint64_t idx, int n, int k, std::vector<int>& out) {
    for (int i = k - 1; i >= 0; --i) {
        out[i] = static_cast<int>(idx % n);
        idx /= n;
    }
}

// Ordered isomorphism type of a k-tuple: pairwise equality and adjacency.
std::vector<int> atomic_type(const Graph& g, const std::vector<int>& t) {
    std::vector<int> key;
    int k = static_cast<int>(t.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            key.push_back(t[i] == t[j] ? 1 : 0);
            key.push_back(g.has_edge(t[i], t[j]) ? 1 : 0);
        }
    return key;
}

struct JointColouring {
    std::vector<std::vector<int>> per_graph;  // colour per tuple, per graph
    int rounds = 0;
    int num_colours = 0;
};

// Folklore k-WL on several graphs at once, in one shared colour-id space.
// Ids are assigned by sorted key order each round, so the result is
// deterministic and comparable across the input graphs.
JointColouring refine_joint(const std::vector<const Graph*>& graphs, int k,
                            std::uint64_t tuple_cap) {
    if (k < 1) throw DomainError("WL dimension k must be positive");
    size_t m = graphs.size();
    std::vector<std::uint64_t> counts(m);
    std::uint64_t total = 0;
    for (size_t gi = 0; gi < m; ++gi) {
        counts[gi] = pow_u64(graphs[gi]->num_vertices(), k);
        total += counts[gi];
    }
    if (total > tuple_cap) throw BudgetExceededError("k-WL tuple budget exceeded");

    JointColouring jc;
    jc.per_graph.resize(m);

    // Initial colours from atomic types.
    {
        std::map<std::vector<int>, int> ids;
        std::vector<std::vector<std::vector<int>>> keys(m);
        for (size_t gi = 0; gi < m; ++gi) {
            std::vector<int> t(k);
            keys[gi].resize(counts[gi]);
            for (std::uint64_t idx = 0; idx < counts[gi]; ++idx) {
                decode_tuple(idx, graphs[gi]->num_vertices(), k, t);
                keys[gi][idx] = atomic_type(*graphs[gi], t);
                ids.emplace(keys[gi][idx], 0);
            }
        }
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        for (size_t gi = 0; gi < m; ++gi) {
            jc.per_graph[gi].resize(counts[gi]);
            for (std::uint64_t idx = 0; idx < counts[gi]; ++idx)
                jc.per_graph[gi][idx] = ids[keys[gi][idx]];
        }
        jc.num_colours = next;
    }

    while (true) {
        using Key = std::pair<int, std::vector<std::vector<int>>>;
        std::map<Key, int> ids;
        std::vector<std::vector<Key>> keys(m);
        for (size_t gi = 0; gi < m; ++gi) {
            const Graph& g = *graphs[gi];
            int n = g.num_vertices();
            std::vector<int> t(k);
            keys[gi].resize(counts[gi]);
            for (std::uint64_t idx = 0; idx < counts[gi]; ++idx) {
                decode_tuple(idx, n, k, t);
                std::vector<std::vector<int>> entries;
                entries.reserve(n);
                // Strides for substituting position i of the tuple index.
                for (int w = 0; w < n; ++w) {
                    std::vector<int> entry;
                    for (int i = 0; i < k; ++i) {
                        entry.push_back(w == t[i] ? 2 : (g.has_edge(w, t[i]) ? 1 : 0));
                    }
                    std::uint64_t stride = counts[gi] / n;  // n^(k-1)
                    std::uint64_t sub = idx;
                    for (int i = 0; i < k; ++i) {
                        std::uint64_t digit_stride = stride;
                        for (int d = 0; d < i; ++d) digit_stride /= n;
                        std::uint64_t with =
                            sub - static_cast<std::uint64_t>(t[i]) * digit_stride +
                            static_cast<std::uint64_t>(w) * digit_stride;
                        entry.push_back(jc.per_graph[gi][with]);
                    }
                    entries.push_back(std::move(entry));
                }
                std::sort(entries.begin(), entries.end());
                keys[gi][idx] = {jc.per_graph[gi][idx], std::move(entries)};
                ids.emplace(keys[gi][idx], 0);
            }
        }
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        if (next == jc.num_colours) break;  // refinement only splits classes
        for (size_t gi = 0; gi < m; ++gi)
            for (std::uint64_t idx = 0; idx < counts[gi]; ++idx)
                jc.per_graph[gi][idx] = ids[keys[gi][idx]];
        jc.num_colours = next;
        ++jc.rounds;
    }
    return jc;
}

}  // namespace

WlColouring wl_refine(const Graph& g, int k, std::uint64_t tuple_cap) {
    JointColouring jc = refine_joint({&g}, k, tuple_cap);
    WlColouring out;
    out.k = k;
    out.colours = std::move(jc.per_graph[0]);
    out.rounds = jc.rounds;
    out.histogram = out.colours;
    std::sort(out.histogram.begin(), out.histogram.end());
    std::uint64_t h = 1469598103934665603ULL;
    for (int c : out.histogram) {
        h ^= static_cast<std::uint64_t>(c) + 1;
        h *= 1099511628211ULL;
    }
    out.histogram_hash = h;
    return out;
}

bool wl_equivalent(const Graph& g1, const Graph& g2, int k, std::uint64_t tuple_cap) {
    if (g1.num_vertices() != g2.num_vertices()) return false;
    JointColouring jc = refine_joint({&g1, &g2}, k, tuple_cap);
    std::vector<int> h1 = jc.per_graph[0], h2 = jc.per_graph[1];
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    return h1 == h2;
}

namespace {

// Canonical edge mask: minimum over all vertex permutations.
std::uint64_t canonical_mask(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t mask = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.has_edge(perm[i], perm[j])) mask |= 1ULL << bit;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1ULL << bit)) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

}  // namespace

const std::vector<Graph>& connected_graphs_upto(int max_n) {
    if (max_n < 1 || max_n > 8) throw DomainError("pattern enumeration supports 1..8 vertices");
    static std::vector<std::vector<Graph>> cache(9);
    static std::vector<std::vector<std::uint64_t>> masks(9);  // canonical, per level
    if (cache[1].empty()) {
        cache[1] = {Graph(1)};
        masks[1] = {0};
    }
    for (int n = 2; n <= max_n; ++n) {
        if (!cache[n].empty()) continue;
        // Every connected graph has a non-cut vertex, so growing each
        // (n-1)-vertex connected graph by one vertex with every nonempty
        // neighbourhood reaches all classes on n vertices.
        std::vector<std::uint64_t> seen;
        for (const Graph& g : cache[n - 1]) {
            for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
                std::vector<std::pair<int, int>> es = g.edges();
                for (int v = 0; v < n - 1; ++v)
                    if (nb & (1u << v)) es.emplace_back(v, n - 1);
                Graph h(n, std::move(es));
                std::uint64_t canon = canonical_mask(h);
                if (std::find(seen.begin(), seen.end(), canon) == seen.end())
                    seen.push_back(canon);
            }
        }
        std::sort(seen.begin(), seen.end());
        masks[n] = seen;
        for (std::uint64_t mask : seen) cache[n].push_back(graph_from_mask(n, mask));
    }
    static std::vector<std::vector<Graph>> flat(9);
    if (flat[max_n].empty()) {
        for (int n = 1; n <= max_n; ++n)
            flat[max_n].insert(flat[max_n].end(), cache[n].begin(), cache[n].end());
    }
    return flat[max_n];
}

HomIndistVerdict hom_indist_oracle(const Graph& g1, const Graph& g2, int k,
                                   int max_pattern_size, std::uint64_t budget) {
    HomIndistVerdict verdict;
    for (const Graph& pattern : connected_graphs_upto(max_pattern_size)) {
        if (treewidth(pattern).first > k) continue;
        std::uint64_t h1 = count_hom(pattern, g1, budget);
        std::uint64_t h2 = count_hom(pattern, g2, budget);
        if (h1 != h2) {
            verdict.distinguished = true;
            verdict.distinguisher = pattern;
            verdict.hom1 = h1;
            verdict.hom2 = h2;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace cqwl
