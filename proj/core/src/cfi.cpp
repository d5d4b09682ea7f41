#include "cqwl/cfi.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace cqwl {

int CfiGraph::vertex_of(int w, const std::vector<int>& S) const {
    const auto& nbrs = base.neighbors(w);
    std::uint32_t mask = 0;
    for (int s : S) {
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), s);
        if (it == nbrs.end() || *it != s) return -1;
        mask |= 1u << (it - nbrs.begin());
    }
    for (int v = 0; v < result.num_vertices(); ++v)
        if (base_vertex[v] == w && subset_mask[v] == mask) return v;
    return -1;
}

std::vector<int> CfiGraph::subset_of(int v) const {
    const auto& nbrs = base.neighbors(base_vertex[v]);
    std::vector<int> out;
    for (size_t i = 0; i < nbrs.size(); ++i)
        if (subset_mask[v] & (1u << i)) out.push_back(nbrs[i]);
    return out;
}

CfiGraph cfi(const Graph& g, const std::vector<int>& odd_set) {
    std::set<int> w_set(odd_set.begin(), odd_set.end());
    for (int w : w_set)
        if (w < 0 || w >= g.num_vertices()) throw DomainError("odd-set vertex out of range");

    CfiGraph out;
    out.base = g;
    out.odd_set.assign(w_set.begin(), w_set.end());

    // Vertices (w,S) ordered by (w, subset bitmask) for canonical indices.
    std::vector<int> first_of(g.num_vertices() + 1, 0);
    for (int w = 0; w < g.num_vertices(); ++w) {
        int deg = g.degree(w);
        if (deg > kMaxCfiDegree)
            throw BudgetExceededError("CFI degree cap exceeded at vertex " + std::to_string(w));
        int want = w_set.count(w) ? 1 : 0;
        for (std::uint32_t mask = 0; mask < (1u << deg); ++mask) {
            if ((std::popcount(mask) & 1) != want) continue;
            out.base_vertex.push_back(w);
            out.subset_mask.push_back(mask);
        }
        first_of[w + 1] = static_cast<int>(out.base_vertex.size());
    }

    int n = static_cast<int>(out.base_vertex.size());
    std::vector<std::pair<int, int>> edges;
    // {(w,S),(w',S')} is an edge iff {w,w'} is a base edge and w' in S <=> w in S'.
    for (auto [w, wp] : g.edges()) {
        const auto& nw = g.neighbors(w);
        const auto& nwp = g.neighbors(wp);
        int bit_w = static_cast<int>(std::lower_bound(nw.begin(), nw.end(), wp) - nw.begin());
        int bit_wp = static_cast<int>(std::lower_bound(nwp.begin(), nwp.end(), w) - nwp.begin());
        for (int a = first_of[w]; a < first_of[w + 1]; ++a)
            for (int b = first_of[wp]; b < first_of[wp + 1]; ++b) {
                bool wp_in_S = out.subset_mask[a] & (1u << bit_w);
                bool w_in_Sp = out.subset_mask[b] & (1u << bit_wp);
                if (wp_in_S == w_in_Sp) edges.emplace_back(a, b);
            }
    }
    out.result = Graph(n, std::move(edges));
    for (int v = 0; v < n; ++v) {
        std::ostringstream label;
        label << "(" << out.base_vertex[v] << ",{";
        auto subset = out.subset_of(v);
        for (size_t i = 0; i < subset.size(); ++i) label << (i ? "," : "") << subset[i];
        label << "})";
        out.result.set_label(v, label.str());
    }
    return out;
}

bool cfi_iso_parity(const Graph& g, const std::vector<int>& w1,
                    const std::vector<int>& w2) {
    if (!g.is_connected()) throw DomainError("CFI parity law requires a connected base");
    std::set<int> a(w1.begin(), w1.end()), b(w2.begin(), w2.end());
    return (a.size() & 1) == (b.size() & 1);
}

CloneResult clone_blocks(const ColouredGraph& g, const CloneSpec& spec) {
    if (spec.block_vertices.size() != spec.multiplicities.size())
        throw DomainError("clone spec length mismatch");
    std::set<int> distinct(spec.block_vertices.begin(), spec.block_vertices.end());
    if (distinct.size() != spec.block_vertices.size())
        throw DomainError("clone block vertices must be pairwise distinct");
    for (int v : spec.block_vertices)
        if (v < 0 || v >= g.pattern().num_vertices())
            throw DomainError("clone block vertex not in pattern");
    for (int z : spec.multiplicities)
        if (z < 1) throw DomainError("clone multiplicity must be >= 1");

    int np = g.pattern().num_vertices();
    std::vector<int> mult(np, -1);  // -1: primal colour class (not replicated)
    for (size_t i = 0; i < spec.block_vertices.size(); ++i)
        mult[spec.block_vertices[i]] = spec.multiplicities[i];

    std::vector<int> rho;
    std::vector<int> colour;
    std::vector<std::string> labels;
    for (int v = 0; v < g.graph().num_vertices(); ++v) {
        int copies = mult[g.colouring()[v]];
        int z = (copies < 0) ? 1 : copies;
        for (int j = 0; j < z; ++j) {
            rho.push_back(v);
            colour.push_back(g.colouring()[v]);
            std::string base = g.graph().labels()[v].empty() ? std::to_string(v)
                                                             : g.graph().labels()[v];
            labels.push_back(copies < 0 ? base
                                        : base + "#" + std::to_string(j + 1));
        }
    }
    int n = static_cast<int>(rho.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.graph().has_edge(rho[a], rho[b])) edges.emplace_back(a, b);
    Graph cloned(n, std::move(edges));
    cloned.set_labels(std::move(labels));
    return CloneResult{ColouredGraph(std::move(cloned), g.pattern(), std::move(colour)),
                       std::move(rho)};
}

}  // namespace cqwl
