#pragma once

#include <cstdint>
#include <vector>

#include "cqwl/graph.hpp"

namespace cqwl {

/// Degrees above this would need 2^(deg-1) gadget vertices per base vertex.
inline constexpr int kMaxCfiDegree = 20;

/// CFI gadget graph chi(G,W): vertices are pairs (w,S) with S a subset of
/// N(w) whose parity matches membership of w in W.
struct CfiGraph {
    Graph base;
    std::vector<int> odd_set;  // W, sorted
    Graph result;
    // Per result vertex: the base vertex and the subset S as a bitmask over
    // the (ascending) neighbour list of that base vertex.
    std::vector<int> base_vertex;
    std::vector<std::uint32_t> subset_mask;

    /// First projection, a homomorphism result -> base.
    ColouredGraph coloured() const { return ColouredGraph(result, base, base_vertex); }

    /// Result vertex id for (w, S), S given as base-vertex set; -1 if absent.
    int vertex_of(int w, const std::vector<int>& S) const;
    /// Subset S of a result vertex as base-vertex ids, ascending.
    std::vector<int> subset_of(int v) const;
};

CfiGraph cfi(const Graph& g, const std::vector<int>& odd_set);

/// Predicted isomorphism verdict for chi(G,W1) vs chi(G,W2) on connected G:
/// isomorphic iff |W1| and |W2| have equal parity.
bool cfi_iso_parity(const Graph& g, const std::vector<int>& w1,
                    const std::vector<int>& w2);

/// Which pattern colour classes to replicate, and how often.
struct CloneSpec {
    std::vector<int> block_vertices;  // pairwise distinct pattern vertices
    std::vector<int> multiplicities;  // z_i >= 1, same length
};

struct CloneResult {
    ColouredGraph coloured;  // cloned graph with the inherited colouring
    std::vector<int> rho;    // cloned-graph vertex -> original vertex
};

/// Replicate the colour class of block vertex v_i so it appears z_i times.
/// Adjacency lifts along rho; clones inherit their primal's colour.
CloneResult clone_blocks(const ColouredGraph& g, const CloneSpec& spec);

}  // namespace cqwl
