#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cqwl/graph.hpp"

namespace cqwl {

/// Cap on |V|^k tuples for the k-WL refinement tables.
inline constexpr std::uint64_t kDefaultWlTupleCap = 20'000'000ULL;

/// Stable k-WL colouring of one graph. Colour ids are canonical: assigned by
/// first occurrence in sorted refinement-key order, so the colouring is a
/// deterministic function of the graph.
struct WlColouring {
    int k = 1;
    std::vector<int> colours;    // per k-tuple, tuple index in base-n digits
    int rounds = 0;              // refinement rounds until stabilization
    std::vector<int> histogram;  // final colour multiset, sorted
    std::uint64_t histogram_hash = 0;
};

/// Folklore k-WL tuple refinement: initial colour is the ordered isomorphism
/// type of the tuple; a round appends, per substituted vertex w, the atomic
/// type of w against the tuple and the colours of the k substituted tuples.
WlColouring wl_refine(const Graph& g, int k,
                      std::uint64_t tuple_cap = kDefaultWlTupleCap);

/// k-WL equivalence via joint refinement of both graphs in a shared colour
/// space. Unequal vertex counts are never equivalent.
bool wl_equivalent(const Graph& g1, const Graph& g2, int k,
                   std::uint64_t tuple_cap = kDefaultWlTupleCap);

struct HomIndistVerdict {
    bool distinguished = false;
    std::optional<Graph> distinguisher;  // pattern with differing hom counts
    std::uint64_t hom1 = 0, hom2 = 0;
};

/// One-sided oracle for the homomorphism-count definition of k-WL
/// equivalence: search all connected patterns up to `max_pattern_size`
/// vertices (up to isomorphism) with treewidth <= k for one with differing
/// hom counts. "Not distinguished" only certifies equality up to the bound.
HomIndistVerdict hom_indist_oracle(const Graph& g1, const Graph& g2, int k,
                                   int max_pattern_size = 7,
                                   std::uint64_t budget = kDefaultBudget);

/// All connected graphs on 1..max_n vertices, one per isomorphism class,
/// by increasing vertex count. Cached; max_n <= 8.
const std::vector<Graph>& connected_graphs_upto(int max_n);

}  // namespace cqwl
