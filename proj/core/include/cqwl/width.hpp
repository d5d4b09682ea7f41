#pragma once

#include <map>
#include <string>
#include <vector>

#include "cqwl/query.hpp"

namespace cqwl {

/// Default cap on the exact treewidth solver (subset DP over vertex masks).
inline constexpr int kDefaultTreewidthCap = 32;

/// Tree of bags witnessing a treewidth bound for some graph.
struct TreeDecomposition {
    Graph tree;                          // acyclic, connected
    std::vector<std::vector<int>> bags;  // bag per tree node, sorted
    int width = -1;                      // max bag size - 1

    /// Check (T1) vertex coverage, (T2) bag connectivity per vertex,
    /// (T3) edge coverage for the decomposed graph g.
    bool validate(const Graph& g) const;

    std::string to_json() const;
};

/// F_ell(H,X): X shared, each existential component replicated ell times.
struct EllCopy {
    Graph F;
    std::vector<int> gamma;  // F-vertex -> H-vertex projection
    int ell = 1;
    // component_copies[i][j] = vertices of the j-th copy (0-based) of the
    // i-th connected component of H[Y], as F-vertex ids.
    std::vector<std::vector<std::vector<int>>> component_copies;
    std::vector<int> x_in_f;  // F-vertex id of each X variable, in X order
};

/// Exact treewidth with a witnessing decomposition. Elimination-ordering DP
/// over vertex subsets; ties broken towards the lexicographically smallest
/// optimal elimination ordering.
std::pair<int, TreeDecomposition> treewidth(const Graph& g,
                                            int cap = kDefaultTreewidthCap);

/// Gamma(H,X): H plus an edge between distinct free variables whenever some
/// component of H[Y] is adjacent to both.
Graph extension_graph(const ConjunctiveQuery& q);

/// Tw(Gamma(H,X)).
int extension_width(const ConjunctiveQuery& q, int cap = kDefaultTreewidthCap);

/// Gamma(H,X) induced on X.
Graph contract_graph(const ConjunctiveQuery& q);

EllCopy ell_copy(const ConjunctiveQuery& q, int ell);

/// Extension width of the counting-minimal core.
int semantic_extension_width(const ConjunctiveQuery& q,
                             int cap = kDefaultTreewidthCap,
                             std::uint64_t budget = kDefaultBudget);

/// Smallest odd ell with Tw(F_ell) = extension width; the query must be
/// counting minimal and connected.
int choose_witness_ell(const ConjunctiveQuery& q, int cap = kDefaultTreewidthCap);

}  // namespace cqwl
