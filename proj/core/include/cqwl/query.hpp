#pragma once

#include <string>
#include <vector>

#include "cqwl/graph.hpp"

namespace cqwl {

/// Conjunctive query: graph H of atoms plus the ordered free-variable set X.
/// Y = V(H) \ X is the set of existential variables.
struct ConjunctiveQuery {
    Graph H;
    std::vector<int> X;                  // ordered; subset of V(H)
    std::vector<std::string> var_names;  // per-vertex, for readable output

    std::vector<int> existential_vars() const;
    bool is_free(int v) const;
    std::string to_dsl() const;
};

/// Restrictions X -> X of full automorphisms of H.
struct PartialAutomorphismSet {
    std::vector<int> X;
    // Each map m has m[i] = index into X of the image of X[i].
    std::vector<std::vector<int>> maps;
};

/// Parse "q(x1,x2) :- E(x1,y), E(x2,y)". Head variables become X.
ConjunctiveQuery parse_query(const std::string& text);

bool is_connected(const ConjunctiveQuery& q);

/// |Ans(q,G)|: assignments X -> V(G) that extend to a homomorphism.
/// The extension is an existence check, not a full enumeration.
std::uint64_t count_answers(const ConjunctiveQuery& q, const Graph& G,
                            std::uint64_t budget = kDefaultBudget);

/// Counting-minimal core: repeatedly fold H along a non-injective
/// endomorphism that maps X bijectively onto X, until none exists.
ConjunctiveQuery minimize(const ConjunctiveQuery& q,
                          std::uint64_t budget = kDefaultBudget);

/// Query isomorphism: an isomorphism of the H's mapping X1 onto X2.
bool queries_isomorphic(const ConjunctiveQuery& a, const ConjunctiveQuery& b,
                        std::uint64_t budget = kDefaultBudget);

bool is_counting_equivalent(const ConjunctiveQuery& a, const ConjunctiveQuery& b,
                            std::uint64_t budget = kDefaultBudget);

PartialAutomorphismSet partial_automorphisms(const ConjunctiveQuery& q,
                                             std::uint64_t budget = kDefaultBudget);

/// The k-star (S_k, X_k): k free leaves around one existential centre.
ConjunctiveQuery star_query(int k);

}  // namespace cqwl
