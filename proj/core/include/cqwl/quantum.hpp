#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "cqwl/query.hpp"
#include "cqwl/width.hpp"

namespace cqwl {

using Rational = boost::multiprecision::cpp_rational;

/// Finite rational linear combination of counting-minimal, connected,
/// pairwise non-isomorphic conjunctive queries.
struct QuantumTerm {
    Rational coeff;
    ConjunctiveQuery query;
};

struct QuantumQuery {
    std::vector<QuantumTerm> terms;
};

/// Minimize constituents, merge isomorphic ones, drop zero coefficients.
/// Throws DomainError on a disconnected constituent or one with no free
/// variables.
QuantumQuery normalize_quantum(const std::vector<QuantumTerm>& raw,
                               std::uint64_t budget = kDefaultBudget);

/// Weighted answer count: sum of coeff * |Ans(constituent, G)|.
Rational eval_quantum(const QuantumQuery& q, const Graph& G,
                      std::uint64_t budget = kDefaultBudget);

/// Hereditary semantic extension width: max over constituents.
int hsew(const QuantumQuery& q, int cap = kDefaultTreewidthCap,
         std::uint64_t budget = kDefaultBudget);

/// |Inj((S_k,X_k),G)|: injective star answers via inclusion-exclusion over
/// set partitions of the free variables (signed Stirling coefficients).
std::uint64_t count_injective_star(int k, const Graph& G,
                                   std::uint64_t budget = kDefaultBudget);

/// Number of size-k dominating sets, via the complement-star reduction:
/// C(n,k) - Inj((S_k,X_k), complement(G)) / k!.
std::uint64_t count_dominating_sets(int k, const Graph& G,
                                    std::uint64_t budget = kDefaultBudget);

/// Parse the ".quantum" format: one "coeff | query-DSL" line per term,
/// '#' comments and blank lines ignored; coeff an integer or a/b fraction.
std::vector<QuantumTerm> parse_quantum(const std::string& text);

}  // namespace cqwl
