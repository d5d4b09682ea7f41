#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqwl/query.hpp"
#include "cqwl/width.hpp"
#include "cqwl/wl.hpp"

namespace cqwl {

/// Self-contained witness for the lower bound: a pair of graphs that agree
/// under (k-1)-dimensional colour refinement but give different answer
/// counts for the query.
struct WitnessCertificate {
    ConjunctiveQuery original;
    ConjunctiveQuery minimized;
    int sew = 0;              // k
    int ell = 0;              // 0 for the full-query path
    std::vector<int> z;       // clone multiplicities per free variable
    Graph g1, g2;
    std::uint64_t count1 = 0;
    std::uint64_t count2 = 0;
    bool wl_equivalent_km1 = false;
    bool hom_indist_equal = false;
    int hom_indist_max_pattern = 0;
    bool full_query = false;
    bool valid = false;
    std::string status;

    std::string to_json() const;
};

WitnessCertificate parse_witness_json(const std::string& text);

/// Dimension of the query's answer-count parameter under colour refinement,
/// i.e. the extension width of the counting-minimal core. Requires a
/// connected query with at least one free variable.
int wl_dimension(const ConjunctiveQuery& q, int cap = kDefaultTreewidthCap,
                 std::uint64_t budget = kDefaultBudget);

/// Construct the witness pair: minimize, pick the smallest workable odd
/// ell, build the two parity gadget graphs, clone free-variable blocks if
/// the raw counts happen to agree, then self-check.
WitnessCertificate build_witness(const ConjunctiveQuery& q,
                                 int cap = kDefaultTreewidthCap,
                                 int max_pattern = 7,
                                 std::uint64_t budget = kDefaultBudget);

struct CheckReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::string note;

    bool all_pass() const;
    std::string to_json() const;
};

/// Recompute everything a certificate claims and report each check.
CheckReport verify_witness(const WitnessCertificate& cert,
                           std::uint64_t budget = kDefaultBudget);

/// If G1 and G2 are k-WL-equivalent for k = sew(q), their answer counts
/// must agree; reports "precondition not met" otherwise.
CheckReport upper_bound_check(const ConjunctiveQuery& q, const Graph& G1,
                              const Graph& G2, int cap = kDefaultTreewidthCap,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace cqwl
