#pragma once

#include <cstdint>
#include <vector>

#include "cqwl/cfi.hpp"
#include "cqwl/query.hpp"
#include "cqwl/width.hpp"

namespace cqwl {

/// Assignment X -> V(chi(F,W)) with phi(x_p) = (x_p, S_p), together with the
/// parity-condition verdicts that characterise extendability.
struct ExtendableAssignment {
    std::vector<int> phi;                 // chi-vertex per X position
    std::vector<std::vector<int>> sets;   // S_p as F-vertex ids, ascending
    bool e1 = false;                      // symmetric choice on X-X edges
    bool e2 = false;                      // some copy with even intersection sum
    std::vector<int> witness_copy;        // per Y-component: 0-based j with even sum, or -1
};

/// beta: E(G) -> {0,1} with odd beta-degree exactly on the target set.
struct ParityAssignment {
    std::vector<char> beta;  // indexed like G.edges()

    bool validate(const Graph& g, const std::vector<int>& target_set) const;
};

/// |Ans^tau|: answers whose X-image has H-colour tau. `h_colouring` maps
/// V(G) -> V(H); tau maps X positions -> V(H).
std::uint64_t count_answers_tau(const ConjunctiveQuery& q, const Graph& G,
                                const std::vector<int>& h_colouring,
                                const std::vector<int>& tau,
                                std::uint64_t budget = kDefaultBudget);

/// |cpAns|: X-assignments extendable by a fully colour-prescribed
/// homomorphism (c(h(v)) = v for every vertex of H).
std::uint64_t count_cp_answers(const ConjunctiveQuery& q, const Graph& G,
                               const std::vector<int>& h_colouring,
                               std::uint64_t budget = kDefaultBudget);

/// Brute-force cpAns as an explicit set of X-assignments (test oracle for
/// the parity characterisation).
std::vector<std::vector<int>> enumerate_cp_answers(const ConjunctiveQuery& q,
                                                   const Graph& G,
                                                   const std::vector<int>& h_colouring,
                                                   std::uint64_t budget = kDefaultBudget);

/// All extendable assignments E(X,F,W) for chi = chi(F,W), W a subset of X.
/// Requires odd ell, connected H, and some free variable adjacent to Y.
std::vector<ExtendableAssignment> enumerate_extendable(const ConjunctiveQuery& q,
                                                       const EllCopy& f,
                                                       const CfiGraph& chi);

/// Constructive parity edge assignment on a connected graph for an
/// even-size target set; validated before returning.
ParityAssignment parity_edge_assignment(const Graph& g,
                                        const std::vector<int>& target_set);

/// Extend an extendable assignment to a colour-prescribed homomorphism
/// H -> chi(F,W), following the witness-copy / parity-routing construction.
/// Throws DomainError if phi fails (E1) or (E2).
Homomorphism extend_assignment(const ExtendableAssignment& phi,
                               const ConjunctiveQuery& q, const EllCopy& f,
                               const CfiGraph& chi);

/// Independent oracle for count_answers on tiny instances: computes
/// |Hom(F_ell, G)| for ell = 1..|V(G)|^|Y| and inverts the Vandermonde
/// system over exact rationals.
std::uint64_t ans_via_interpolation(const ConjunctiveQuery& q, const Graph& G,
                                    std::uint64_t max_nhat = 16,
                                    std::uint64_t budget = kDefaultBudget);

/// The H-colouring gamma(pi_1(.)) of chi(F,W).
std::vector<int> cfi_h_colouring(const EllCopy& f, const CfiGraph& chi);

}  // namespace cqwl
