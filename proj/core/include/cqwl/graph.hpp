#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqwl/errors.hpp"

namespace cqwl {

/// Budget for exhaustive searches, counted in visited partial assignments.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/// Finite simple undirected graph with dense vertex ids 0..n-1.
/// Edges are kept sorted and deduplicated; adjacency is available both as
/// neighbour lists and as a matrix. Optional labels carry provenance
/// (CFI subsets, clone indices) and never affect semantics.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const { return adj_matrix_[u][v] != 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    void set_label(int v, std::string label);

    bool is_connected() const;
    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const;
    std::vector<int> induced_order(const std::vector<int>& vertices) const;
    /// Subgraph induced on `vertices` (relabelled 0..m-1 in the given order).
    Graph induced(const std::vector<int>& vertices) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    /// BFS visiting order from vertex 0, covering later components too.
    /// Deterministic; used to fix homomorphism enumeration order.
    std::vector<int> bfs_order() const;

    std::string to_text() const;

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph edgeless(int n);
    static Graph disjoint_union(const Graph& a, const Graph& b);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<char>> adj_matrix_;
    std::vector<std::string> labels_;
};

/// Parse the textual graph format: '#' comments, one "p <n>" line,
/// "e <u> <v>" lines with 0-based endpoints.
Graph parse_graph(const std::string& text);

/// Total map between vertex sets of two fixed graphs.
struct Homomorphism {
    std::vector<int> map;  // map[v] = image of v

    bool is_valid(const Graph& source, const Graph& target) const;
};

/// Graph G together with a homomorphism into a pattern graph.
/// The colouring is validated on construction.
class ColouredGraph {
public:
    ColouredGraph(Graph graph, Graph pattern, std::vector<int> colouring);

    const Graph& graph() const { return graph_; }
    const Graph& pattern() const { return pattern_; }
    const std::vector<int>& colouring() const { return colouring_; }
    /// Vertices of `graph` coloured `p`, ascending.
    std::vector<int> colour_class(int p) const;

private:
    Graph graph_;
    Graph pattern_;
    std::vector<int> colouring_;
};

/// |Hom(H,G)| by exhaustive backtracking in BFS order of H.
std::uint64_t count_hom(const Graph& H, const Graph& G,
                        std::uint64_t budget = kDefaultBudget);

/// |{h in Hom(H,G) : c(h(.)) = tau}| for an F-coloured G and tau: H -> F.
/// Enumeration is restricted per vertex to the colour class of tau(v).
std::uint64_t count_hom_tau(const Graph& H, const ColouredGraph& G,
                            const std::vector<int>& tau,
                            std::uint64_t budget = kDefaultBudget);

/// Categorical (tensor) product: hom counts multiply.
Graph tensor(const Graph& a, const Graph& b);

/// Self-loop-free complement.
Graph complement(const Graph& g);

/// Isomorphism test with optional witness bijection. Prunes by degree
/// sequence and 1-WL vertex colours.
bool is_isomorphic(const Graph& a, const Graph& b,
                   std::vector<int>* witness = nullptr,
                   std::uint64_t budget = kDefaultBudget);

/// Full automorphism group as explicit permutations, lexicographic order.
std::vector<std::vector<int>> automorphisms(const Graph& g,
                                            std::uint64_t budget = kDefaultBudget);

/// Stable 1-WL vertex colours (colour ids canonical per graph, by sorted
/// refinement keys). Shared by the isomorphism search and the WL engine.
std::vector<int> stable_vertex_colours(const Graph& g);

}  // namespace cqwl
