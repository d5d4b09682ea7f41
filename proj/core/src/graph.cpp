#include "cqwl/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace cqwl {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
    std::set<std::pair<int, int>> canon;
    for (auto [u, v] : edges) {
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw DomainError("edge endpoint out of range");
        canon.insert({std::min(u, v), std::max(u, v)});
    }
    edges_.assign(canon.begin(), canon.end());
    adj_.assign(n, {});
    adj_matrix_.assign(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        adj_matrix_[u][v] = adj_matrix_[v][u] = 1;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    labels_.assign(n, "");
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw DomainError("label count mismatch");
    labels_ = std::move(labels);
}

void Graph::set_label(int v, std::string label) { labels_.at(v) = std::move(label); }

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return static_cast<int>(components().size()) == 1;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(n_, -1);
    int c = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj_[v])
                if (comp[u] == -1) {
                    comp[u] = c;
                    q.push(u);
                }
        }
        ++c;
    }
    std::vector<std::vector<int>> out(c);
    for (int v = 0; v < n_; ++v) out[comp[v]].push_back(v);
    return out;
}

std::vector<int> Graph::induced_order(const std::vector<int>& vertices) const {
    std::vector<int> pos(n_, -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;
    return pos;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    auto pos = induced_order(vertices);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_)
        if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    Graph g(static_cast<int>(vertices.size()), std::move(es));
    for (int i = 0; i < g.num_vertices(); ++i) g.set_label(i, labels_[vertices[i]]);
    return g;
}

std::vector<int> Graph::bfs_order() const {
    std::vector<int> order;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int u : adj_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
    }
    return order;
}

std::string Graph::to_text() const {
    std::ostringstream ss;
    ss << "p " << n_ << "\n";
    for (auto [u, v] : edges_) ss << "e " << u << " " << v << "\n";
    return ss.str();
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, std::move(es));
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.num_vertices(), v + a.num_vertices());
    return Graph(a.num_vertices() + b.num_vertices(), std::move(es));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "p") {
            if (n >= 0) throw ParseError("line " + std::to_string(lineno) + ": duplicate p line");
            if (!(ls >> n) || n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad vertex count");
        } else if (tok == "e") {
            int u, v;
            if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": edge before p line");
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": bad edge");
            if (u == v)
                throw ParseError("line " + std::to_string(lineno) + ": self-loop declared");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex index out of range");
            edges.emplace_back(u, v);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + tok + "'");
        }
    }
    if (n < 0) throw ParseError("missing p line");
    return Graph(n, std::move(edges));
}

bool Homomorphism::is_valid(const Graph& source, const Graph& target) const {
    if (static_cast<int>(map.size()) != source.num_vertices()) return false;
    for (int v : map)
        if (v < 0 || v >= target.num_vertices()) return false;
    for (auto [u, v] : source.edges())
        if (!target.has_edge(map[u], map[v])) return false;
    return true;
}

ColouredGraph::ColouredGraph(Graph graph, Graph pattern, std::vector<int> colouring)
    : graph_(std::move(graph)), pattern_(std::move(pattern)), colouring_(std::move(colouring)) {
    Homomorphism h{colouring_};
    if (!h.is_valid(graph_, pattern_))
        throw DomainError("colouring is not a homomorphism into the pattern");
}

std::vector<int> ColouredGraph::colour_class(int p) const {
    std::vector<int> out;
    for (int v = 0; v < graph_.num_vertices(); ++v)
        if (colouring_[v] == p) out.push_back(v);
    return out;
}

namespace {

// Shared backtracking counter. candidates[v] lists allowed images of v;
// traversal follows H's BFS order so each vertex after the first in a
// component has an already-assigned neighbour to prune against.
std::uint64_t count_maps(const Graph& H, const Graph& G,
                         const std::vector<std::vector<int>>& candidates,
                         std::uint64_t budget) {
    std::vector<int> order = H.bfs_order();
    int hn = H.num_vertices();
    std::vector<int> image(hn, -1);
    std::uint64_t count = 0;
    std::uint64_t visited = 0;

    // Precompute, for each position in the order, the already-placed
    // neighbours to check.
    std::vector<std::vector<int>> placed_nbrs(hn);
    {
        std::vector<int> pos(hn);
        for (int i = 0; i < hn; ++i) pos[order[i]] = i;
        for (int i = 0; i < hn; ++i)
            for (int u : H.neighbors(order[i]))
                if (pos[u] < i) placed_nbrs[i].push_back(u);
    }

    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == hn) {
            ++count;
            return;
        }
        int v = order[idx];
        for (int g : candidates[v]) {
            if (++visited > budget)
                throw BudgetExceededError("homomorphism count budget exceeded");
            bool ok = true;
            for (int u : placed_nbrs[idx])
                if (!G.has_edge(image[u], g)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[v] = g;
            self(self, idx + 1);
            image[v] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

std::uint64_t count_hom(const Graph& H, const Graph& G, std::uint64_t budget) {
    std::vector<int> all(G.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> candidates(H.num_vertices(), all);
    return count_maps(H, G, candidates, budget);
}

std::uint64_t count_hom_tau(const Graph& H, const ColouredGraph& G,
                            const std::vector<int>& tau, std::uint64_t budget) {
    Homomorphism t{tau};
    if (!t.is_valid(H, G.pattern()))
        throw DomainError("tau is not a homomorphism into the pattern");
    std::vector<std::vector<int>> candidates(H.num_vertices());
    for (int v = 0; v < H.num_vertices(); ++v) candidates[v] = G.colour_class(tau[v]);
    return count_maps(H, G.graph(), candidates, budget);
}

Graph tensor(const Graph& a, const Graph& b) {
    int nb = b.num_vertices();
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : a.edges())
        for (auto [x, y] : b.edges()) {
            es.emplace_back(u * nb + x, v * nb + y);
            es.emplace_back(u * nb + y, v * nb + x);
        }
    return Graph(a.num_vertices() * nb, std::move(es));
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v = u + 1; v < g.num_vertices(); ++v)
            if (!g.has_edge(u, v)) es.emplace_back(u, v);
    return Graph(g.num_vertices(), std::move(es));
}

std::vector<int> stable_vertex_colours(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> colour(n, 0);
    int classes = 1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(colour[u]);
            std::sort(nb.begin(), nb.end());
            keys[v] = {colour[v], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> ids;
        for (const auto& k : keys) ids.emplace(k, 0);
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = ids[keys[v]];
        if (next == classes && fresh == colour) break;
        colour = std::move(fresh);
        classes = next;
    }
    return colour;
}

namespace {

// Backtracking search for edge-preserving-and-reflecting bijections a -> b.
// visit(perm) returns true to stop the search.
template <typename Visit>
bool search_isomorphisms(const Graph& a, const Graph& b, std::uint64_t budget,
                         Visit&& visit) {
    int n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> ca = stable_vertex_colours(a);
    std::vector<int> cb = stable_vertex_colours(b);
    {
        std::vector<int> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::uint64_t visited = 0;
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return visit(map);
        for (int w = 0; w < n; ++w) {
            if (used[w] || ca[v] != cb[w] || a.degree(v) != b.degree(w)) continue;
            if (++visited > budget) throw BudgetExceededError("isomorphism search budget exceeded");
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[u], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b, std::vector<int>* witness,
                   std::uint64_t budget) {
    return search_isomorphisms(a, b, budget, [&](const std::vector<int>& map) {
        if (witness) *witness = map;
        return true;
    });
}

std::vector<std::vector<int>> automorphisms(const Graph& g, std::uint64_t budget) {
    std::vector<std::vector<int>> out;
    search_isomorphisms(g, g, budget, [&](const std::vector<int>& map) {
        out.push_back(map);
        return false;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cqwl
