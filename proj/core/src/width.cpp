#include "cqwl/width.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cqwl {

bool TreeDecomposition::validate(const Graph& g) const {
    int t = tree.num_vertices();
    if (static_cast<int>(bags.size()) != t) return false;
    if (t == 0) return g.num_vertices() == 0;
    if (!tree.is_connected() || tree.num_edges() != t - 1) return false;

    // (T1) every vertex in some bag, and (T2) the bags containing it form a
    // connected subtree.
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> holding;
        for (int b = 0; b < t; ++b)
            if (std::binary_search(bags[b].begin(), bags[b].end(), v)) holding.push_back(b);
        if (holding.empty()) return false;
        std::set<int> hs(holding.begin(), holding.end());
        std::queue<int> q;
        std::set<int> seen;
        q.push(holding[0]);
        seen.insert(holding[0]);
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int c : tree.neighbors(b))
                if (hs.count(c) && !seen.count(c)) {
                    seen.insert(c);
                    q.push(c);
                }
        }
        if (seen.size() != hs.size()) return false;
    }
    // (T3) every edge inside some bag.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int b = 0; b < t && !covered; ++b)
            covered = std::binary_search(bags[b].begin(), bags[b].end(), u) &&
                      std::binary_search(bags[b].begin(), bags[b].end(), v);
        if (!covered) return false;
    }
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w == width;
}

std::string TreeDecomposition::to_json() const {
    std::ostringstream ss;
    ss << "{\"width\":" << width << ",\"bags\":[";
    for (size_t b = 0; b < bags.size(); ++b) {
        ss << (b ? "," : "") << "[";
        for (size_t i = 0; i < bags[b].size(); ++i) ss << (i ? "," : "") << bags[b][i];
        ss << "]";
    }
    ss << "],\"treeEdges\":[";
    for (size_t i = 0; i < tree.edges().size(); ++i) {
        auto [u, v] = tree.edges()[i];
        ss << (i ? "," : "") << "[" << u << "," << v << "]";
    }
    ss << "]}";
    return ss.str();
}

namespace {

// Elimination degree of v once the vertex set `eliminated` (mask) is gone:
// vertices outside eliminated+{v} reachable from v through eliminated ones.
int elimination_degree(const Graph& g, int v, std::uint64_t eliminated) {
    std::uint64_t seen = 1ULL << v;
    std::vector<int> stack{v};
    int deg = 0;
    std::uint64_t reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            std::uint64_t bit = 1ULL << w;
            if (eliminated & bit) {
                if (!(seen & bit)) {
                    seen |= bit;
                    stack.push_back(w);
                }
            } else if (w != v && !(reached & bit)) {
                reached |= bit;
                ++deg;
            }
        }
    }
    return deg;
}

struct TwSolver {
    const Graph& g;
    int n;
    std::unordered_map<std::uint64_t, int> memo;

    // Best achievable max elimination degree for the rest of the ordering,
    // given the already-eliminated mask.
    int best(std::uint64_t eliminated) {
        std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        if (eliminated == all) return -1;
        auto it = memo.find(eliminated);
        if (it != memo.end()) return it->second;
        int result = n;  // upper bound; degree never exceeds n-1
        for (int v = 0; v < n; ++v) {
            if (eliminated & (1ULL << v)) continue;
            int d = elimination_degree(g, v, eliminated);
            if (d >= result) continue;  // cannot improve
            int rest = best(eliminated | (1ULL << v));
            result = std::min(result, std::max(d, rest));
        }
        memo.emplace(eliminated, result);
        return result;
    }
};

}  // namespace

std::pair<int, TreeDecomposition> treewidth(const Graph& g, int cap) {
    int n = g.num_vertices();
    if (n > cap || n > 62)
        throw BudgetExceededError("graph too large for exact treewidth solver (" +
                                  std::to_string(n) + " vertices, cap " +
                                  std::to_string(cap) + ")");
    if (n == 0) {
        TreeDecomposition td;
        td.tree = Graph(1);
        td.bags = {{}};
        td.width = -1;
        return {-1, td};
    }

    TwSolver solver{g, n, {}};
    int tw = solver.best(0);

    // Lexicographically smallest optimal elimination ordering.
    std::vector<int> order;
    std::uint64_t eliminated = 0;
    for (int step = 0; step < n; ++step) {
        for (int v = 0; v < n; ++v) {
            if (eliminated & (1ULL << v)) continue;
            int d = elimination_degree(g, v, eliminated);
            if (d <= tw && solver.best(eliminated | (1ULL << v)) <= tw) {
                order.push_back(v);
                eliminated |= 1ULL << v;
                break;
            }
        }
    }

    // Build the decomposition by simulating the elimination with fill-in.
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> elim_pos(n);
    for (int i = 0; i < n; ++i) elim_pos[order[i]] = i;
    std::vector<std::vector<int>> bags(n);
    std::vector<std::pair<int, int>> tree_edges;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> nbrs(adj[v].begin(), adj[v].end());
        bags[i] = nbrs;
        bags[i].push_back(v);
        std::sort(bags[i].begin(), bags[i].end());
        if (!nbrs.empty()) {
            int next = *std::min_element(nbrs.begin(), nbrs.end(), [&](int a, int b) {
                return elim_pos[a] < elim_pos[b];
            });
            tree_edges.emplace_back(i, elim_pos[next]);
        } else if (i + 1 < n) {
            tree_edges.emplace_back(i, i + 1);  // keep disconnected pieces attached
        }
        for (int a : nbrs)
            for (int b : nbrs)
                if (a != b) adj[a].insert(b);
        for (int a : nbrs) adj[a].erase(v);
        adj[v].clear();
    }

    TreeDecomposition td;
    td.tree = Graph(n, std::move(tree_edges));
    td.bags = std::move(bags);
    td.width = tw;
    return {tw, td};
}

Graph extension_graph(const ConjunctiveQuery& q) {
    std::vector<int> Y = q.existential_vars();
    Graph hy = q.H.induced(Y);
    std::vector<std::pair<int, int>> es = q.H.edges();
    for (const auto& comp : hy.components()) {
        std::set<int> boundary;  // X-vertices adjacent to this component
        for (int local : comp) {
            int y = Y[local];
            for (int u : q.H.neighbors(y))
                if (q.is_free(u)) boundary.insert(u);
        }
        for (auto it = boundary.begin(); it != boundary.end(); ++it)
            for (auto jt = std::next(it); jt != boundary.end(); ++jt)
                es.emplace_back(*it, *jt);
    }
    return Graph(q.H.num_vertices(), std::move(es));
}

int extension_width(const ConjunctiveQuery& q, int cap) {
    return treewidth(extension_graph(q), cap).first;
}

Graph contract_graph(const ConjunctiveQuery& q) {
    return extension_graph(q).induced(q.X);
}

EllCopy ell_copy(const ConjunctiveQuery& q, int ell) {
    if (ell < 1) throw DomainError("ell must be positive");
    std::vector<int> Y = q.existential_vars();
    int k = static_cast<int>(q.X.size());
    int ny = static_cast<int>(Y.size());

    EllCopy out;
    out.ell = ell;
    int nf = k + ny * ell;
    std::vector<int> x_id(q.H.num_vertices(), -1), y_idx(q.H.num_vertices(), -1);
    for (int i = 0; i < k; ++i) x_id[q.X[i]] = i;
    for (int i = 0; i < ny; ++i) y_idx[Y[i]] = i;
    auto copy_id = [&](int y, int j) { return k + j * ny + y_idx[y]; };  // j is 0-based

    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : q.H.edges()) {
        bool uf = x_id[u] >= 0, vf = x_id[v] >= 0;
        if (uf && vf) {
            es.emplace_back(x_id[u], x_id[v]);
        } else if (uf || vf) {
            int x = uf ? u : v, y = uf ? v : u;
            for (int j = 0; j < ell; ++j) es.emplace_back(x_id[x], copy_id(y, j));
        } else {
            for (int j = 0; j < ell; ++j) es.emplace_back(copy_id(u, j), copy_id(v, j));
        }
    }
    out.F = Graph(nf, std::move(es));
    out.gamma.assign(nf, -1);
    for (int i = 0; i < k; ++i) {
        out.gamma[i] = q.X[i];
        out.x_in_f.push_back(i);
        std::string nm = (q.X[i] < static_cast<int>(q.var_names.size()) &&
                          !q.var_names[q.X[i]].empty())
                             ? q.var_names[q.X[i]]
                             : "x" + std::to_string(q.X[i]);
        out.F.set_label(i, nm);
    }
    for (int j = 0; j < ell; ++j)
        for (int i = 0; i < ny; ++i) {
            int f = copy_id(Y[i], j);
            out.gamma[f] = Y[i];
            out.F.set_label(f, "(" + std::to_string(Y[i]) + "," + std::to_string(j + 1) + ")");
        }

    Graph hy = q.H.induced(Y);
    for (const auto& comp : hy.components()) {
        std::vector<std::vector<int>> copies(ell);
        for (int j = 0; j < ell; ++j)
            for (int local : comp) copies[j].push_back(copy_id(Y[local], j));
        out.component_copies.push_back(std::move(copies));
    }
    return out;
}

int semantic_extension_width(const ConjunctiveQuery& q, int cap, std::uint64_t budget) {
    return extension_width(minimize(q, budget), cap);
}

int choose_witness_ell(const ConjunctiveQuery& q, int cap) {
    int target = extension_width(q, cap);
    for (int ell = 1; ell <= q.H.num_vertices() + 3; ell += 2) {
        if (treewidth(ell_copy(q, ell).F, cap).first == target) return ell;
    }
    throw DomainError("no odd ell up to |V(H)|+3 reaches the extension width");
}

}  // namespace cqwl
