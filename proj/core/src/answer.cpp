#include "cqwl/answer.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>

namespace cqwl {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Count X-assignments that admit an extension, with per-vertex candidate
// lists (empty list for a vertex means "any vertex of G").
std::uint64_t count_restricted(const ConjunctiveQuery& q, const Graph& G,
                               const std::vector<std::vector<int>>& x_cands,
                               const std::vector<std::vector<int>>& y_cands,
                               std::uint64_t budget,
                               std::vector<std::vector<int>>* collect) {
    int nh = q.H.num_vertices();
    int k = static_cast<int>(q.X.size());
    std::vector<int> assign(nh, -1);
    std::uint64_t visited = 0;
    auto tick = [&] {
        if (++visited > budget) throw BudgetExceededError("answer counting budget exceeded");
    };

    std::vector<int> y_order;
    for (int v : q.H.bfs_order())
        if (!q.is_free(v)) y_order.push_back(v);

    auto fits = [&](int v, int g) {
        for (int u : q.H.neighbors(v))
            if (assign[u] >= 0 && !G.has_edge(g, assign[u])) return false;
        return true;
    };

    auto extend = [&](auto&& self, size_t idx) -> bool {
        if (idx == y_order.size()) return true;
        int v = y_order[idx];
        const std::vector<int>& cands = y_cands[v];
        int m = cands.empty() ? G.num_vertices() : static_cast<int>(cands.size());
        for (int i = 0; i < m; ++i) {
            int g = cands.empty() ? i : cands[i];
            if (!fits(v, g)) continue;
            tick();
            assign[v] = g;
            if (self(self, idx + 1)) {
                assign[v] = -1;
                return true;
            }
            assign[v] = -1;
        }
        return false;
    };

    std::uint64_t count = 0;
    auto place = [&](auto&& self, int p) -> void {
        if (p == k) {
            if (extend(extend, 0)) {
                ++count;
                if (collect) {
                    std::vector<int> img(k);
                    for (int i = 0; i < k; ++i) img[i] = assign[q.X[i]];
                    collect->push_back(std::move(img));
                }
            }
            return;
        }
        int v = q.X[p];
        const std::vector<int>& cands = x_cands[p];
        int m = cands.empty() ? G.num_vertices() : static_cast<int>(cands.size());
        for (int i = 0; i < m; ++i) {
            int g = cands.empty() ? i : cands[i];
            if (!fits(v, g)) continue;
            tick();
            assign[v] = g;
            self(self, p + 1);
            assign[v] = -1;
        }
    };
    place(place, 0);
    return count;
}

std::vector<std::vector<int>> colour_classes(const Graph& G,
                                             const std::vector<int>& h_colouring,
                                             int num_pattern) {
    std::vector<std::vector<int>> cls(num_pattern);
    for (int g = 0; g < G.num_vertices(); ++g) {
        int c = h_colouring[g];
        if (c < 0 || c >= num_pattern) throw DomainError("colouring value out of range");
        cls[c].push_back(g);
    }
    return cls;
}

}  // namespace

std::uint64_t count_answers_tau(const ConjunctiveQuery& q, const Graph& G,
                                const std::vector<int>& h_colouring,
                                const std::vector<int>& tau, std::uint64_t budget) {
    if (static_cast<int>(h_colouring.size()) != G.num_vertices())
        throw DomainError("colouring size mismatch");
    if (tau.size() != q.X.size()) throw DomainError("tau must assign every free variable");
    auto cls = colour_classes(G, h_colouring, q.H.num_vertices());
    std::vector<std::vector<int>> x_cands(q.X.size());
    for (size_t p = 0; p < q.X.size(); ++p) {
        if (tau[p] < 0 || tau[p] >= q.H.num_vertices())
            throw DomainError("tau value out of range");
        x_cands[p] = cls[tau[p]];
        if (x_cands[p].empty()) return 0;
    }
    std::vector<std::vector<int>> y_cands(q.H.num_vertices());  // unrestricted
    return count_restricted(q, G, x_cands, y_cands, budget, nullptr);
}

std::uint64_t count_cp_answers(const ConjunctiveQuery& q, const Graph& G,
                               const std::vector<int>& h_colouring,
                               std::uint64_t budget) {
    if (static_cast<int>(h_colouring.size()) != G.num_vertices())
        throw DomainError("colouring size mismatch");
    auto cls = colour_classes(G, h_colouring, q.H.num_vertices());
    std::vector<std::vector<int>> x_cands(q.X.size());
    for (size_t p = 0; p < q.X.size(); ++p) {
        x_cands[p] = cls[q.X[p]];
        if (x_cands[p].empty()) return 0;
    }
    std::vector<std::vector<int>> y_cands(q.H.num_vertices());
    for (int v = 0; v < q.H.num_vertices(); ++v)
        if (!q.is_free(v)) {
            y_cands[v] = cls[v];
            if (y_cands[v].empty()) return 0;
        }
    return count_restricted(q, G, x_cands, y_cands, budget, nullptr);
}

std::vector<std::vector<int>> enumerate_cp_answers(const ConjunctiveQuery& q,
                                                   const Graph& G,
                                                   const std::vector<int>& h_colouring,
                                                   std::uint64_t budget) {
    if (static_cast<int>(h_colouring.size()) != G.num_vertices())
        throw DomainError("colouring size mismatch");
    auto cls = colour_classes(G, h_colouring, q.H.num_vertices());
    std::vector<std::vector<int>> x_cands(q.X.size());
    for (size_t p = 0; p < q.X.size(); ++p) x_cands[p] = cls[q.X[p]];
    std::vector<std::vector<int>> y_cands(q.H.num_vertices());
    for (int v = 0; v < q.H.num_vertices(); ++v)
        if (!q.is_free(v)) y_cands[v] = cls[v];
    std::vector<std::vector<int>> out;
    for (size_t p = 0; p < q.X.size(); ++p)
        if (x_cands[p].empty() && !cls[q.X[p]].empty()) return out;
    count_restricted(q, G, x_cands, y_cands, budget, &out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExtendableAssignment> enumerate_extendable(const ConjunctiveQuery& q,
                                                       const EllCopy& f,
                                                       const CfiGraph& chi) {
    if (chi.base.num_vertices() != f.F.num_vertices() || !(chi.base == f.F))
        throw DomainError("gadget graph was not built over this pattern");
    if (f.ell % 2 == 0) throw DomainError("ell must be odd");
    int k = static_cast<int>(q.X.size());
    for (int w : chi.odd_set)
        if (w >= k) throw DomainError("odd set must consist of free variables");
    bool x_meets_y = false;
    for (int p = 0; p < k && !x_meets_y; ++p)
        for (int u : q.H.neighbors(q.X[p]))
            if (!q.is_free(u)) {
                x_meets_y = true;
                break;
            }
    if (!q.existential_vars().empty() && !x_meets_y)
        throw DomainError("no free variable is adjacent to an existential one");

    // Gadget vertices over each free variable, in gadget-vertex order.
    std::vector<std::vector<int>> fibre(k);
    for (int v = 0; v < chi.result.num_vertices(); ++v)
        if (chi.base_vertex[v] < k) fibre[chi.base_vertex[v]].push_back(v);

    int nf = f.F.num_vertices();
    std::vector<std::pair<int, int>> x_edges;  // edges of F among X vertices
    for (auto [u, v] : f.F.edges())
        if (u < k && v < k) x_edges.emplace_back(u, v);

    std::vector<ExtendableAssignment> out;
    ExtendableAssignment cur;
    cur.phi.assign(k, -1);
    cur.sets.assign(k, {});
    std::vector<std::vector<char>> in_set(k, std::vector<char>(nf, 0));

    auto rec = [&](auto&& self, int p) -> void {
        if (p == k) {
            bool e1 = true;
            for (auto [a, b] : x_edges)
                if (in_set[a][b] != in_set[b][a]) {
                    e1 = false;
                    break;
                }
            bool e2 = true;
            std::vector<int> witness;
            for (const auto& copies : f.component_copies) {
                int good = -1;
                for (int j = 0; j < f.ell && good < 0; ++j) {
                    int sum = 0;
                    for (int pp = 0; pp < k; ++pp)
                        for (int fv : copies[j]) sum += in_set[pp][fv];
                    if (sum % 2 == 0) good = j;
                }
                witness.push_back(good);
                if (good < 0) e2 = false;
            }
            if (e1 && e2) {
                ExtendableAssignment a = cur;
                a.e1 = e1;
                a.e2 = e2;
                a.witness_copy = witness;
                out.push_back(std::move(a));
            }
            return;
        }
        for (int v : fibre[p]) {
            cur.phi[p] = v;
            cur.sets[p] = chi.subset_of(v);
            for (int fv : cur.sets[p]) in_set[p][fv] = 1;
            self(self, p + 1);
            for (int fv : cur.sets[p]) in_set[p][fv] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

bool ParityAssignment::validate(const Graph& g, const std::vector<int>& target_set) const {
    if (beta.size() != g.edges().size()) return false;
    std::vector<int> deg(g.num_vertices(), 0);
    for (size_t i = 0; i < beta.size(); ++i)
        if (beta[i]) {
            deg[g.edges()[i].first] += 1;
            deg[g.edges()[i].second] += 1;
        }
    std::vector<int> odd;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (deg[v] % 2) odd.push_back(v);
    std::vector<int> want(target_set);
    std::sort(want.begin(), want.end());
    return odd == want;
}

ParityAssignment parity_edge_assignment(const Graph& g,
                                        const std::vector<int>& target_set) {
    int n = g.num_vertices();
    if (n == 0) throw DomainError("empty graph");
    if (!g.is_connected()) throw DomainError("parity assignment needs a connected graph");
    if (target_set.size() % 2 != 0) throw DomainError("target set must have even size");
    std::set<int> need(target_set.begin(), target_set.end());
    if (need.size() != target_set.size()) throw DomainError("target set has duplicates");
    for (int v : target_set)
        if (v < 0 || v >= n) throw DomainError("target vertex out of range");

    std::map<std::pair<int, int>, int> edge_idx;
    for (size_t i = 0; i < g.edges().size(); ++i)
        edge_idx[g.edges()[i]] = static_cast<int>(i);
    auto idx_of = [&](int u, int v) {
        return edge_idx.at({std::min(u, v), std::max(u, v)});
    };

    ParityAssignment out;
    out.beta.assign(g.edges().size(), 0);

    // Peel off non-cutvertices one by one. A removed vertex needing odd
    // parity routes it through one surviving neighbour, flipping that
    // neighbour's demand; the last vertex is forced even by parity.
    std::vector<char> removed(n, 0);
    auto connected_without = [&](int skip) {
        int start = -1, remaining = 0;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && v != skip) {
                ++remaining;
                if (start < 0) start = v;
            }
        if (remaining <= 1) return true;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!removed[w] && w != skip && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == remaining;
    };

    for (int left = n; left > 1; --left) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!removed[v] && connected_without(v)) pick = v;
        if (need.count(pick)) {
            int u = -1;
            for (int w : g.neighbors(pick))
                if (!removed[w]) {
                    u = w;
                    break;
                }
            out.beta[idx_of(pick, u)] = 1;
            need.erase(pick);
            if (!need.insert(u).second) need.erase(u);
        }
        removed[pick] = 1;
    }
    if (!need.empty()) throw DomainError("parity assignment construction failed");
    if (!out.validate(g, target_set)) throw DomainError("parity assignment invalid");
    return out;
}

Homomorphism extend_assignment(const ExtendableAssignment& phi,
                               const ConjunctiveQuery& q, const EllCopy& f,
                               const CfiGraph& chi) {
    int k = static_cast<int>(q.X.size());
    if (static_cast<int>(phi.phi.size()) != k || static_cast<int>(phi.sets.size()) != k)
        throw DomainError("assignment size mismatch");
    int nf = f.F.num_vertices();
    std::vector<std::vector<char>> in_set(k, std::vector<char>(nf, 0));
    for (int p = 0; p < k; ++p)
        for (int fv : phi.sets[p]) in_set[p][fv] = 1;

    // Recheck (E1).
    for (auto [u, v] : f.F.edges())
        if (u < k && v < k && in_set[u][v] != in_set[v][u])
            throw DomainError("assignment is not extendable (edge condition)");
    // Recheck (E2), recording a witness copy per component.
    std::vector<int> pick;
    for (const auto& copies : f.component_copies) {
        int good = -1;
        for (int j = 0; j < f.ell && good < 0; ++j) {
            int sum = 0;
            for (int p = 0; p < k; ++p)
                for (int fv : copies[j]) sum += in_set[p][fv];
            if (sum % 2 == 0) good = j;
        }
        if (good < 0) throw DomainError("assignment is not extendable (parity condition)");
        pick.push_back(good);
    }

    Homomorphism h;
    h.map.assign(q.H.num_vertices(), -1);
    for (int p = 0; p < k; ++p) h.map[q.X[p]] = phi.phi[p];

    std::vector<int> Y = q.existential_vars();
    Graph hy = q.H.induced(Y);
    auto comps = hy.components();
    for (size_t i = 0; i < comps.size(); ++i) {
        const std::vector<int>& comp = comps[i];  // local indices into Y
        int j = pick[i];
        const std::vector<int>& copy = f.component_copies[i][j];  // aligned with comp
        int m = static_cast<int>(comp.size());

        // Free-variable part of each S, read off from phi.
        std::vector<std::vector<int>> t_x(m);
        std::vector<int> odd_local;
        for (int s = 0; s < m; ++s) {
            for (int p = 0; p < k; ++p)
                if (in_set[p][copy[s]]) t_x[s].push_back(f.x_in_f[p]);
            if (t_x[s].size() % 2) odd_local.push_back(s);
        }

        // Route the odd demands through the component itself.
        std::vector<int> local_ids(comp.begin(), comp.end());
        Graph comp_graph = hy.induced(local_ids);
        ParityAssignment beta = parity_edge_assignment(comp_graph, odd_local);

        for (int s = 0; s < m; ++s) {
            std::vector<int> S = t_x[s];
            for (size_t e = 0; e < comp_graph.edges().size(); ++e) {
                if (!beta.beta[e]) continue;
                auto [a, b] = comp_graph.edges()[e];
                if (a == s) S.push_back(copy[b]);
                else if (b == s) S.push_back(copy[a]);
            }
            std::sort(S.begin(), S.end());
            int v = chi.vertex_of(copy[s], S);
            if (v < 0) throw DomainError("constructed subset missing from gadget");
            h.map[Y[comp[s]]] = v;
        }
    }

    // Sanity: the result must be a homomorphism hitting the prescribed fibres.
    for (auto [u, v] : q.H.edges())
        if (!chi.result.has_edge(h.map[u], h.map[v]))
            throw DomainError("extension construction produced a non-homomorphism");
    for (int v = 0; v < q.H.num_vertices(); ++v)
        if (f.gamma[chi.base_vertex[h.map[v]]] != v)
            throw DomainError("extension construction left the prescribed fibre");
    return h;
}

std::uint64_t ans_via_interpolation(const ConjunctiveQuery& q, const Graph& G,
                                    std::uint64_t max_nhat, std::uint64_t budget) {
    if (G.num_vertices() == 0) return q.X.empty() && q.H.num_vertices() == 0 ? 1 : 0;
    size_t ny = q.existential_vars().size();
    std::uint64_t nhat = 1;
    for (size_t i = 0; i < ny; ++i) {
        nhat *= static_cast<std::uint64_t>(G.num_vertices());
        if (nhat > max_nhat)
            throw BudgetExceededError("interpolation system too large (|V(G)|^|Y| > " +
                                      std::to_string(max_nhat) + ")");
    }
    int n = static_cast<int>(nhat);

    // b[l-1] = |Hom(F_l, G)| = sum_i c_i * i^l, where c_i counts the
    // X-assignments with exactly i extensions.
    std::vector<cpp_rational> b(n);
    for (int l = 1; l <= n; ++l)
        b[l - 1] = cpp_rational(count_hom(ell_copy(q, l).F, G, budget));

    std::vector<std::vector<cpp_rational>> A(n, std::vector<cpp_rational>(n));
    for (int l = 1; l <= n; ++l)
        for (int i = 1; i <= n; ++i)
            A[l - 1][i - 1] = cpp_rational(boost::multiprecision::pow(cpp_int(i), l));

    // Gaussian elimination over exact rationals.
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw DomainError("singular interpolation system");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            cpp_rational factor = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
            b[r] -= factor * b[col];
        }
    }
    cpp_rational total = 0;
    for (int i = 0; i < n; ++i) total += b[i] / A[i][i];
    if (boost::multiprecision::denominator(total) != 1 || total < 0)
        throw DomainError("interpolation produced a non-natural answer count");
    cpp_int num = boost::multiprecision::numerator(total);
    return num.convert_to<std::uint64_t>();
}

std::vector<int> cfi_h_colouring(const EllCopy& f, const CfiGraph& chi) {
    std::vector<int> out(chi.result.num_vertices());
    for (int v = 0; v < chi.result.num_vertices(); ++v)
        out[v] = f.gamma[chi.base_vertex[v]];
    return out;
}

}  // namespace cqwl
