#include "cqwl/query.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cqwl {

std::vector<int> ConjunctiveQuery::existential_vars() const {
    std::vector<char> free(H.num_vertices(), 0);
    for (int x : X) free[x] = 1;
    std::vector<int> out;
    for (int v = 0; v < H.num_vertices(); ++v)
        if (!free[v]) out.push_back(v);
    return out;
}

bool ConjunctiveQuery::is_free(int v) const {
    return std::find(X.begin(), X.end(), v) != X.end();
}

std::string ConjunctiveQuery::to_dsl() const {
    auto name = [&](int v) {
        if (v < static_cast<int>(var_names.size()) && !var_names[v].empty())
            return var_names[v];
        return "v" + std::to_string(v);
    };
    std::ostringstream ss;
    ss << "q(";
    for (size_t i = 0; i < X.size(); ++i) ss << (i ? "," : "") << name(X[i]);
    ss << ") :- ";
    bool first = true;
    for (auto [u, v] : H.edges()) {
        ss << (first ? "" : ", ") << "E(" << name(u) << "," << name(v) << ")";
        first = false;
    }
    return ss.str();
}

namespace {

struct Tokenizer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!eat(tok))
            throw ParseError("query syntax error at position " + std::to_string(pos) +
                             ": expected '" + tok + "'");
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])))) {
            ++pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (start == pos)
            throw ParseError("query syntax error at position " + std::to_string(pos) +
                             ": expected identifier");
        return s.substr(start, pos - start);
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
};

}  // namespace

ConjunctiveQuery parse_query(const std::string& text) {
    Tokenizer t{text};
    t.ident();  // query name, ignored
    t.expect("(");
    std::vector<std::string> head;
    head.push_back(t.ident());
    while (t.eat(",")) head.push_back(t.ident());
    t.expect(")");
    t.expect(":-");

    std::map<std::string, int> id;
    std::vector<std::string> names;
    auto vertex = [&](const std::string& name) {
        auto it = id.find(name);
        if (it != id.end()) return it->second;
        int v = static_cast<int>(names.size());
        id.emplace(name, v);
        names.push_back(name);
        return v;
    };
    for (const auto& h : head) {
        if (id.count(h)) throw ParseError("duplicate head variable '" + h + "'");
        vertex(h);
    }

    std::vector<std::pair<int, int>> edges;
    do {
        t.expect("E");
        t.expect("(");
        std::string a = t.ident();
        t.expect(",");
        std::string b = t.ident();
        t.expect(")");
        if (a == b) throw ParseError("self-loop atom E(" + a + "," + b + ")");
        edges.emplace_back(vertex(a), vertex(b));
    } while (t.eat(","));
    if (!t.done())
        throw ParseError("query syntax error: trailing input at position " +
                         std::to_string(t.pos));

    Graph H(static_cast<int>(names.size()), std::move(edges));
    for (const auto& h : head)
        if (H.degree(id[h]) == 0)
            throw ParseError("isolated variable '" + h + "': must appear in some atom");

    ConjunctiveQuery q;
    q.H = std::move(H);
    for (size_t i = 0; i < head.size(); ++i) q.X.push_back(static_cast<int>(i));
    q.var_names = std::move(names);
    return q;
}

bool is_connected(const ConjunctiveQuery& q) { return q.H.is_connected(); }

namespace {

// Does the partial X-assignment extend to a full homomorphism? Backtracks
// over the existential vertices in BFS order; stops at the first extension.
bool has_extension(const ConjunctiveQuery& q, const Graph& G, std::vector<int>& image,
                   const std::vector<int>& y_order, std::uint64_t& visited,
                   std::uint64_t budget) {
    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == y_order.size()) return true;
        int v = y_order[idx];
        for (int g = 0; g < G.num_vertices(); ++g) {
            if (++visited > budget) throw BudgetExceededError("answer count budget exceeded");
            bool ok = true;
            for (int u : q.H.neighbors(v))
                if (image[u] >= 0 && !G.has_edge(image[u], g)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[v] = g;
            if (self(self, idx + 1)) {
                image[v] = -1;
                return true;
            }
            image[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

std::uint64_t count_answers(const ConjunctiveQuery& q, const Graph& G,
                            std::uint64_t budget) {
    std::vector<int> y_order;
    {
        std::vector<char> free(q.H.num_vertices(), 0);
        for (int x : q.X) free[x] = 1;
        for (int v : q.H.bfs_order())
            if (!free[v]) y_order.push_back(v);
    }
    std::vector<int> image(q.H.num_vertices(), -1);
    std::uint64_t count = 0;
    std::uint64_t visited = 0;

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == q.X.size()) {
            if (has_extension(q, G, image, y_order, visited, budget)) ++count;
            return;
        }
        int v = q.X[idx];
        for (int g = 0; g < G.num_vertices(); ++g) {
            if (++visited > budget) throw BudgetExceededError("answer count budget exceeded");
            bool ok = true;
            for (size_t j = 0; j < idx; ++j)
                if (q.H.has_edge(q.X[j], v) && !G.has_edge(image[q.X[j]], g)) {
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

namespace {

// First (in deterministic search order) endomorphism of H that maps X
// bijectively onto X and is not injective on V(H); empty if none exists.
std::vector<int> find_folding_endomorphism(const ConjunctiveQuery& q,
                                           std::uint64_t budget) {
    const Graph& H = q.H;
    int n = H.num_vertices();
    std::vector<char> free(n, 0);
    for (int x : q.X) free[x] = 1;
    std::vector<int> order = H.bfs_order();
    std::vector<int> image(n, -1);
    std::vector<char> x_used(n, 0);
    std::uint64_t visited = 0;
    std::vector<int> found;

    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == order.size()) {
            std::set<int> im(image.begin(), image.end());
            if (static_cast<int>(im.size()) < n) {
                found = image;
                return true;
            }
            return false;  // bijective endomorphism: an automorphism, keep looking
        }
        int v = order[idx];
        for (int g = 0; g < n; ++g) {
            if (free[v] && (!free[g] || x_used[g])) continue;
            if (++visited > budget) throw BudgetExceededError("minimization budget exceeded");
            bool ok = true;
            for (int u : H.neighbors(v))
                if (image[u] >= 0 && !H.has_edge(image[u], g)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[v] = g;
            if (free[v]) x_used[g] = 1;
            if (self(self, idx + 1)) return true;
            if (free[v]) x_used[g] = 0;
            image[v] = -1;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

}  // namespace

ConjunctiveQuery minimize(const ConjunctiveQuery& q, std::uint64_t budget) {
    ConjunctiveQuery cur = q;
    while (true) {
        std::vector<int> h = find_folding_endomorphism(cur, budget);
        if (h.empty()) break;
        // Image subgraph h(H), relabelled densely in ascending vertex order.
        std::vector<int> img_vertices(h.begin(), h.end());
        std::sort(img_vertices.begin(), img_vertices.end());
        img_vertices.erase(std::unique(img_vertices.begin(), img_vertices.end()),
                           img_vertices.end());
        std::vector<int> newid(cur.H.num_vertices(), -1);
        for (size_t i = 0; i < img_vertices.size(); ++i)
            newid[img_vertices[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : cur.H.edges()) es.emplace_back(newid[h[u]], newid[h[v]]);
        ConjunctiveQuery next;
        next.H = Graph(static_cast<int>(img_vertices.size()), std::move(es));
        for (int x : cur.X) next.X.push_back(newid[h[x]]);
        for (int v : img_vertices) {
            if (v < static_cast<int>(cur.var_names.size()))
                next.var_names.push_back(cur.var_names[v]);
            else
                next.var_names.push_back("");
        }
        cur = std::move(next);
    }
    return cur;
}

bool queries_isomorphic(const ConjunctiveQuery& a, const ConjunctiveQuery& b,
                        std::uint64_t budget) {
    if (a.X.size() != b.X.size()) return false;
    if (a.H.num_vertices() != b.H.num_vertices()) return false;
    // Mark free variables with a pendant-free trick: search isomorphisms of H
    // and require X to map onto X.
    std::set<int> xb(b.X.begin(), b.X.end());
    std::vector<int> witness;
    // Enumerate all isomorphisms until one respects X. Reuse automorphism-style
    // search via repeated is_isomorphic would only give one witness, so do a
    // direct search here.
    bool found = false;
    std::vector<int> map(a.H.num_vertices(), -1);
    std::vector<char> used(b.H.num_vertices(), 0);
    std::set<int> xa(a.X.begin(), a.X.end());
    std::uint64_t visited = 0;
    int n = a.H.num_vertices();
    if (a.H.num_edges() != b.H.num_edges()) return false;
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || a.H.degree(v) != b.H.degree(w)) continue;
            if (xa.count(v) != static_cast<size_t>(xb.count(w))) continue;
            if (++visited > budget)
                throw BudgetExceededError("query isomorphism budget exceeded");
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (a.H.has_edge(u, v) != b.H.has_edge(map[u], w)) {
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
    found = rec(rec, 0);
    return found;
}

bool is_counting_equivalent(const ConjunctiveQuery& a, const ConjunctiveQuery& b,
                            std::uint64_t budget) {
    return queries_isomorphic(minimize(a, budget), minimize(b, budget), budget);
}

PartialAutomorphismSet partial_automorphisms(const ConjunctiveQuery& q,
                                             std::uint64_t budget) {
    std::set<int> xs(q.X.begin(), q.X.end());
    std::vector<int> pos_in_x(q.H.num_vertices(), -1);
    for (size_t i = 0; i < q.X.size(); ++i) pos_in_x[q.X[i]] = static_cast<int>(i);
    std::set<std::vector<int>> maps;
    for (const auto& a : automorphisms(q.H, budget)) {
        bool preserves = true;
        for (int x : q.X)
            if (!xs.count(a[x])) {
                preserves = false;
                break;
            }
        if (!preserves) continue;
        std::vector<int> restriction(q.X.size());
        for (size_t i = 0; i < q.X.size(); ++i) restriction[i] = pos_in_x[a[q.X[i]]];
        maps.insert(std::move(restriction));
    }
    PartialAutomorphismSet out;
    out.X = q.X;
    out.maps.assign(maps.begin(), maps.end());
    return out;
}

ConjunctiveQuery star_query(int k) {
    if (k < 1) throw DomainError("star query needs k >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, k);  // centre is vertex k
    ConjunctiveQuery q;
    q.H = Graph(k + 1, std::move(es));
    for (int i = 0; i < k; ++i) q.X.push_back(i);
    for (int i = 0; i < k; ++i) q.var_names.push_back("x" + std::to_string(i + 1));
    q.var_names.push_back("y");
    return q;
}

}  // namespace cqwl
