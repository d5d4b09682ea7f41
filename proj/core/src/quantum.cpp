#include "cqwl/quantum.hpp"

#include <algorithm>
#include <sstream>

namespace cqwl {

namespace {

using boost::multiprecision::cpp_int;

// Signed Stirling-style coefficients: c[m] = sum over set partitions of [k]
// with m blocks of prod_B (-1)^(|B|-1) * (|B|-1)!.
std::vector<cpp_int> partition_coefficients(int k) {
    std::vector<cpp_int> c(k + 1, 0);
    std::vector<int> block_of(k, -1);
    std::vector<int> block_size;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            cpp_int w = 1;
            for (int s : block_size) {
                cpp_int f = 1;
                for (int t = 2; t < s; ++t) f *= t;
                w *= (s % 2 == 0) ? -f : f;  // (-1)^(s-1) * (s-1)!
            }
            c[block_size.size()] += w;
            return;
        }
        for (size_t b = 0; b < block_size.size(); ++b) {
            block_of[i] = static_cast<int>(b);
            ++block_size[b];
            self(self, i + 1);
            --block_size[b];
        }
        block_of[i] = static_cast<int>(block_size.size());
        block_size.push_back(1);
        self(self, i + 1);
        block_size.pop_back();
    };
    rec(rec, 0);
    return c;
}

}  // namespace

QuantumQuery normalize_quantum(const std::vector<QuantumTerm>& raw,
                               std::uint64_t budget) {
    QuantumQuery out;
    for (const QuantumTerm& t : raw) {
        if (t.coeff == 0) continue;
        if (!is_connected(t.query))
            throw DomainError("quantum constituent must be connected");
        if (t.query.X.empty())
            throw DomainError("quantum constituent must have free variables");
        ConjunctiveQuery core = minimize(t.query, budget);
        bool merged = false;
        for (QuantumTerm& have : out.terms)
            if (queries_isomorphic(have.query, core, budget)) {
                have.coeff += t.coeff;
                merged = true;
                break;
            }
        if (!merged) out.terms.push_back({t.coeff, std::move(core)});
    }
    std::erase_if(out.terms, [](const QuantumTerm& t) { return t.coeff == 0; });
    return out;
}

Rational eval_quantum(const QuantumQuery& q, const Graph& G, std::uint64_t budget) {
    Rational total = 0;
    for (const QuantumTerm& t : q.terms)
        total += t.coeff * Rational(count_answers(t.query, G, budget));
    return total;
}

int hsew(const QuantumQuery& q, int cap, std::uint64_t budget) {
    if (q.terms.empty()) throw DomainError("hsew of an empty quantum query");
    int best = 0;
    for (const QuantumTerm& t : q.terms)
        best = std::max(best, semantic_extension_width(t.query, cap, budget));
    return best;
}

std::uint64_t count_injective_star(int k, const Graph& G, std::uint64_t budget) {
    if (k < 1) throw DomainError("k must be positive");
    std::vector<cpp_int> c = partition_coefficients(k);
    cpp_int total = 0;
    for (int m = 1; m <= k; ++m) {
        if (c[m] == 0) continue;
        total += c[m] * cpp_int(count_answers(star_query(m), G, budget));
    }
    if (total < 0) throw DomainError("negative injective count (bug)");
    return total.convert_to<std::uint64_t>();
}

std::uint64_t count_dominating_sets(int k, const Graph& G, std::uint64_t budget) {
    if (k < 1) throw DomainError("k must be positive");
    int n = G.num_vertices();
    cpp_int binom = 1;
    for (int i = 0; i < k; ++i) {
        binom *= n - i;
        binom /= i + 1;  // exact: product of j consecutive ints divisible by j!
    }
    if (k > n) binom = 0;
    cpp_int inj = count_injective_star(k, complement(G), budget);
    cpp_int fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    if (inj % fact != 0)
        throw DomainError("injective star count not divisible by k! (bug)");
    cpp_int result = binom - inj / fact;
    if (result < 0) throw DomainError("negative dominating-set count (bug)");
    return result.convert_to<std::uint64_t>();
}

std::vector<QuantumTerm> parse_quantum(const std::string& text) {
    std::vector<QuantumTerm> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        size_t bar = line.find('|');
        if (bar == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'coeff | query'");
        std::string coeff_str = line.substr(0, bar);
        std::string query_str = line.substr(bar + 1);
        auto strip = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        coeff_str = strip(coeff_str);
        QuantumTerm term;
        try {
            term.coeff = Rational(coeff_str);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": bad coefficient '" + coeff_str + "'");
        }
        term.query = parse_query(strip(query_str));
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace cqwl
