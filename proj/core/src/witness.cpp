#include "cqwl/witness.hpp"

#include <algorithm>
#include <json.hpp>

#include "cqwl/cfi.hpp"

namespace cqwl {

namespace {

using nlohmann::json;

std::uint64_t answers_on(const ConjunctiveQuery& q, const Graph& g,
                         std::uint64_t budget) {
    return count_answers(q, g, budget);
}

bool wl_check_at(const Graph& g1, const Graph& g2, int k) {
    // Treewidth-0 connected patterns are single vertices, so 0-dimensional
    // equivalence degenerates to equal vertex counts.
    if (k <= 0) return g1.num_vertices() == g2.num_vertices();
    return wl_equivalent(g1, g2, k);
}

}  // namespace

int wl_dimension(const ConjunctiveQuery& q, int cap, std::uint64_t budget) {
    if (!is_connected(q)) throw DomainError("query must be connected");
    if (q.X.empty()) throw DomainError("query must have at least one free variable");
    return semantic_extension_width(q, cap, budget);
}

WitnessCertificate build_witness(const ConjunctiveQuery& q, int cap,
                                 int max_pattern, std::uint64_t budget) {
    if (!is_connected(q)) throw DomainError("query must be connected");
    if (q.X.empty()) throw DomainError("query must have at least one free variable");

    WitnessCertificate cert;
    cert.original = q;
    cert.minimized = minimize(q, budget);
    const ConjunctiveQuery& qm = cert.minimized;
    int k = extension_width(qm, cap);
    cert.sew = k;
    cert.hom_indist_max_pattern = max_pattern;

    std::vector<int> Y = qm.existential_vars();
    if (Y.empty()) {
        // Counting-minimal full query: gadgets over H itself.
        cert.full_query = true;
        cert.g1 = cfi(qm.H, {}).result;
        cert.g2 = cfi(qm.H, {0}).result;
        cert.count1 = answers_on(qm, cert.g1, budget);
        cert.count2 = answers_on(qm, cert.g2, budget);
    } else {
        cert.ell = choose_witness_ell(qm, cap);
        EllCopy f = ell_copy(qm, cert.ell);
        int k_vars = static_cast<int>(qm.X.size());

        // Lowest-indexed free variable adjacent to an existential one.
        int x1 = -1;
        for (int p = 0; p < k_vars && x1 < 0; ++p)
            for (int u : qm.H.neighbors(qm.X[p]))
                if (!qm.is_free(u)) {
                    x1 = p;
                    break;
                }
        if (x1 < 0) throw DomainError("no free variable is adjacent to an existential one");

        CfiGraph chi0 = cfi(f.F, {});
        CfiGraph chi1 = cfi(f.F, {f.x_in_f[x1]});
        cert.g1 = chi0.result;
        cert.g2 = chi1.result;
        cert.z.assign(k_vars, 1);
        cert.count1 = answers_on(qm, cert.g1, budget);
        cert.count2 = answers_on(qm, cert.g2, budget);

        if (cert.count1 == cert.count2) {
            // The identity-coloured gap is strict, so some multiplicity
            // vector separates the plain counts. Lexicographic search with
            // a doubling cap; entries start bounded by k+1.
            CloneSpec spec;
            spec.block_vertices = f.x_in_f;
            bool found = false;
            for (int cap_z = k_vars + 1; !found; cap_z *= 2) {
                if (cap_z > 4096)
                    throw BudgetExceededError("clone multiplicity search exhausted");
                std::vector<int> zv(k_vars, 1);
                auto advance = [&] {
                    for (int i = k_vars - 1; i >= 0; --i) {
                        if (zv[i] < cap_z) {
                            ++zv[i];
                            std::fill(zv.begin() + i + 1, zv.end(), 1);
                            return true;
                        }
                    }
                    return false;
                };
                while (advance()) {
                    if (*std::max_element(zv.begin(), zv.end()) <= cap_z / 2 &&
                        cap_z > k_vars + 1)
                        continue;  // already tried under the smaller cap
                    spec.multiplicities = zv;
                    Graph c1 = clone_blocks(chi0.coloured(), spec).coloured.graph();
                    Graph c2 = clone_blocks(chi1.coloured(), spec).coloured.graph();
                    std::uint64_t n1 = answers_on(qm, c1, budget);
                    std::uint64_t n2 = answers_on(qm, c2, budget);
                    if (n1 != n2) {
                        cert.z = zv;
                        cert.g1 = std::move(c1);
                        cert.g2 = std::move(c2);
                        cert.count1 = n1;
                        cert.count2 = n2;
                        found = true;
                        break;
                    }
                }
            }
        }
    }

    cert.wl_equivalent_km1 = wl_check_at(cert.g1, cert.g2, k - 1);
    HomIndistVerdict verdict =
        hom_indist_oracle(cert.g1, cert.g2, std::max(k - 1, 0), max_pattern, budget);
    cert.hom_indist_equal = !verdict.distinguished;

    if (cert.count1 == cert.count2) {
        cert.valid = false;
        cert.status = cert.full_query ? "inconclusive (full-query case)"
                                      : "invalid (answer counts equal)";
    } else if (!cert.wl_equivalent_km1) {
        cert.valid = false;
        cert.status = "invalid (pair not equivalent at k-1)";
    } else if (!cert.hom_indist_equal) {
        cert.valid = false;
        cert.status = "invalid (oracle found a low-treewidth distinguisher)";
    } else {
        cert.valid = true;
        cert.status = "valid";
    }
    return cert;
}

bool CheckReport::all_pass() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

std::string CheckReport::to_json() const {
    json doc;
    doc["checks"] = json::array();
    for (const auto& [name, ok] : checks)
        doc["checks"].push_back({{"name", name}, {"pass", ok}});
    doc["allPass"] = all_pass();
    if (!note.empty()) doc["note"] = note;
    return doc.dump();
}

CheckReport verify_witness(const WitnessCertificate& cert, std::uint64_t budget) {
    CheckReport report;
    auto add = [&](const std::string& name, bool ok) {
        report.checks.emplace_back(name, ok);
    };

    std::uint64_t c1 = answers_on(cert.minimized, cert.g1, budget);
    std::uint64_t c2 = answers_on(cert.minimized, cert.g2, budget);
    add("answer count on first graph matches", c1 == cert.count1);
    add("answer count on second graph matches", c2 == cert.count2);
    add("answer counts differ", c1 != c2);
    add("minimized query is counting minimal",
        minimize(cert.minimized, budget).H.num_vertices() ==
            cert.minimized.H.num_vertices());
    add("minimized query counting-equivalent to original",
        is_counting_equivalent(cert.original, cert.minimized, budget));
    add("recorded width matches the minimized query",
        extension_width(cert.minimized) == cert.sew);
    bool wl_ok = wl_check_at(cert.g1, cert.g2, cert.sew - 1);
    add("pair equivalent under refinement at k-1", wl_ok);
    HomIndistVerdict verdict =
        hom_indist_oracle(cert.g1, cert.g2, std::max(cert.sew - 1, 0),
                          cert.hom_indist_max_pattern, budget);
    add("no low-treewidth distinguisher up to pattern bound",
        !verdict.distinguished);
    add("validity flag consistent",
        cert.valid == (c1 != c2 && wl_ok && !verdict.distinguished));
    return report;
}

CheckReport upper_bound_check(const ConjunctiveQuery& q, const Graph& G1,
                              const Graph& G2, int cap, std::uint64_t budget) {
    CheckReport report;
    int k = extension_width(minimize(q, budget), cap);
    if (!wl_check_at(G1, G2, k)) {
        report.note = "precondition not met";
        return report;
    }
    std::uint64_t c1 = count_answers(q, G1, budget);
    std::uint64_t c2 = count_answers(q, G2, budget);
    report.checks.emplace_back("k-equivalent graphs give equal answer counts",
                               c1 == c2);
    return report;
}

std::string WitnessCertificate::to_json() const {
    json doc;
    doc["query"] = original.to_dsl();
    doc["minimizedQuery"] = minimized.to_dsl();
    doc["sew"] = sew;
    doc["ell"] = ell;
    doc["z"] = z;
    doc["graph1"] = g1.to_text();
    doc["graph2"] = g2.to_text();
    doc["count1"] = count1;
    doc["count2"] = count2;
    doc["wlEquivalentAtKm1"] = wl_equivalent_km1;
    doc["homIndistEqualUpToBound"] = hom_indist_equal;
    doc["homIndistMaxPattern"] = hom_indist_max_pattern;
    doc["fullQuery"] = full_query;
    doc["valid"] = valid;
    doc["status"] = status;
    return doc.dump(2);
}

WitnessCertificate parse_witness_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    WitnessCertificate cert;
    try {
        cert.original = parse_query(doc.at("query").get<std::string>());
        cert.minimized = parse_query(doc.at("minimizedQuery").get<std::string>());
        cert.sew = doc.at("sew").get<int>();
        cert.ell = doc.at("ell").get<int>();
        cert.z = doc.at("z").get<std::vector<int>>();
        cert.g1 = parse_graph(doc.at("graph1").get<std::string>());
        cert.g2 = parse_graph(doc.at("graph2").get<std::string>());
        cert.count1 = doc.at("count1").get<std::uint64_t>();
        cert.count2 = doc.at("count2").get<std::uint64_t>();
        cert.wl_equivalent_km1 = doc.at("wlEquivalentAtKm1").get<bool>();
        cert.hom_indist_equal = doc.at("homIndistEqualUpToBound").get<bool>();
        cert.hom_indist_max_pattern = doc.at("homIndistMaxPattern").get<int>();
        cert.full_query = doc.at("fullQuery").get<bool>();
        cert.valid = doc.at("valid").get<bool>();
        cert.status = doc.at("status").get<std::string>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate field missing or mistyped: ") + e.what());
    }
    return cert;
}

}  // namespace cqwl
