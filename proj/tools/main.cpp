#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cqwl/answer.hpp"
#include "cqwl/cfi.hpp"
#include "cqwl/quantum.hpp"
#include "cqwl/query.hpp"
#include "cqwl/width.hpp"
#include "cqwl/witness.hpp"
#include "cqwl/wl.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cqwl::DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& doc, const std::string& format) {
    if (format == "plain") {
        for (auto it = doc.begin(); it != doc.end(); ++it)
            std::cout << it.key() << "\t"
                      << (it.value().is_string() ? it.value().get<std::string>()
                                                 : it.value().dump())
                      << "\n";
    } else {
        std::cout << doc.dump() << "\n";
    }
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Query width, gadget-graph, and refinement toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t budget = cqwl::kDefaultBudget;
    int tw_cap = cqwl::kDefaultTreewidthCap;
    int threads = 1;
    app.add_option("--format", format, "json or plain")
        ->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--budget", budget, "search budget in visited assignments");
    app.add_option("--tw-cap", tw_cap, "vertex cap for exact treewidth");
    app.add_option("--threads", threads, "worker thread cap");

    std::string query_path, graph_path, graph2_path, out_path, spec_path, odd_list;
    int k_arg = 1, max_nhat = 16, max_pattern = 7;

    CLI::App* width = app.add_subcommand("width", "query widths");
    width->add_option("query", query_path)->required();

    CLI::App* minimize_cmd = app.add_subcommand("minimize", "counting-minimal core");
    minimize_cmd->add_option("query", query_path)->required();

    CLI::App* count = app.add_subcommand("count", "answer count");
    count->add_option("--query", query_path)->required();
    count->add_option("graph", graph_path)->required();

    CLI::App* cfi_cmd = app.add_subcommand("cfi", "parity gadget graph");
    cfi_cmd->add_option("--odd", odd_list, "comma-separated odd-set vertices");
    cfi_cmd->add_option("graph", graph_path)->required();
    cfi_cmd->add_option("--out", out_path);

    CLI::App* wl_cmd = app.add_subcommand("wl", "k-dimensional refinement equivalence");
    wl_cmd->add_option("--k", k_arg)->required();
    wl_cmd->add_option("graph1", graph_path)->required();
    wl_cmd->add_option("graph2", graph2_path)->required();

    CLI::App* witness_cmd = app.add_subcommand("witness", "build witness pair");
    witness_cmd->add_option("--query", query_path)->required();
    witness_cmd->add_option("--out", out_path);
    witness_cmd->add_option("--max-pattern", max_pattern);

    CLI::App* verify_cmd = app.add_subcommand("verify", "re-verify a certificate");
    verify_cmd->add_option("certificate", out_path)->required();

    CLI::App* domset = app.add_subcommand("domset", "count size-k dominating sets");
    domset->add_option("--k", k_arg)->required();
    domset->add_option("graph", graph_path)->required();

    CLI::App* quantum = app.add_subcommand("quantum-eval", "evaluate a quantum query");
    quantum->add_option("--spec", spec_path)->required();
    quantum->add_option("graph", graph_path)->required();

    CLI::App* interp = app.add_subcommand("interpolate", "answer count via interpolation");
    interp->add_option("--query", query_path)->required();
    interp->add_option("graph", graph_path)->required();
    interp->add_option("--max-nhat", max_nhat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 64;
    }

    try {
        json doc;
        if (width->parsed()) {
            cqwl::ConjunctiveQuery q = cqwl::parse_query(read_file(query_path));
            doc["sew"] = cqwl::semantic_extension_width(q, tw_cap, budget);
            doc["ew"] = cqwl::extension_width(q, tw_cap);
            doc["tw"] = cqwl::treewidth(q.H, tw_cap).first;
        } else if (minimize_cmd->parsed()) {
            cqwl::ConjunctiveQuery q = cqwl::parse_query(read_file(query_path));
            cqwl::ConjunctiveQuery core = cqwl::minimize(q, budget);
            doc["query"] = core.to_dsl();
            doc["vertices"] = core.H.num_vertices();
            doc["edges"] = core.H.num_edges();
        } else if (count->parsed()) {
            cqwl::ConjunctiveQuery q = cqwl::parse_query(read_file(query_path));
            cqwl::Graph g = cqwl::parse_graph(read_file(graph_path));
            doc["answers"] = cqwl::count_answers(q, g, budget);
        } else if (cfi_cmd->parsed()) {
            cqwl::Graph g = cqwl::parse_graph(read_file(graph_path));
            cqwl::CfiGraph chi = cqwl::cfi(g, parse_vertex_list(odd_list));
            doc["vertices"] = chi.result.num_vertices();
            doc["edges"] = chi.result.num_edges();
            doc["graph"] = chi.result.to_text();
            doc["labels"] = chi.result.labels();
            doc["baseVertex"] = chi.base_vertex;
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << chi.result.to_text();
            }
        } else if (wl_cmd->parsed()) {
            cqwl::Graph g1 = cqwl::parse_graph(read_file(graph_path));
            cqwl::Graph g2 = cqwl::parse_graph(read_file(graph2_path));
            doc["equivalent"] = cqwl::wl_equivalent(g1, g2, k_arg);
            cqwl::WlColouring c1 = cqwl::wl_refine(g1, k_arg);
            cqwl::WlColouring c2 = cqwl::wl_refine(g2, k_arg);
            doc["rounds"] = {c1.rounds, c2.rounds};
            doc["histogramHash"] = {c1.histogram_hash, c2.histogram_hash};
        } else if (witness_cmd->parsed()) {
            cqwl::ConjunctiveQuery q = cqwl::parse_query(read_file(query_path));
            cqwl::WitnessCertificate cert =
                cqwl::build_witness(q, tw_cap, max_pattern, budget);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << cert.to_json() << "\n";
            }
            doc = json::parse(cert.to_json());
        } else if (verify_cmd->parsed()) {
            cqwl::WitnessCertificate cert =
                cqwl::parse_witness_json(read_file(out_path));
            doc = json::parse(cqwl::verify_witness(cert, budget).to_json());
        } else if (domset->parsed()) {
            cqwl::Graph g = cqwl::parse_graph(read_file(graph_path));
            doc["count"] = cqwl::count_dominating_sets(k_arg, g, budget);
        } else if (quantum->parsed()) {
            cqwl::QuantumQuery q = cqwl::normalize_quantum(
                cqwl::parse_quantum(read_file(spec_path)), budget);
            cqwl::Graph g = cqwl::parse_graph(read_file(graph_path));
            cqwl::Rational value = cqwl::eval_quantum(q, g, budget);
            doc["value"] = value.str();
            doc["terms"] = q.terms.size();
        } else if (interp->parsed()) {
            cqwl::ConjunctiveQuery q = cqwl::parse_query(read_file(query_path));
            cqwl::Graph g = cqwl::parse_graph(read_file(graph_path));
            doc["answers"] = cqwl::ans_via_interpolation(
                q, g, static_cast<std::uint64_t>(max_nhat), budget);
        }
        emit(doc, format);
        return 0;
    } catch (const cqwl::BudgetExceededError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
