#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/goodness.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/named.hpp"
#include "ramsey/sampler.hpp"
#include "ramsey/search.hpp"
#include "ramsey/tree_embed.hpp"

using nlohmann::json;

namespace {

ramsey::Graph graph_arg(const std::string& spec) {
    try {
        return ramsey::named_graph(spec);
    } catch (const std::invalid_argument&) {
    }
    return ramsey::parse_graph6(spec);
}

int worker_count() {
    if (const char* env = std::getenv("RAMSEY_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

std::string default_catalog_path() {
#ifdef RAMSEY_DEFAULT_CATALOG
    return RAMSEY_DEFAULT_CATALOG;
#else
    return "data/catalog.json";
#endif
}

json value_json(const ramsey::RamseyValue& v) {
    json j;
    if (v.is_exact())
        j["value"] = v.lo;
    else if (v.hi)
        j["interval"] = {{"lo", v.lo}, {"hi", *v.hi}};
    else
        j["interval"] = {{"lo", v.lo}};
    j["provenance"] = ramsey::to_string(v.provenance);
    return j;
}

json witness_json(const ramsey::TwoColoring& c) {
    return json{{"n", c.order()}, {"red", ramsey::to_graph6(c.red)}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file " + path);
    out << content;
}

struct Run {
    json inputs;
    json outputs;
    std::optional<std::uint64_t> nodes;
    int exit_code = 0;
};

void emit(const std::string& command, const Run& run, double ms) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = run.inputs;
    doc["outputs"] = run.outputs;
    if (run.nodes) doc["nodes"] = *run.nodes;
    doc["timing_ms"] = ms;
    std::cout << doc.dump(2) << "\n";
}

json goodness_json(const ramsey::GoodnessReport& report) {
    json cells = json::array();
    for (const auto& cell : report.cells) {
        json c;
        c["p"] = cell.p;
        c["value"] = value_json(cell.display());
        c["computed"] = value_json(cell.computed);
        c["verdict"] = ramsey::to_string(cell.verdict);
        if (cell.would_be) c["would_be"] = *cell.would_be;
        if (cell.flagged) c["flag"] = "data-quality";
        cells.push_back(c);
    }
    json j;
    j["graph"] = report.graph;
    j["order"] = report.order;
    j["cells"] = cells;
    j["goodness"] = report.goodness;
    j["goodness_exact"] = report.goodness_exact;
    if (report.first_failure_p) {
        j["first_failure"] = {{"p", *report.first_failure_p},
                              {"would_be", *report.first_failure_would_be}};
    }
    return j;
}

std::string goodness_markdown(const ramsey::GoodnessReport& report) {
    std::ostringstream md;
    md << "| p | R(" << report.graph << ",K_p) |\n|---|---|\n";
    for (const auto& cell : report.cells) {
        md << "| " << cell.p << " | " << ramsey::to_string(cell.display());
        if (cell.would_be) md << " (" << *cell.would_be << ")";
        if (cell.flagged) md << " *";
        md << " |\n";
    }
    md << "| goodness | " << (report.goodness_exact ? "" : ">= ") << report.goodness << " |\n";
    return md.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey numbers R(H,K_p) and p-goodness of small graphs"};
    app.require_subcommand(1);

    std::string graph_spec, tree_spec, catalog_path = default_catalog_path();
    std::string forest_spec, witness_out, emit_path;
    int p = 3, n = 0, root = 0, target = 0, h_order = 0, girth_param = 0, pmax = 10;
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t seed = 0;
    double lambda = 0.0;
    long p_threshold = 0;
    bool markdown = false;

    auto* search_cmd = app.add_subcommand("search", "Search K_n for a coloring with no red H and no blue K_p");
    search_cmd->add_option("--graph", graph_spec, "H as a named graph or graph6")->required();
    search_cmd->add_option("--p", p, "clique order p")->required();
    search_cmd->add_option("--n", n, "order of the complete graph")->required();
    search_cmd->add_option("--budget", budget, "node budget");
    search_cmd->add_option("--witness-out", witness_out, "write the witness file here");

    auto* ramsey_cmd = app.add_subcommand("ramsey", "Compute R(H,K_p) exactly by search");
    ramsey_cmd->add_option("--graph", graph_spec)->required();
    ramsey_cmd->add_option("--p", p)->required();
    ramsey_cmd->add_option("--budget", budget);
    ramsey_cmd->add_option("--witness-out", witness_out);

    auto* goodness_cmd = app.add_subcommand("goodness", "Goodness of a pendant chain over a catalog");
    goodness_cmd->add_option("--graph", graph_spec, "H1..H7, a base graph id, or base+k")->required();
    goodness_cmd->add_option("--catalog", catalog_path);
    goodness_cmd->add_option("--pmax", pmax);
    goodness_cmd->add_flag("--markdown", markdown, "emit a markdown table instead of JSON");

    auto* embed_cmd = app.add_subcommand("embed", "Embed a tree with a prescribed root image");
    embed_cmd->add_option("--tree", tree_spec, "tree as named graph or graph6")->required();
    embed_cmd->add_option("--root", root)->required();
    embed_cmd->add_option("--graph", graph_spec, "host graph")->required();
    embed_cmd->add_option("--target", target)->required();

    auto* turan_cmd = app.add_subcommand("turan", "Lower-bound construction (h-1)(p-1)+1");
    turan_cmd->add_option("--h", h_order)->required();
    turan_cmd->add_option("--p", p)->required();
    turan_cmd->add_option("--emit-witness", witness_out);

    auto* stahl_cmd = app.add_subcommand("stahl", "Closed form for forests");
    stahl_cmd->add_option("--forest", forest_spec, "component profile, e.g. k1=2,k3=1")->required();
    stahl_cmd->add_option("--p", p)->required();

    auto* threshold_cmd = app.add_subcommand("threshold", "p above which p-goodness fails");
    threshold_cmd->add_option("--h", h_order)->required();
    threshold_cmd->add_option("--girth", girth_param)->required();

    auto* sample_cmd = app.add_subcommand("sample", "Random girth/independence witness");
    sample_cmd->add_option("--n", n)->required();
    sample_cmd->add_option("--girth", girth_param)->required();
    sample_cmd->add_option("--lambda", lambda);
    sample_cmd->add_option("--seed", seed)->required();
    sample_cmd->add_option("--emit", emit_path, "write graph6 of the surviving graph");

    auto* verify_cmd = app.add_subcommand("verify-witness", "Check girth > ell and alpha < p");
    verify_cmd->add_option("--graph", graph_spec)->required();
    verify_cmd->add_option("--girth", girth_param)->required();
    verify_cmd->add_option("--p", p_threshold)->required();

    auto* catalog_cmd = app.add_subcommand("catalog-check", "Load and validate a catalog file");
    catalog_cmd->add_option("--catalog", catalog_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         started)
            .count();
    };

    try {
        Run run;
        std::string command;

        if (search_cmd->parsed()) {
            command = "search";
            ramsey::Graph h = graph_arg(graph_spec);
            run.inputs = {{"graph", graph_spec}, {"p", p}, {"n", n}, {"budget", budget}};
            ramsey::SearchResult res =
                ramsey::exists_good_coloring(n, h, p, {budget, worker_count()});
            run.nodes = res.nodes;
            run.outputs["verdict"] = ramsey::to_string(res.status);
            if (res.witness) {
                run.outputs["witness"] = witness_json(*res.witness);
                if (!witness_out.empty()) {
                    write_file(witness_out, ramsey::export_witness(*res.witness));
                    run.outputs["witness_file"] = witness_out;
                }
            }
            if (res.status == ramsey::SearchStatus::Inconclusive) run.exit_code = 1;
        } else if (ramsey_cmd->parsed()) {
            command = "ramsey";
            ramsey::Graph h = graph_arg(graph_spec);
            run.inputs = {{"graph", graph_spec}, {"p", p}, {"budget", budget}};
            ramsey::RamseyComputation res = ramsey::ramsey_number(h, p, {budget, worker_count()});
            run.nodes = res.nodes;
            run.outputs = value_json(res.value);
            if (res.witness) {
                if (!witness_out.empty()) {
                    write_file(witness_out, ramsey::export_witness(*res.witness));
                    run.outputs["witness_file"] = witness_out;
                } else {
                    run.outputs["witness"] = witness_json(*res.witness);
                }
            }
            if (!res.value.is_exact()) run.exit_code = 1;
        } else if (goodness_cmd->parsed()) {
            command = "goodness";
            run.inputs = {{"graph", graph_spec}, {"catalog", catalog_path}, {"pmax", pmax}};
            ramsey::Catalog cat = ramsey::load_catalog(catalog_path);
            ramsey::GoodnessReport report = ramsey::goodness(graph_spec, cat, pmax);
            if (markdown) {
                std::cout << goodness_markdown(report);
                return 0;
            }
            run.outputs = goodness_json(report);
        } else if (embed_cmd->parsed()) {
            command = "embed";
            ramsey::Graph t = graph_arg(tree_spec);
            ramsey::Graph g = graph_arg(graph_spec);
            run.inputs = {{"tree", tree_spec}, {"root", root}, {"graph", graph_spec},
                          {"target", target}};
            auto emb = ramsey::embed_tree(t, root, g, target);
            if (emb) {
                run.outputs["map"] = emb->map;
            } else {
                run.outputs["result"] = "FAILURE";
                run.exit_code = 1;
            }
        } else if (turan_cmd->parsed()) {
            command = "turan";
            run.inputs = {{"h", h_order}, {"p", p}};
            run.outputs["lower_bound"] = ramsey::turan_lower_bound(h_order, p);
            ramsey::TwoColoring witness = ramsey::turan_coloring(h_order, p);
            run.outputs["witness"] = witness_json(witness);
            if (!witness_out.empty()) {
                write_file(witness_out, ramsey::export_witness(witness));
                run.outputs["witness_file"] = witness_out;
            }
        } else if (stahl_cmd->parsed()) {
            command = "stahl";
            run.inputs = {{"forest", forest_spec}, {"p", p}};
            // profile syntax: comma-separated k<i>=<count>
            std::map<int, long> counts;
            std::stringstream ss(forest_spec);
            std::string part;
            while (std::getline(ss, part, ',')) {
                auto eq = part.find('=');
                if (part.size() < 4 || part[0] != 'k' || eq == std::string::npos)
                    throw std::invalid_argument("stahl: bad component term '" + part + "'");
                counts[std::stoi(part.substr(1, eq - 1))] = std::stol(part.substr(eq + 1));
            }
            if (counts.empty()) throw std::invalid_argument("stahl: empty forest spec");
            ramsey::ForestSpec forest{std::vector<long>(counts.rbegin()->first + 1, 0)};
            for (auto [i, c] : counts) {
                if (i < 1) throw std::invalid_argument("stahl: component order must be >= 1");
                forest.k[i] = c;
            }
            run.outputs["value"] = ramsey::stahl_forest(forest, p);
        } else if (threshold_cmd->parsed()) {
            command = "threshold";
            run.inputs = {{"h", h_order}, {"girth", girth_param}};
            auto res = ramsey::goodness_failure_threshold(h_order, girth_param);
            run.outputs["ln_threshold"] = res.ln_threshold;
            if (res.exact_value) run.outputs["value"] = *res.exact_value;
        } else if (sample_cmd->parsed()) {
            command = "sample";
            std::optional<double> lam;
            if (sample_cmd->count("--lambda")) lam = lambda;
            run.inputs = {{"n", n}, {"girth", girth_param}, {"seed", seed}};
            if (lam) run.inputs["lambda"] = *lam;
            ramsey::WitnessResult res = ramsey::construct_witness(n, girth_param, lam, seed);
            run.outputs = {{"n_prime", res.g_prime.n()},
                           {"graph6", ramsey::to_graph6(res.g_prime)},
                           {"ell", res.ell},
                           {"p", res.p},
                           {"lambda", res.lambda},
                           {"seed", res.seed},
                           {"rng", res.rng},
                           {"certified", res.certified},
                           {"girth_ok", res.girth_ok},
                           {"independence_ok", res.independence_ok},
                           {"deleted", res.deleted},
                           {"alpha", res.alpha}};
            if (res.girth_value) run.outputs["girth"] = *res.girth_value;
            if (!emit_path.empty()) {
                write_file(emit_path, ramsey::to_graph6(res.g_prime) + "\n");
                run.outputs["emitted"] = emit_path;
            }
            if (!res.certified) run.exit_code = 1;
        } else if (verify_cmd->parsed()) {
            command = "verify-witness";
            ramsey::Graph g = graph_arg(graph_spec);
            run.inputs = {{"graph", graph_spec}, {"girth", girth_param}, {"p", p_threshold}};
            bool ok = ramsey::verify_superlinearity_witness(g, girth_param, p_threshold);
            run.outputs["verified"] = ok;
            if (!ok) run.exit_code = 1;
        } else if (catalog_cmd->parsed()) {
            command = "catalog-check";
            run.inputs = {{"catalog", catalog_path}};
            ramsey::Catalog cat = ramsey::load_catalog(catalog_path);
            int flagged = 0;
            for (const auto& [key, entry] : cat.entries())
                if (entry.data_quality) ++flagged;
            run.outputs = {{"entries", cat.size()}, {"flagged", flagged}, {"ok", true}};
        }

        emit(command, run, elapsed_ms());
        return run.exit_code;
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
