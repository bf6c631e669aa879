// Command-line front end for the canonram library.

#include <canonram/adversaries.hpp>
#include <canonram/cutnorm.hpp>
#include <canonram/erdos_rado.hpp>
#include <canonram/errors.hpp>
#include <canonram/graph.hpp>
#include <canonram/harness.hpp>
#include <canonram/io.hpp>
#include <canonram/search.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

using namespace canonram;

namespace {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

void emit_graph(const OrderedGraph& g, const std::string& out) {
    if (out.empty() || out == "-")
        write_graph(std::cout, g);
    else
        save_graph(out, g);
}

void print_witness(const CanonicalWitness& w) {
    fmt::print("vertices {}\n", fmt::join(w.vertices, " "));
    fmt::print("tags {}\n", w.tags.to_string());
    for (const auto& [e, c] : w.evidence) fmt::print("edge {} {} colour {}\n", e.u, e.v, c);
}

void save_witness(const std::string& path, const CanonicalWitness& w) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << fmt::format("{}\n{}\n", fmt::join(w.vertices, " "), w.tags.to_string());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical Ramsey experiments on ordered graphs"};
    app.require_subcommand(1);

    // gnp
    Vertex gnp_n = 0;
    double gnp_p = 0.5;
    std::uint64_t gnp_seed = 0;
    std::string gnp_out;
    auto* gnp = app.add_subcommand("gnp", "Sample G(n, p)");
    gnp->add_option("--n", gnp_n, "Vertex count")->required();
    gnp->add_option("--p", gnp_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gnp->add_option("--seed", gnp_seed, "Seed");
    gnp->add_option("--out", gnp_out, "Output graph file (default stdout)");

    // clean
    std::string clean_graph;
    unsigned clean_ell = 4;
    std::string clean_out;
    auto* clean = app.add_subcommand("clean", "Lexicographic clean subgraph");
    clean->add_option("--graph", clean_graph)->required();
    clean->add_option("--ell", clean_ell)->required();
    clean->add_option("--out", clean_out);

    // count
    std::string count_graph;
    unsigned count_ell = 3;
    auto* count = app.add_subcommand("count", "Count labelled copies of K_ell");
    count->add_option("--graph", count_graph)->required();
    count->add_option("--ell", count_ell)->required();

    // colour
    std::string colour_graph;
    std::string colour_adv = "injective";
    std::uint64_t colour_seed = 0;
    std::string colour_out;
    auto* colour = app.add_subcommand("colour", "Colour a graph with an adversary");
    colour->add_option("--graph", colour_graph)->required();
    colour->add_option("--adversary", colour_adv, "random:r | bounded:lambda[:r] | injective | min | max | greedy");
    colour->add_option("--seed", colour_seed);
    colour->add_option("--out", colour_out);

    // find
    std::string find_graph;
    std::string find_colouring;
    unsigned find_ell = 3;
    bool find_rainbow = false;
    std::string find_witness_out;
    auto* find = app.add_subcommand("find", "Search for a canonical (or rainbow) K_ell");
    find->add_option("--graph", find_graph)->required();
    find->add_option("--colouring", find_colouring)->required();
    find->add_option("--ell", find_ell)->required();
    find->add_flag("--rainbow", find_rainbow, "Only rainbow copies");
    find->add_option("--witness-out", find_witness_out);

    // arrow
    std::string arrow_graph;
    unsigned arrow_ell = 3;
    unsigned arrow_colours = 2;
    std::uint64_t arrow_budget = kDefaultNodeBudget;
    std::string arrow_witness_out;
    auto* arrow = app.add_subcommand("arrow", "Decide G -> (K_ell)_r");
    arrow->add_option("--graph", arrow_graph)->required();
    arrow->add_option("--ell", arrow_ell)->required();
    arrow->add_option("--colours", arrow_colours)->required();
    arrow->add_option("--budget", arrow_budget);
    arrow->add_option("--witness-out", arrow_witness_out, "Colouring without a monochromatic K_ell");

    // er-demo
    Vertex er_n = 30;
    unsigned er_ell = 3;
    std::string er_adv = "random:2";
    std::uint64_t er_seed = 0;
    auto* er = app.add_subcommand("er-demo", "Run the nested-neighbourhood procedure on a coloured K_n");
    er->add_option("--n", er_n)->required();
    er->add_option("--ell", er_ell)->required();
    er->add_option("--adversary", er_adv);
    er->add_option("--seed", er_seed);

    // sweep
    std::string sweep_config;
    std::string sweep_out;
    std::string sweep_json;
    std::string sweep_summary;
    unsigned sweep_threads = 1;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo threshold sweep");
    sweep->add_option("--config", sweep_config)->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", sweep_out, "Per-trial CSV")->required();
    sweep->add_option("--summary", sweep_summary, "Per-cell CSV (default: <out>.summary.csv)");
    sweep->add_option("--json", sweep_json);
    sweep->add_option("--threads", sweep_threads)->check(CLI::PositiveNumber);

    // verify-corollary
    std::string vc_json;
    auto* vc = app.add_subcommand("verify-corollary", "Re-check clean-mode sweep records");
    vc->add_option("--json", vc_json, "JSON written by sweep --json")->required()->check(CLI::ExistingFile);

    // cutnorm
    std::string cn_weights;
    bool cn_heuristic = false;
    unsigned cn_restarts = 32;
    std::uint64_t cn_seed = 0;
    auto* cn = app.add_subcommand("cutnorm", "Cut-norm of a weighted graph");
    cn->add_option("--weights", cn_weights)->required()->check(CLI::ExistingFile);
    cn->add_flag("--heuristic", cn_heuristic, "Local search lower bound instead of the exact scan");
    cn->add_option("--restarts", cn_restarts);
    cn->add_option("--seed", cn_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gnp) {
            emit_graph(gnp_generate(gnp_n, gnp_p, gnp_seed).graph, gnp_out);
        } else if (*clean) {
            emit_graph(clean_subgraph(load_graph(clean_graph), clean_ell), clean_out);
        } else if (*count) {
            fmt::print("{}\n", u128_to_string(count_cliques(load_graph(count_graph), count_ell)));
        } else if (*colour) {
            auto g = std::make_shared<const OrderedGraph>(load_graph(colour_graph));
            const auto phi = generate_colouring(g, parse_adversary_spec(colour_adv, colour_seed));
            if (colour_out.empty() || colour_out == "-")
                write_colouring(std::cout, phi);
            else
                save_colouring(colour_out, phi);
        } else if (*find) {
            auto g = std::make_shared<const OrderedGraph>(load_graph(find_graph));
            const auto phi = load_colouring(find_colouring, g);
            const auto out = find_rainbow ? find_rainbow_copy(phi, find_ell) : find_canonical_copy(phi, find_ell);
            if (!out.found) {
                fmt::print("none\n");
                return 1;
            }
            print_witness(*out.witness);
            if (!find_witness_out.empty()) save_witness(find_witness_out, *out.witness);
        } else if (*arrow) {
            auto g = std::make_shared<const OrderedGraph>(load_graph(arrow_graph));
            const auto res = arrows_mono(*g, ArrowQuery{arrow_ell, arrow_colours}, arrow_budget);
            switch (res.status) {
                case ArrowStatus::Arrows: fmt::print("arrows\n"); break;
                case ArrowStatus::DoesNotArrow: fmt::print("does-not-arrow\n"); break;
                case ArrowStatus::ResourceLimit: fmt::print("resource-limit\n"); break;
            }
            fmt::print("nodes {}\n", res.nodes_explored);
            if (res.witness && !arrow_witness_out.empty())
                save_colouring(arrow_witness_out, EdgeColouring(g, *res.witness));
            if (res.status == ArrowStatus::ResourceLimit) return 3;
        } else if (*er) {
            auto g = std::make_shared<const OrderedGraph>(OrderedGraph::complete(er_n));
            const auto phi = generate_colouring(g, parse_adversary_spec(er_adv, er_seed));
            const auto res = er_find(phi, er_ell, er_seed);
            fmt::print("branch {}\n", to_string(res.branch));
            const NeighbourhoodSequence* seq = std::get_if<NeighbourhoodSequence>(&res.sequence);
            if (!seq) seq = &std::get<BoundedSubsetSignal>(res.sequence).partial;
            for (std::size_t i = 0; i < seq->steps.size(); ++i) {
                const auto& s = seq->steps[i];
                fmt::print("step {} v={} c={} dir={} degree={} |S|={}\n", i + 1, s.vertex, s.colour,
                           s.direction == Direction::Less ? "<" : ">", s.degree, seq->surviving[i].size());
            }
            print_witness(res.witness);
            fmt::print("verified {}\n", verify_witness(phi, res.witness) ? "yes" : "no");
        } else if (*sweep) {
            const auto cfg = load_config(sweep_config);
            const auto result =
                run_sweep(cfg, sweep_threads, [](const std::string& w) { fmt::print(stderr, "warning: {}\n", w); });
            {
                std::ofstream out(sweep_out);
                if (!out) throw std::runtime_error("cannot write " + sweep_out);
                write_records_csv(out, result.records);
            }
            {
                const std::string path = sweep_summary.empty() ? sweep_out + ".summary.csv" : sweep_summary;
                std::ofstream out(path);
                if (!out) throw std::runtime_error("cannot write " + path);
                write_summary_csv(out, result.summary);
            }
            if (!sweep_json.empty()) {
                std::ofstream out(sweep_json);
                if (!out) throw std::runtime_error("cannot write " + sweep_json);
                out << sweep_to_json(cfg, result).dump(2) << '\n';
            }
            write_summary_csv(std::cout, result.summary);
        } else if (*vc) {
            std::ifstream in(vc_json);
            const auto records = records_from_json(nlohmann::json::parse(in));
            const auto report = verify_corollary_mode(records);
            fmt::print("trials {} witnesses {} edges {}\nno breaches\n", report.trials_checked,
                       report.witnesses_checked, report.cleaned_edges_total);
        } else if (*cn) {
            const auto f = load_weighted(cn_weights);
            fmt::print("{}\n", cn_heuristic ? cutnorm_heuristic(f, cn_restarts, cn_seed) : cutnorm_exact(f));
        }
    } catch (const ParseError& e) {
        fmt::print(stderr, "parse error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    }
    return 0;
}
