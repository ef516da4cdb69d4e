// hgc: command-line front end for the greedy hypergraph coloring workbench.
#include "hgc/errors.hpp"
#include "hgc/greedy.hpp"
#include "hgc/hypergraph_io.hpp"
#include "hgc/oracle.hpp"
#include "hgc/workbench/bound_table.hpp"
#include "hgc/workbench/experiment.hpp"
#include "hgc/workbench/generators.hpp"
#include "hgc/workbench/monte_carlo.hpp"
#include "hgc/workbench/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace hgc;
using namespace hgc::workbench;

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw invalid_input(std::string("environment variable ") + name + " is not an unsigned integer");
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + out_path + " for writing");
    out << content;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    throw invalid_input("unsupported --format '" + format + "'");
}

nlohmann::json coloring_json(const Hypergraph& h, const GreedyTrace& trace) {
    const ProperCheck check = is_proper(h, trace.coloring);
    return {{"colors", trace.coloring.colors},
            {"forced_vertices", trace.forced_vertices},
            {"proper", check.proper},
            {"monochromatic", check.monochromatic}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random greedy r-coloring of uniform hypergraphs"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    int r = 2;
    std::optional<double> p;
    std::string format;
    std::string out_path;
    std::string in_path;
    std::string plot_path;
    unsigned threads = 1;
    std::uint64_t chain_ceiling = 0;
    std::uint64_t oracle_budget = 0;

    auto* gen = app.add_subcommand("gen", "generate an instance");
    std::string gen_type = "complete";
    std::size_t gen_m = 0, gen_n = 3;
    std::uint64_t gen_edges = 0;
    gen->add_option("type", gen_type, "complete | random | fano | single_edge | chain")->required();
    gen->add_option("--m", gen_m, "vertex count");
    gen->add_option("--n", gen_n, "edge size");
    gen->add_option("--edges", gen_edges, "edge count (random) or chain length (chain)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out_path, "output file, default stdout");

    auto* color = app.add_subcommand("color", "run one greedy coloring");
    std::string variant = "greedy";
    color->add_option("--in", in_path, "instance file")->required();
    color->add_option("--r", r, "number of colors");
    color->add_option("--seed", seed, "birth-time seed")->required();
    color->add_option("--p", p, "interval parameter (two_phase variant)");
    color->add_option("--variant", variant, "greedy | two_phase | equitable");
    color->add_option("--format", format, "json");
    color->add_option("--out", out_path, "output file, default stdout");

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of greedy success");
    bool count_chains = false;
    mc->add_option("--in", in_path, "instance file")->required();
    mc->add_option("--r", r, "number of colors");
    mc->add_option("--trials", trials, "number of trials");
    mc->add_option("--seed", seed, "master seed")->required();
    mc->add_option("--p", p, "interval parameter, default 2 ln(n)/n");
    mc->add_flag("--chains", count_chains, "count conflicting r-chains");
    mc->add_option("--chain-ceiling", chain_ceiling, "per-trial chain ceiling");
    mc->add_option("--threads", threads, "worker threads (0 = all cores)");
    mc->add_option("--format", format, "json | csv");
    mc->add_option("--out", out_path, "output file, default stdout");

    auto* orc = app.add_subcommand("oracle", "exact colorability and greedy success probability");
    orc->add_option("--in", in_path, "instance file")->required();
    orc->add_option("--r", r, "number of colors");
    orc->add_option("--oracle-budget", oracle_budget, "maximum number of processing orders");
    orc->add_option("--threads", threads, "worker threads (0 = all cores)");
    orc->add_option("--format", format, "json");
    orc->add_option("--out", out_path, "output file, default stdout");

    auto* bnd = app.add_subcommand("bounds", "table of analytic bounds");
    std::vector<double> n_values{1e3, 1e4, 1e5, 1e6};
    std::vector<int> r_values{2, 3};
    bnd->add_option("--n", n_values, "edge sizes");
    bnd->add_option("--r", r_values, "color counts");
    bnd->add_option("--format", format, "csv | json");
    bnd->add_option("--out", out_path, "output file, default stdout");
    bnd->add_option("--plot", plot_path, "write an SVG of the r = 2 ratio against n");

    auto* exp = app.add_subcommand("experiment", "run an experiment config");
    std::string config_path;
    std::optional<unsigned> exp_threads;
    exp->add_option("config", config_path, "JSON config")->required();
    exp->add_option("--threads", exp_threads, "override worker threads");
    exp->add_option("--out", out_path, "override JSON output path");
    exp->add_option("--plot", plot_path, "override SVG output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (chain_ceiling == 0) chain_ceiling = env_or("HGC_CHAIN_CEILING", kDefaultChainCeiling);
        if (oracle_budget == 0) oracle_budget = env_or("HGC_ORACLE_BUDGET", oracle::Budget{}.orderings);

        if (*gen) {
            Hypergraph h;
            if (gen_type == "complete") h = gen_complete_uniform(gen_m, gen_n);
            else if (gen_type == "random") h = gen_random_uniform(gen_m, gen_n, gen_edges, seed);
            else if (gen_type == "fano") h = gen_fano();
            else if (gen_type == "single_edge") h = gen_single_edge(gen_n);
            else if (gen_type == "chain") h = gen_chain(gen_n, gen_edges);
            else throw invalid_input("unknown generator '" + gen_type + "'");
            emit(out_path, format_hypergraph(h));
            return 0;
        }

        if (*color) {
            if (format.empty()) format = "json";
            require_format(format, {"json"});
            const Hypergraph h = load_hypergraph(in_path);
            if (!validate(h).ok()) throw invalid_input("instance fails validation");
            nlohmann::json j;
            if (variant == "equitable") {
                const Coloring c = equitable_partition_color(h, seed, r);
                const ProperCheck check = is_proper(h, c);
                j = {{"colors", c.colors}, {"proper", check.proper}, {"monochromatic", check.monochromatic}};
            } else {
                const BirthTimes t = sample_birth_times(h.vertex_count(), seed);
                const GreedyTrace trace = variant == "two_phase" ? two_phase_color(h, t, r, p.value_or(default_p(h)))
                                          : variant == "greedy"  ? greedy_color(h, t, r)
                                                                 : throw invalid_input("unknown variant '" + variant + "'");
                j = coloring_json(h, trace);
                if (variant == "greedy" && j["proper"].get<bool>() != trace.forced_vertices.empty()) {
                    throw invariant_violation("forced vertices and monochromatic edges disagree");
                }
            }
            j["r"] = r;
            j["seed"] = seed;
            emit(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (*mc) {
            if (format.empty()) format = "json";
            require_format(format, {"json", "csv"});
            const Hypergraph h = load_hypergraph(in_path);
            MonteCarloOptions o;
            o.r = r;
            o.trials = trials;
            o.seed = seed;
            o.p = p;
            o.count_chains = count_chains;
            o.chain_ceiling = chain_ceiling;
            o.threads = threads;
            const MonteCarloReport rep = monte_carlo(h, o);
            emit(out_path, format == "csv" ? report_csv(rep) : to_json(rep).dump(2) + "\n");
            return rep.invariant_violations ? 2 : 0;
        }

        if (*orc) {
            if (format.empty()) format = "json";
            require_format(format, {"json"});
            const Hypergraph h = load_hypergraph(in_path);
            oracle::Budget budget;
            budget.orderings = oracle_budget;
            budget.threads = threads;
            const auto col = oracle::is_r_colorable(h, r, budget);
            const auto stats = oracle::greedy_success_exact(h, r, budget);
            nlohmann::json j = {{"r", r},
                                {"colorable", col.colorable},
                                {"proper_orderings", stats.proper_orderings},
                                {"total_orderings", stats.total_orderings},
                                {"probability", stats.probability()}};
            if (col.witness) j["witness"] = col.witness->colors;
            emit(out_path, j.dump(2) + "\n");
            return !col.colorable && stats.proper_orderings ? 2 : 0;
        }

        if (*bnd) {
            if (format.empty()) format = "csv";
            require_format(format, {"csv", "json"});
            const auto rows = bound_table(n_values, r_values);
            if (format == "csv") {
                emit(out_path, bound_table_csv(rows));
            } else {
                nlohmann::json arr = nlohmann::json::array();
                auto cell = [](const Cell& c) { return c.ok() ? nlohmann::json(*c.value) : nlohmann::json({{"error", c.error}}); };
                for (const auto& row : rows) {
                    arr.push_back({{"n", row.n},
                                   {"r", row.r},
                                   {"max_k_2col", cell(row.max_k_2col)},
                                   {"ratio_2col", cell(row.ratio_2col)},
                                   {"max_k_rcol", cell(row.max_k_rcol)},
                                   {"ratio_rcol", cell(row.ratio_rcol)},
                                   {"log_D", cell(row.log_D)},
                                   {"ratio_D", cell(row.ratio_D)}});
                }
                emit(out_path, arr.dump(2) + "\n");
            }
            if (!plot_path.empty()) {
                std::vector<PlotPoint> pts;
                for (const auto& row : rows) {
                    if (row.r == 2 && row.ratio_2col.ok()) {
                        const double y = *row.ratio_2col.value;
                        pts.push_back({std::log10(row.n), y, y, y});
                    }
                }
                emit(plot_path, svg_plot(pts, "max k over sqrt(n / ln n), r = 2", "log10 n", "ratio"));
            }
            bool failed = false;
            for (const auto& row : rows) failed = failed || !row.max_k_rcol.ok() || !row.log_D.ok();
            return failed ? 3 : 0;
        }

        if (*exp) {
            ExperimentConfig config = load_config(config_path);
            if (exp_threads) config.threads = *exp_threads;
            if (!out_path.empty()) config.json_out = out_path;
            if (!plot_path.empty()) config.plot_out = plot_path;
            const ExperimentOutcome outcome = run_experiment(config);
            if (!config.json_out) std::cout << outcome.report.dump(2) << "\n";
            return outcome.exit_code;
        }
    } catch (const std::exception& e) {
        std::cerr << "hgc: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
