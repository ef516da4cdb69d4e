#include "hgc/workbench/experiment.hpp"

#include "hgc/bounds.hpp"
#include "hgc/errors.hpp"
#include "hgc/hypergraph_io.hpp"
#include "hgc/oracle.hpp"
#include "hgc/workbench/generators.hpp"
#include "hgc/workbench/monte_carlo.hpp"
#include "hgc/workbench/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ios>

namespace hgc::workbench {
namespace fs = std::filesystem;
namespace {

template <class T>
T field(const nlohmann::json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw invalid_input(std::string("config field '") + key + "' has the wrong type");
    }
}

std::optional<fs::path> path_field(const nlohmann::json& j, const char* key, const fs::path& base) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    fs::path p = field<std::string>(j, key, "");
    if (p.is_relative() && !base.empty()) p = base / p;
    return p;
}

void require_output_dir(const std::optional<fs::path>& p) {
    if (!p) return;
    const fs::path dir = p->parent_path();
    if (!dir.empty() && !fs::is_directory(dir)) throw invalid_input("output directory does not exist: " + dir.string());
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

nlohmann::json error_json(const std::exception& e) { return {{"error", e.what()}}; }

nlohmann::json oracle_section(const Hypergraph& h, const ExperimentConfig& c, bool& violated) {
    oracle::Budget budget;
    budget.orderings = c.oracle_orderings;
    budget.search_nodes = c.oracle_nodes;
    budget.threads = c.threads;
    nlohmann::json out;
    try {
        out["colorable"] = oracle::is_r_colorable(h, c.r, budget).colorable;
    } catch (const std::exception& e) {
        out["colorable"] = error_json(e);
    }
    try {
        const auto stats = oracle::greedy_success_exact(h, c.r, budget);
        out["greedy_exact"] = {{"proper_orderings", stats.proper_orderings},
                               {"total_orderings", stats.total_orderings},
                               {"numerator", stats.numerator()},
                               {"denominator", stats.denominator()},
                               {"probability", stats.probability()}};
        // greedy can only succeed on colorable instances
        if (out["colorable"].is_boolean() && !out["colorable"].get<bool>() && stats.proper_orderings > 0) {
            violated = true;
        }
    } catch (const std::exception& e) {
        out["greedy_exact"] = error_json(e);
    }
    return out;
}

nlohmann::json bounds_section(const Hypergraph& h, int r) {
    nlohmann::json out;
    const auto u = uniformity(h);
    if (!u || u->n < 3) {
        out["skipped"] = "bounds need an n-uniform instance with n >= 3";
        return out;
    }
    const double n = static_cast<double>(u->n);
    const double edges = static_cast<double>(h.edge_count());
    out["n"] = u->n;
    out["max_edge_degree"] = max_edge_degree(h);
    auto guarded = [&](const char* key, auto f) {
        try {
            out[key] = f();
        } catch (const std::exception& e) {
            out[key] = error_json(e);
        }
    };
    if (r == 2) {
        guarded("k", [&] { return edges / std::pow(2.0, n - 1.0); });
        guarded("max_k_2col", [&] { return bounds::max_k_2col(n); });
    }
    guarded("k_r", [&] { return edges / std::pow(static_cast<double>(r), n - 2.0); });
    guarded("max_k_rcol", [&] { return bounds::max_k_rcol(n, r); });
    guarded("lll_log_D", [&] { return bounds::max_degree_lll(n, r).log_D; });
    return out;
}

std::vector<PlotPoint> sweep(const ExperimentConfig& c) {
    std::vector<PlotPoint> points;
    for (std::size_t n : c.sweep_n) {
        InstanceSource s = c.instance;
        s.n = n;
        const Hypergraph h = make_instance(s);
        MonteCarloOptions o;
        o.r = c.r;
        o.trials = c.trials;
        o.seed = c.seed;
        o.p = c.p;
        o.count_short_edges = false;
        o.threads = c.threads;
        const MonteCarloReport rep = monte_carlo(h, o);
        const Interval w = rep.success.wilson95();
        points.push_back({static_cast<double>(n), rep.success.estimate(), w.lo, w.hi});
    }
    return points;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

} // namespace

void ExperimentConfig::validate() const {
    if (trials < 1) throw invalid_input("trials must be at least 1");
    if (r < 2) throw invalid_input("r must be at least 2");
    if (p && !(*p > 0.0 && *p < 1.0)) throw invalid_input("p must lie in (0,1)");
    if (instance.file) {
        if (!fs::is_regular_file(*instance.file)) throw invalid_input("instance file not found: " + instance.file->string());
    } else if (instance.generator.empty()) {
        throw invalid_input("instance needs a file or a generator");
    }
    require_output_dir(json_out);
    require_output_dir(csv_out);
    require_output_dir(plot_out);
    if (plot_out && sweep_n.empty()) throw invalid_input("plot output needs sweep_n");
}

ExperimentConfig config_from_json(const nlohmann::json& j, const fs::path& base_dir) {
    if (!j.is_object()) throw invalid_input("config must be a JSON object");
    if (!j.contains("seed")) throw invalid_input("config lacks 'seed' (unseeded runs are not allowed)");
    ExperimentConfig c;
    const auto& inst = j.contains("instance") ? j.at("instance") : throw invalid_input("config lacks 'instance'");
    c.instance.file = path_field(inst, "file", base_dir);
    c.instance.generator = field<std::string>(inst, "generator", "");
    c.instance.m = field<std::size_t>(inst, "m", 0);
    c.instance.n = field<std::size_t>(inst, "n", 0);
    c.instance.edges = field<std::uint64_t>(inst, "edges", 0);
    c.instance.seed = field<std::uint64_t>(inst, "seed", 0);
    c.r = field<int>(j, "r", 2);
    c.trials = field<std::uint64_t>(j, "trials", 1);
    c.seed = field<std::uint64_t>(j, "seed", 0);
    if (j.contains("p") && !j.at("p").is_null()) c.p = field<double>(j, "p", 0.5);
    c.threads = field<unsigned>(j, "threads", 1);
    c.count_chains = field<bool>(j, "count_chains", false);
    c.chain_ceiling = field<std::uint64_t>(j, "chain_ceiling", c.chain_ceiling);
    c.oracle = field<bool>(j, "oracle", true);
    c.oracle_orderings = field<std::uint64_t>(j, "oracle_orderings", c.oracle_orderings);
    c.oracle_nodes = field<std::uint64_t>(j, "oracle_nodes", c.oracle_nodes);
    c.bounds = field<bool>(j, "bounds", true);
    c.sweep_n = field<std::vector<std::size_t>>(j, "sweep_n", {});
    if (j.contains("output")) {
        const auto& o = j.at("output");
        c.json_out = path_field(o, "json", base_dir);
        c.csv_out = path_field(o, "csv", base_dir);
        c.plot_out = path_field(o, "plot", base_dir);
    }
    return c;
}

ExperimentConfig load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open config " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("config is not valid JSON: ") + e.what(), 0);
    }
    return config_from_json(j, path.parent_path());
}

Hypergraph make_instance(const InstanceSource& s) {
    if (s.file) return load_hypergraph(s.file->string());
    if (s.generator == "complete") return gen_complete_uniform(s.m, s.n);
    if (s.generator == "random") return gen_random_uniform(s.m, s.n, s.edges, s.seed);
    if (s.generator == "fano") return gen_fano();
    if (s.generator == "single_edge") return gen_single_edge(s.n);
    if (s.generator == "chain") return gen_chain(s.n, s.edges);
    throw invalid_input("unknown generator '" + s.generator + "'");
}

ExperimentOutcome run_experiment(const ExperimentConfig& c) {
    c.validate();
    const Hypergraph h = make_instance(c.instance);
    const ValidationReport v = validate(h);
    if (!v.ok()) throw invalid_input("instance fails validation: " + v.issues.front().message);

    nlohmann::json report;
    report["run"] = {{"timestamp", utc_timestamp()}, {"threads", c.threads}};
    report["config"] = {{"r", c.r}, {"trials", c.trials}, {"seed", c.seed}, {"count_chains", c.count_chains},
                        {"chain_ceiling", c.chain_ceiling}};
    report["config"]["p"] = c.p ? nlohmann::json(*c.p) : nlohmann::json(nullptr);
    report["instance"] = {{"vertices", h.vertex_count()}, {"edges", h.edge_count()},
                          {"duplicate_edge_warnings", v.warning_count()}};
    if (const auto u = uniformity(h)) report["instance"]["uniform_n"] = u->n;

    MonteCarloOptions o;
    o.r = c.r;
    o.trials = c.trials;
    o.seed = c.seed;
    o.p = c.p;
    o.count_chains = c.count_chains;
    o.chain_ceiling = c.chain_ceiling;
    o.threads = c.threads;
    const MonteCarloReport mc = monte_carlo(h, o);
    report["monte_carlo"] = to_json(mc);
    report["mc_estimate"] = mc.success.estimate();

    bool violated = mc.invariant_violations > 0;
    if (c.oracle) {
        report["oracle_detail"] = oracle_section(h, c, violated);
        const auto& col = report["oracle_detail"]["colorable"];
        report["oracle"] = col.is_boolean() ? col : nlohmann::json(nullptr);
        if (col.is_boolean() && !col.get<bool>() && mc.success.successes > 0) violated = true;
    }
    if (c.bounds) report["bounds"] = bounds_section(h, c.r);

    std::vector<PlotPoint> points;
    if (!c.sweep_n.empty()) {
        points = sweep(c);
        auto& arr = report["sweep"] = nlohmann::json::array();
        for (const auto& pt : points) arr.push_back({{"n", pt.x}, {"estimate", pt.y}, {"lo", pt.lo}, {"hi", pt.hi}});
    }
    report["invariant_violation"] = violated;

    if (c.json_out) write_file(*c.json_out, report.dump(2) + "\n");
    if (c.csv_out) write_file(*c.csv_out, report_csv(mc));
    if (c.plot_out) write_file(*c.plot_out, svg_plot(points, "greedy success vs n", "n", "success estimate"));
    return {violated ? 2 : 0, std::move(report)};
}

nlohmann::json deterministic_view(const nlohmann::json& report) {
    nlohmann::json out = report;
    out.erase("run");
    return out;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const invariant_violation*>(&e)) return 2;
    if (dynamic_cast<const budget_exceeded*>(&e) || dynamic_cast<const numeric_range_error*>(&e)) return 3;
    if (dynamic_cast<const parse_error*>(&e) || dynamic_cast<const invalid_input*>(&e) ||
        dynamic_cast<const std::ios_base::failure*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e)) {
        return 4;
    }
    return 1;
}

} // namespace hgc::workbench
