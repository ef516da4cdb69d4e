#pragma once

#include "hgc/hypergraph.hpp"

#include <json.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hgc::workbench {

/// Where the instance comes from: a file, or a named generator with parameters.
struct InstanceSource {
    std::optional<std::filesystem::path> file;
    std::string generator;       ///< complete | random | fano | single_edge | chain
    std::size_t m = 0;           ///< vertices (complete, random)
    std::size_t n = 0;           ///< edge size
    std::uint64_t edges = 0;     ///< random: edge count; chain: chain length
    std::uint64_t seed = 0;      ///< random generator seed
};

struct ExperimentConfig {
    InstanceSource instance;
    int r = 2;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::optional<double> p;
    unsigned threads = 1;
    bool count_chains = false;
    std::uint64_t chain_ceiling = 10'000'000;
    bool oracle = true;
    std::uint64_t oracle_orderings = 3'628'800;
    std::uint64_t oracle_nodes = 50'000'000;
    bool bounds = true;
    /// Edge sizes to sweep the generator over for the estimate-vs-n plot.
    std::vector<std::size_t> sweep_n;
    std::optional<std::filesystem::path> json_out;
    std::optional<std::filesystem::path> csv_out;
    std::optional<std::filesystem::path> plot_out;

    /// trials >= 1, r >= 2, output directories exist, input file exists.
    /// Throws invalid_input.
    void validate() const;
};

/// Parses a config object. "seed" is mandatory. Relative paths resolve
/// against `base_dir`. Throws invalid_input on missing or mistyped fields.
ExperimentConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

Hypergraph make_instance(const InstanceSource& source);

struct ExperimentOutcome {
    int exit_code = 0;
    nlohmann::json report;
};

/// generate/load -> validate -> Monte Carlo -> oracle (within budget) ->
/// bounds; writes the configured outputs. Budget and range failures inside
/// the oracle and bound steps are recorded in the report, not thrown.
/// exit_code is 2 when an invariant violation was detected, else 0.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

/// The report without its "run" section (timestamp, thread count); equal
/// across reruns of the same config and seed.
nlohmann::json deterministic_view(const nlohmann::json& report);

/// 2 invariant violation, 3 budget/range, 4 IO/parse/invalid input, 1 otherwise.
int exit_code_for(const std::exception& e);

} // namespace hgc::workbench
