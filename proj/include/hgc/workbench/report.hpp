#pragma once

#include "hgc/conflicts.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hgc::workbench {

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
    double lo = 0;
    double hi = 0;
    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Wilson score interval for successes/trials at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

struct Proportion {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;

    double estimate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
    Interval wilson95() const { return wilson_interval(successes, trials, kZ95); }
    Interval wilson99() const { return wilson_interval(successes, trials, kZ99); }
    friend bool operator==(const Proportion&, const Proportion&) = default;
};

/// Aggregate of a Monte Carlo run. Every field is a count or derived from
/// counts, so the report does not depend on how trials were split over workers.
struct MonteCarloReport {
    int r = 2;
    double p = 0;                       ///< interval / short-edge parameter used
    std::uint64_t edge_count = 0;
    Proportion success;                 ///< proper colorings

    std::uint64_t conflicting_pairs_total = 0;
    std::uint64_t trials_with_conflicting_pair = 0;
    IntervalCounts pairs_by_interval;   ///< r = 2 only, else zero
    IntervalCounts trials_with_pair_in; ///< trials with at least one pair in B / P / R

    bool chains_counted = false;
    std::uint64_t conflicting_chains_total = 0;
    std::uint64_t trials_with_conflicting_chain = 0;
    std::uint64_t chain_overflow_trials = 0;

    std::uint64_t short_edges_total = 0;
    std::uint64_t trials_with_short_edge = 0;

    std::uint64_t forced_vertices_total = 0;
    /// Runs that broke a structural property of the greedy output (should stay 0).
    std::uint64_t invariant_violations = 0;

    double mean_conflicting_pairs() const;
    double mean_conflicting_chains() const;
    double mean_short_edges() const;
    /// Fraction of (trial, edge) pairs in which the edge was short.
    double short_edge_frequency() const;

    friend bool operator==(const MonteCarloReport&, const MonteCarloReport&) = default;
};

nlohmann::json to_json(const MonteCarloReport& report);
MonteCarloReport report_from_json(const nlohmann::json& j);

/// One header row and one data row; '.' decimals, LF endings. Doubles are
/// written with 17 significant digits so that parsing reproduces them.
std::string report_csv(const MonteCarloReport& report);
MonteCarloReport report_from_csv(const std::string& csv);

/// Minimal SVG line plot (x ascending) with optional error bars.
struct PlotPoint {
    double x;
    double y;
    double lo;
    double hi;
};
std::string svg_plot(const std::vector<PlotPoint>& points, const std::string& title, const std::string& x_label,
                     const std::string& y_label);

} // namespace hgc::workbench
