#pragma once

#include "hgc/conflicts.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/workbench/report.hpp"

#include <cstdint>
#include <optional>

namespace hgc::workbench {

struct MonteCarloOptions {
    int r = 2;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    /// Interval parameter for B/P/R attribution and the short-edge threshold
    /// (1-p)/r. Defaults to default_p(h).
    std::optional<double> p;
    bool count_pairs = true;
    bool count_chains = false;
    bool count_short_edges = true;
    std::uint64_t chain_ceiling = kDefaultChainCeiling;
    /// Worker threads; results do not depend on this.
    unsigned threads = 1;
};

/// 2 ln(n)/n for an n-uniform hypergraph (n >= 2), otherwise 1/2.
double default_p(const Hypergraph& h);

/// Greedy coloring on fresh birth times per trial. Trial i draws its birth
/// times from child_seed(seed, i).
MonteCarloReport monte_carlo(const Hypergraph& h, const MonteCarloOptions& options);

/// Success rate of the equitable-partition baseline; trial i uses child_seed(seed, i).
Proportion monte_carlo_equitable(const Hypergraph& h, int r, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 1);

/// Frequencies for one fixed chain: how often it is conflicting, and how often
/// it is conflicting with none of its edges shorter than (1-p)/r.
struct ChainEventCounts {
    std::uint64_t trials = 0;
    std::uint64_t conflicting = 0;
    std::uint64_t conflicting_without_short = 0;
};
ChainEventCounts chain_event_frequency(const Hypergraph& h, const Chain& chain, int r, double p,
                                       std::uint64_t trials, std::uint64_t seed);

/// Conditional count of conflicting pairs (e, f) given that the last vertex of
/// edge e is born at time s: a uniformly chosen vertex of e is placed at s,
/// the rest of e uniformly in [0, s), all other vertices uniformly in [0, 1).
struct ConditionalPairs {
    std::uint64_t trials = 0;
    std::uint64_t pairs_total = 0;
    double mean() const { return trials ? static_cast<double>(pairs_total) / static_cast<double>(trials) : 0.0; }
};
ConditionalPairs conditional_pairs_given_last(const Hypergraph& h, EdgeId e, double s, std::uint64_t trials,
                                              std::uint64_t seed);

/// Exact value of the same conditional expectation:
/// (1/|e|) sum over v in e, f with f ∩ e = {v} of (1-s)^(|f|-1).
double conditional_pairs_exact(const Hypergraph& h, EdgeId e, double s);

/// k 2^(n-1) n^-1 ((1+p)/2)^(n-1) with k 2^(n-1) = edge_count.
double conditional_pairs_bound(double edge_count, double n, double p);

} // namespace hgc::workbench
