#include "hgc/workbench/monte_carlo.hpp"

#include "hgc/bounds.hpp"
#include "hgc/errors.hpp"
#include "hgc/greedy.hpp"
#include "hgc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace hgc::workbench {
namespace {

// Splits [0, trials) into contiguous blocks, runs `body(begin, end, acc)` per
// block on its own accumulator and folds the accumulators in block order.
// Accumulators only hold integer sums, so the result is independent of the
// number of blocks.
template <class Acc, class Body, class Merge>
Acc run_blocks(std::uint64_t trials, unsigned threads, Body body, Merge merge) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t blocks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, trials));
    std::vector<Acc> partial(blocks);
    auto range = [&](std::uint64_t b) {
        return std::pair{trials * b / blocks, trials * (b + 1) / blocks};
    };
    if (blocks == 1) {
        body(std::uint64_t{0}, trials, partial[0]);
    } else {
        std::vector<std::jthread> workers;
        std::vector<std::exception_ptr> errors(blocks);
        for (std::uint64_t b = 0; b < blocks; ++b) {
            workers.emplace_back([&, b] {
                try {
                    const auto [lo, hi] = range(b);
                    body(lo, hi, partial[b]);
                } catch (...) {
                    errors[b] = std::current_exception();
                }
            });
        }
        workers.clear();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    Acc total = partial[0];
    for (std::uint64_t b = 1; b < blocks; ++b) merge(total, partial[b]);
    return total;
}

void merge_counts(IntervalCounts& a, const IntervalCounts& b) {
    a.b += b.b;
    a.p += b.p;
    a.r += b.r;
}

void merge_reports(MonteCarloReport& a, const MonteCarloReport& b) {
    a.success.successes += b.success.successes;
    a.success.trials += b.success.trials;
    a.conflicting_pairs_total += b.conflicting_pairs_total;
    a.trials_with_conflicting_pair += b.trials_with_conflicting_pair;
    merge_counts(a.pairs_by_interval, b.pairs_by_interval);
    merge_counts(a.trials_with_pair_in, b.trials_with_pair_in);
    a.conflicting_chains_total += b.conflicting_chains_total;
    a.trials_with_conflicting_chain += b.trials_with_conflicting_chain;
    a.chain_overflow_trials += b.chain_overflow_trials;
    a.short_edges_total += b.short_edges_total;
    a.trials_with_short_edge += b.trials_with_short_edge;
    a.forced_vertices_total += b.forced_vertices_total;
    a.invariant_violations += b.invariant_violations;
}

void run_trial(const Hypergraph& h, const MonteCarloOptions& o, double p, const IntervalPartition* partition,
               std::uint64_t index, MonteCarloReport& acc) {
    const BirthTimes t = sample_birth_times(h.vertex_count(), child_seed(o.seed, index));
    const GreedyTrace trace = greedy_color(h, t, o.r);
    const ProperCheck check = is_proper(h, trace.coloring);

    ++acc.success.trials;
    if (check.proper) ++acc.success.successes;
    acc.forced_vertices_total += trace.forced_vertices.size();

    // Structural properties of the greedy output: forced vertices and
    // monochromatic edges come together, and only in the last color.
    bool violated = check.proper != trace.forced_vertices.empty();
    for (EdgeId e : check.monochromatic) {
        if (trace.coloring.colors[h.edge(e)[0]] != o.r) violated = true;
    }

    if (o.count_pairs) {
        const auto pairs = conflicting_pairs(h, t);
        acc.conflicting_pairs_total += pairs.size();
        if (!pairs.empty()) ++acc.trials_with_conflicting_pair;
        if (partition) {
            const IntervalCounts c = classify_conflicts_by_interval(h, t, *partition);
            if (c.total() != pairs.size()) violated = true;
            merge_counts(acc.pairs_by_interval, c);
            acc.trials_with_pair_in.b += c.b ? 1 : 0;
            acc.trials_with_pair_in.p += c.p ? 1 : 0;
            acc.trials_with_pair_in.r += c.r ? 1 : 0;
        }
        // a monochromatic edge needs a conflicting pair when r = 2
        if (o.r == 2 && !check.proper && pairs.empty()) violated = true;
    }

    if (o.count_chains) {
        try {
            const auto chains = count_conflicting_chains(h, t, o.r, o.chain_ceiling);
            acc.conflicting_chains_total += chains;
            if (chains) ++acc.trials_with_conflicting_chain;
            if (!chains && !check.proper) violated = true;
        } catch (const budget_exceeded&) {
            ++acc.chain_overflow_trials;
        }
    }

    if (o.count_short_edges) {
        const auto shorts = short_edges(h, t, o.r, p);
        acc.short_edges_total += shorts.size();
        if (!shorts.empty()) ++acc.trials_with_short_edge;
    }

    if (violated) ++acc.invariant_violations;
}

} // namespace

double default_p(const Hypergraph& h) {
    if (const auto u = uniformity(h)) return bounds::default_rcol_p(static_cast<double>(u->n));
    return 0.5;
}

MonteCarloReport monte_carlo(const Hypergraph& h, const MonteCarloOptions& options) {
    if (options.r < 2) throw invalid_input("r must be at least 2");
    if (options.trials < 1) throw invalid_input("trials must be at least 1");
    if (!validate(h).ok()) throw invalid_input("hypergraph fails validation");
    const double p = options.p.value_or(default_p(h));
    if (!(p > 0.0 && p < 1.0)) throw invalid_input("p must lie in (0,1)");

    const IntervalPartition partition(p);
    const IntervalPartition* attribution = options.r == 2 ? &partition : nullptr;

    MonteCarloReport report = run_blocks<MonteCarloReport>(
        options.trials, options.threads,
        [&](std::uint64_t lo, std::uint64_t hi, MonteCarloReport& acc) {
            for (std::uint64_t i = lo; i < hi; ++i) run_trial(h, options, p, attribution, i, acc);
        },
        merge_reports);
    report.r = options.r;
    report.p = p;
    report.edge_count = h.edge_count();
    report.chains_counted = options.count_chains;
    return report;
}

Proportion monte_carlo_equitable(const Hypergraph& h, int r, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads) {
    if (trials < 1) throw invalid_input("trials must be at least 1");
    return run_blocks<Proportion>(
        trials, threads,
        [&](std::uint64_t lo, std::uint64_t hi, Proportion& acc) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const Coloring c = equitable_partition_color(h, child_seed(seed, i), r);
                ++acc.trials;
                if (is_proper(h, c).proper) ++acc.successes;
            }
        },
        [](Proportion& a, const Proportion& b) {
            a.successes += b.successes;
            a.trials += b.trials;
        });
}

ChainEventCounts chain_event_frequency(const Hypergraph& h, const Chain& chain, int r, double p,
                                       std::uint64_t trials, std::uint64_t seed) {
    if (chain.edges.size() < 2 || chain.links.size() + 1 != chain.edges.size()) {
        throw invalid_input("chain needs at least two edges and one link per consecutive pair");
    }
    const double threshold = (1.0 - p) / static_cast<double>(r);
    ChainEventCounts counts;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const BirthTimes t = sample_birth_times(h.vertex_count(), child_seed(seed, i));
        ++counts.trials;
        bool conflicting = true;
        for (std::size_t j = 0; j + 1 < chain.edges.size() && conflicting; ++j) {
            const Vertex x = chain.links[j];
            conflicting = first_last(h.edge(chain.edges[j]), t).last == x &&
                          first_last(h.edge(chain.edges[j + 1]), t).first == x;
        }
        if (!conflicting) continue;
        ++counts.conflicting;
        const bool any_short = std::any_of(chain.edges.begin(), chain.edges.end(), [&](EdgeId e) {
            return edge_length(h.edge(e), t) < threshold;
        });
        if (!any_short) ++counts.conflicting_without_short;
    }
    return counts;
}

ConditionalPairs conditional_pairs_given_last(const Hypergraph& h, EdgeId e, double s, std::uint64_t trials,
                                              std::uint64_t seed) {
    if (e >= h.edge_count()) throw invalid_input("edge id out of range");
    if (!(s > 0.0 && s < 1.0)) throw invalid_input("s must lie in (0,1)");
    const auto edge = h.edge(e);
    ConditionalPairs out;
    std::vector<double> times(h.vertex_count());
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng(child_seed(seed, i));
        for (auto& x : times) x = rng.uniform01();
        const Vertex last = edge[rng.below(edge.size())];
        for (Vertex v : edge) times[v] = v == last ? s : s * rng.uniform01();
        const BirthTimes t(times);
        ++out.trials;
        for (EdgeId f : h.incident(last)) {
            if (f == e) continue;
            const auto fe = h.edge(f);
            // f must meet e only in `last`, and `last` must be born first in f
            bool single = true;
            for (Vertex w : fe) {
                if (w != last && std::binary_search(edge.begin(), edge.end(), w)) single = false;
            }
            if (single && first_last(fe, t).first == last) ++out.pairs_total;
        }
    }
    return out;
}

double conditional_pairs_exact(const Hypergraph& h, EdgeId e, double s) {
    if (e >= h.edge_count()) throw invalid_input("edge id out of range");
    const auto edge = h.edge(e);
    double sum = 0;
    for (Vertex v : edge) {
        for (EdgeId f : h.incident(v)) {
            if (f == e) continue;
            const auto fe = h.edge(f);
            std::size_t common = 0;
            for (Vertex w : fe) common += std::binary_search(edge.begin(), edge.end(), w) ? 1 : 0;
            if (common == 1) sum += std::pow(1.0 - s, static_cast<double>(fe.size() - 1));
        }
    }
    return sum / static_cast<double>(edge.size());
}

double conditional_pairs_bound(double edge_count, double n, double p) {
    return edge_count / n * std::pow((1.0 + p) / 2.0, n - 1.0);
}

} // namespace hgc::workbench
