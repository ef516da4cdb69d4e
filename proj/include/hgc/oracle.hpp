#pragma once

#include "hgc/hypergraph.hpp"

#include <cstdint>
#include <optional>

namespace hgc::oracle {

/// Work limits for the exhaustive routines. Exceeding one throws budget_exceeded.
struct Budget {
    /// Backtracking nodes for is_r_colorable.
    std::uint64_t search_nodes = 50'000'000;
    /// r^|V| for count_proper_colorings.
    std::uint64_t colorings = 100'000'000;
    /// |V|! for greedy_success_exact (10! by default).
    std::uint64_t orderings = 3'628'800;
    /// Worker threads for greedy_success_exact; 0 = hardware concurrency.
    unsigned threads = 1;
};

struct Colorability {
    bool colorable = false;
    std::optional<Coloring> witness;
};

/// Exact r-colorability by backtracking. Vertices are colored in index
/// order; an edge whose vertices are all colored but one, and all with the
/// same color, removes that color from its last vertex.
Colorability is_r_colorable(const Hypergraph& h, int r, const Budget& budget = {});

/// Exact number of proper r-colorings by exhaustive enumeration of all r^|V|
/// colorings (independent of the backtracking search).
std::uint64_t count_proper_colorings(const Hypergraph& h, int r, const Budget& budget = {});

/// Success probability of the greedy algorithm over all |V|! processing orders,
/// as an exact fraction.
struct OrderingStatistics {
    std::uint64_t total_orderings = 0;
    std::uint64_t proper_orderings = 0;

    /// proper/total in lowest terms.
    std::uint64_t numerator() const;
    std::uint64_t denominator() const;
    double probability() const {
        return total_orderings ? static_cast<double>(proper_orderings) / static_cast<double>(total_orderings) : 0.0;
    }
    friend bool operator==(const OrderingStatistics&, const OrderingStatistics&) = default;
};

OrderingStatistics greedy_success_exact(const Hypergraph& h, int r, const Budget& budget = {});

} // namespace hgc::oracle
