#pragma once

#include "hgc/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hgc {

/// Output of one greedy run.
struct GreedyTrace {
    Coloring coloring;
    /// Vertices for which every color was blocked; they received color r.
    std::vector<Vertex> forced_vertices;
    std::vector<Vertex> processing_order;
    /// True if the run stopped at the first forced vertex (oracle mode);
    /// the coloring is then partial.
    bool aborted = false;

    friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

/// Independent uniform [0,1) birth times, deterministic in `seed`.
BirthTimes sample_birth_times(std::size_t vertex_count, std::uint64_t seed);

/// Random greedy r-coloring driven by birth times.
///
/// Vertices are processed in birth order. Each takes the smallest color j
/// such that no edge containing it has all its other vertices already colored
/// j. When every color is blocked the vertex gets color r and is recorded as
/// forced. Requires r >= 2 and t total on h.
GreedyTrace greedy_color(const Hypergraph& h, const BirthTimes& t, int r);

/// Same rule driven by an explicit processing order (must be a permutation of
/// the vertices). With stop_at_first_forced the run ends at the first forced
/// vertex, which is exactly the first moment a monochromatic edge appears.
GreedyTrace greedy_color_by_permutation(const Hypergraph& h, std::span<const Vertex> order, int r,
                                        bool stop_at_first_forced = false);

/// Two-phase variant for r = 2: vertices born in [0,(1-p)/2) get color 1,
/// vertices born in [(1+p)/2,1] get color 2 (both without looking at edges),
/// then the greedy rule colors the rest in birth order with the precolored
/// vertices already in place. Throws invalid_input for r != 2 or p outside (0,1).
GreedyTrace two_phase_color(const Hypergraph& h, const BirthTimes& t, int r, double p);

/// Uniformly random coloring whose color classes differ in size by at most one.
/// With vertex_count = q*r + s, colors 1..s get q+1 vertices and the rest q.
Coloring equitable_partition_color(const Hypergraph& h, std::uint64_t seed, int r);

} // namespace hgc
