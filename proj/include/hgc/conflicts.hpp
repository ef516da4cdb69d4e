#pragma once

#include "hgc/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace hgc {

/// Ordered pair of edge ids.
using EdgePair = std::pair<EdgeId, EdgeId>;

/// An r-chain f_1..f_r: consecutive edges share exactly one vertex (the link),
/// non-consecutive edges are disjoint.
struct Chain {
    std::vector<EdgeId> edges;
    std::vector<Vertex> links; ///< links[i] is the common vertex of edges[i] and edges[i+1]

    friend bool operator==(const Chain&, const Chain&) = default;
    friend auto operator<=>(const Chain& a, const Chain& b) { return a.edges <=> b.edges; }
};

/// Partition of [0,1] into B = [0,(1-p)/2), P = [(1-p)/2,(1+p)/2), R = [(1+p)/2,1].
class IntervalPartition {
public:
    enum class Part { B, P, R };

    /// Throws invalid_input unless p in (0,1).
    explicit IntervalPartition(double p);

    double p() const noexcept { return p_; }
    double b_end() const noexcept { return (1.0 - p_) / 2.0; }
    double r_begin() const noexcept { return (1.0 + p_) / 2.0; }
    Part classify(double t) const noexcept {
        if (t < b_end()) return Part::B;
        if (t < r_begin()) return Part::P;
        return Part::R;
    }

private:
    double p_;
};

struct FirstLast {
    Vertex first;
    Vertex last;
    friend bool operator==(const FirstLast&, const FirstLast&) = default;
};

/// Earliest and latest born vertex of an edge. Throws invalid_input on an empty edge.
FirstLast first_last(std::span<const Vertex> edge, const BirthTimes& t);

/// Span of birth times over the edge. Throws invalid_input on an empty edge.
double edge_length(std::span<const Vertex> edge, const BirthTimes& t);

/// All ordered (e, f), e != f, sharing exactly one vertex; sorted.
std::vector<EdgePair> dangerous_pairs(const Hypergraph& h);

/// All ordered (e, f) where the last vertex of e is the first vertex of f; sorted.
std::vector<EdgePair> conflicting_pairs(const Hypergraph& h, const BirthTimes& t);

inline constexpr std::uint64_t kDefaultChainCeiling = 10'000'000;

/// Visit every ordered r-chain once, in lexicographic order of edge ids.
/// Throws budget_exceeded as soon as more than `ceiling` chains would be produced.
/// Returns the number of chains visited.
std::uint64_t for_each_chain(const Hypergraph& h, int r, const std::function<void(const Chain&)>& visit,
                             std::uint64_t ceiling = kDefaultChainCeiling);

std::vector<Chain> enumerate_chains(const Hypergraph& h, int r, std::uint64_t ceiling = kDefaultChainCeiling);

/// The r-chains in which the last vertex of each f_i is the first vertex of f_{i+1}.
/// Found by a search that only follows conflicting links; the ceiling applies
/// to the number of chains returned.
std::vector<Chain> conflicting_chains(const Hypergraph& h, const BirthTimes& t, int r,
                                      std::uint64_t ceiling = kDefaultChainCeiling);

/// Number of conflicting chains, stopping early once `ceiling` is exceeded
/// (throws budget_exceeded, like conflicting_chains).
std::uint64_t count_conflicting_chains(const Hypergraph& h, const BirthTimes& t, int r,
                                       std::uint64_t ceiling = kDefaultChainCeiling);

/// Edges whose length is below (1-p)/r.
std::vector<EdgeId> short_edges(const Hypergraph& h, const BirthTimes& t, int r, double p);

/// Conflicting pairs attributed to B/P/R by the birth time of the shared vertex.
struct IntervalCounts {
    std::uint64_t b = 0;
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    std::uint64_t total() const noexcept { return b + p + r; }
    friend bool operator==(const IntervalCounts&, const IntervalCounts&) = default;
};

IntervalCounts classify_conflicts_by_interval(const Hypergraph& h, const BirthTimes& t,
                                              const IntervalPartition& partition);

/// Whether t(x_i) lies in [(i - i p)/r, (i + (r-i) p)/r] for every link x_i (1-based i).
/// Holds for every conflicting chain none of whose edges is short.
bool links_within_windows(const Chain& chain, const BirthTimes& t, int r, double p);

} // namespace hgc
