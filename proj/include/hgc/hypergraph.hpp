#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgc {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::uint16_t;

/// Color value meaning "not yet colored". Real colors are 1..r.
inline constexpr Color kUncolored = 0;

/// A finite hypergraph on vertices 0..vertex_count-1.
///
/// Edges are stored in the order given, each with its vertices sorted
/// ascending. Construction never throws on bad data: out-of-range or
/// repeated vertices are kept verbatim so that validate() can report them.
/// Algorithms downstream require a valid instance.
///
/// Immutable after construction; safe to share between threads.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t vertex_count, const std::vector<std::vector<Vertex>>& edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return offsets_.size() - 1; }

    std::span<const Vertex> edge(EdgeId e) const noexcept {
        return {vertices_.data() + offsets_[e], offsets_[e + 1] - offsets_[e]};
    }
    std::size_t edge_size(EdgeId e) const noexcept { return offsets_[e + 1] - offsets_[e]; }

    /// Edges containing `v`, ascending edge id. Empty for out-of-range v.
    std::span<const EdgeId> incident(Vertex v) const noexcept {
        if (v >= vertex_count_) return {};
        return {incidence_.data() + inc_offsets_[v], inc_offsets_[v + 1] - inc_offsets_[v]};
    }

    /// Flat vertex array; edge e occupies [offsets()[e], offsets()[e+1]).
    std::span<const Vertex> flat_vertices() const noexcept { return vertices_; }
    std::span<const std::size_t> offsets() const noexcept { return offsets_; }

    std::vector<std::vector<Vertex>> edge_lists() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.offsets_ == b.offsets_ &&
               a.vertices_ == b.vertices_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> inc_offsets_{0};
    std::vector<EdgeId> incidence_;
};

struct ValidationIssue {
    enum class Kind { index_out_of_range, empty_edge, repeated_vertex, duplicate_edge };
    Kind kind;
    EdgeId edge;
    /// For duplicate_edge: the earlier edge this one repeats.
    EdgeId other = 0;
    std::string message;

    bool is_warning() const noexcept { return kind == Kind::duplicate_edge; }
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept;           ///< no violations (warnings allowed)
    bool clean() const noexcept { return issues.empty(); }
    std::size_t violation_count() const noexcept;
    std::size_t warning_count() const noexcept;
};

ValidationReport validate(const Hypergraph& h);

/// Common edge size n >= 2 if every edge has exactly n vertices; absent otherwise,
/// including for an edgeless hypergraph.
struct UniformityCertificate {
    std::size_t n;
};
std::optional<UniformityCertificate> uniformity(const Hypergraph& h);

/// Number of OTHER edges meeting the given edge.
std::size_t edge_degree(const Hypergraph& h, EdgeId e);

/// Max over edges of edge_degree; 0 for an edgeless hypergraph.
std::size_t max_edge_degree(const Hypergraph& h);

/// Total vertex coloring with colors 1..r.
struct Coloring {
    std::vector<Color> colors;
    int r = 2;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ProperCheck {
    bool proper = true;
    std::vector<EdgeId> monochromatic;
};

/// Throws invalid_input("uncolored vertex ...") if some vertex of h has no color
/// or a color outside 1..r.
ProperCheck is_proper(const Hypergraph& h, const Coloring& c);

/// Birth times in [0,1]. The processing order sorts ascending by time with
/// ties broken by ascending vertex index.
class BirthTimes {
public:
    BirthTimes() = default;
    explicit BirthTimes(std::vector<double> times);

    std::size_t size() const noexcept { return times_.size(); }
    double operator[](Vertex v) const noexcept { return times_[v]; }
    std::span<const double> values() const noexcept { return times_; }

    /// true iff u is born strictly before v under the tie-break rule.
    bool before(Vertex u, Vertex v) const noexcept {
        return times_[u] < times_[v] || (times_[u] == times_[v] && u < v);
    }

    std::vector<Vertex> order() const;

    friend bool operator==(const BirthTimes&, const BirthTimes&) = default;

private:
    std::vector<double> times_;
};

/// Throws invalid_input unless t covers every vertex of h.
void require_total(const Hypergraph& h, const BirthTimes& t);

} // namespace hgc
