#include "hgc/hypergraph.hpp"

#include "hgc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hgc {

Hypergraph::Hypergraph(std::size_t vertex_count, const std::vector<std::vector<Vertex>>& edges)
    : vertex_count_(vertex_count) {
    offsets_.reserve(edges.size() + 1);
    std::size_t total = 0;
    for (const auto& e : edges) total += e.size();
    vertices_.reserve(total);
    for (const auto& e : edges) {
        auto first = vertices_.insert(vertices_.end(), e.begin(), e.end());
        std::sort(first, vertices_.end());
        offsets_.push_back(vertices_.size());
    }

    // incidence lists, skipping out-of-range and repeated entries
    std::vector<std::size_t> degree(vertex_count_, 0);
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto f = edge(e);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < vertex_count_ && (i == 0 || f[i] != f[i - 1])) ++degree[f[i]];
        }
    }
    inc_offsets_.assign(vertex_count_ + 1, 0);
    for (std::size_t v = 0; v < vertex_count_; ++v) inc_offsets_[v + 1] = inc_offsets_[v] + degree[v];
    incidence_.resize(inc_offsets_.back());
    std::vector<std::size_t> fill(inc_offsets_.begin(), inc_offsets_.end() - 1);
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto f = edge(e);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < vertex_count_ && (i == 0 || f[i] != f[i - 1])) incidence_[fill[f[i]]++] = e;
        }
    }
}

std::vector<std::vector<Vertex>> Hypergraph::edge_lists() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(edge_count());
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto f = edge(e);
        out.emplace_back(f.begin(), f.end());
    }
    return out;
}

bool ValidationReport::ok() const noexcept { return violation_count() == 0; }

std::size_t ValidationReport::violation_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(issues.begin(), issues.end(), [](const auto& i) { return !i.is_warning(); }));
}

std::size_t ValidationReport::warning_count() const noexcept {
    return issues.size() - violation_count();
}

ValidationReport validate(const Hypergraph& h) {
    using Kind = ValidationIssue::Kind;
    ValidationReport report;
    std::map<std::vector<Vertex>, EdgeId> seen;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto f = h.edge(e);
        if (f.empty()) {
            report.issues.push_back({Kind::empty_edge, e, 0, "edge " + std::to_string(e) + ": empty edge"});
            continue;
        }
        for (Vertex v : f) {
            if (v >= h.vertex_count()) {
                report.issues.push_back({Kind::index_out_of_range, e, 0,
                                         "edge " + std::to_string(e) + ": vertex " + std::to_string(v) +
                                             " index out of range"});
                break;
            }
        }
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
            report.issues.push_back(
                {Kind::repeated_vertex, e, 0, "edge " + std::to_string(e) + ": repeated vertex"});
        }
        auto [it, fresh] = seen.try_emplace(std::vector<Vertex>(f.begin(), f.end()), e);
        if (!fresh) {
            report.issues.push_back({Kind::duplicate_edge, e, it->second,
                                     "edge " + std::to_string(e) + ": duplicate edge of " +
                                         std::to_string(it->second)});
        }
    }
    return report;
}

std::optional<UniformityCertificate> uniformity(const Hypergraph& h) {
    if (h.edge_count() == 0) return std::nullopt;
    const std::size_t n = h.edge_size(0);
    if (n < 2) return std::nullopt;
    for (EdgeId e = 1; e < h.edge_count(); ++e) {
        if (h.edge_size(e) != n) return std::nullopt;
    }
    return UniformityCertificate{n};
}

std::size_t edge_degree(const Hypergraph& h, EdgeId e) {
    std::vector<EdgeId> met;
    for (Vertex v : h.edge(e)) {
        for (EdgeId g : h.incident(v)) {
            if (g != e) met.push_back(g);
        }
    }
    std::sort(met.begin(), met.end());
    return static_cast<std::size_t>(std::unique(met.begin(), met.end()) - met.begin());
}

std::size_t max_edge_degree(const Hypergraph& h) {
    // stamp array instead of a per-edge sort
    std::vector<EdgeId> stamp(h.edge_count(), static_cast<EdgeId>(-1));
    std::size_t best = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        std::size_t count = 0;
        for (Vertex v : h.edge(e)) {
            for (EdgeId g : h.incident(v)) {
                if (g != e && stamp[g] != e) {
                    stamp[g] = e;
                    ++count;
                }
            }
        }
        best = std::max(best, count);
    }
    return best;
}

ProperCheck is_proper(const Hypergraph& h, const Coloring& c) {
    if (c.colors.size() < h.vertex_count()) {
        throw invalid_input("uncolored vertex " + std::to_string(c.colors.size()));
    }
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        if (c.colors[v] == kUncolored || c.colors[v] > c.r) {
            throw invalid_input("uncolored vertex " + std::to_string(v));
        }
    }
    ProperCheck out;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto f = h.edge(e);
        if (f.empty()) continue;
        const Color first = c.colors[f[0]];
        const bool mono = std::all_of(f.begin(), f.end(), [&](Vertex v) { return c.colors[v] == first; });
        if (mono) out.monochromatic.push_back(e);
    }
    out.proper = out.monochromatic.empty();
    return out;
}

BirthTimes::BirthTimes(std::vector<double> times) : times_(std::move(times)) {
    for (std::size_t v = 0; v < times_.size(); ++v) {
        if (!(times_[v] >= 0.0 && times_[v] <= 1.0)) {
            throw invalid_input("birth time of vertex " + std::to_string(v) + " outside [0,1]");
        }
    }
}

std::vector<Vertex> BirthTimes::order() const {
    std::vector<Vertex> order(times_.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [this](Vertex a, Vertex b) { return before(a, b); });
    return order;
}

void require_total(const Hypergraph& h, const BirthTimes& t) {
    if (t.size() < h.vertex_count()) {
        throw invalid_input("birth time missing for vertex " + std::to_string(t.size()));
    }
}

} // namespace hgc
