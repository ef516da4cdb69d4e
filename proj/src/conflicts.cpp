#include "hgc/conflicts.hpp"

#include "hgc/errors.hpp"
#include "hgc/kernels.hpp"

#include <algorithm>

namespace hgc {
namespace {

void require_chain_length(int r) {
    if (r < 2) throw invalid_input("chains need r >= 2");
}

[[noreturn]] void chain_overflow(std::uint64_t ceiling) {
    throw budget_exceeded("chain count exceeds ceiling of " + std::to_string(ceiling));
}

std::vector<FirstLast> all_first_last(const Hypergraph& h, const BirthTimes& t) {
    std::vector<FirstLast> out;
    out.reserve(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) out.push_back(first_last(h.edge(e), t));
    return out;
}

bool contains(std::span<const Vertex> sorted_edge, Vertex v) {
    return std::binary_search(sorted_edge.begin(), sorted_edge.end(), v);
}

// Depth-first chain builder shared by the plain and the conflicting search.
class ChainSearch {
public:
    ChainSearch(const Hypergraph& h, int r, std::uint64_t ceiling)
        : h_(h), r_(static_cast<std::size_t>(r)), ceiling_(ceiling), cover_(h.vertex_count(), 0) {
        chain_.edges.reserve(r_);
        chain_.links.reserve(r_);
    }

    // `next` yields (link vertex, candidate edge) pairs for the current tail.
    template <class Next, class Visit>
    std::uint64_t run(Next&& next, Visit&& visit) {
        for (EdgeId e = 0; e < h_.edge_count(); ++e) {
            if (h_.edge_size(e) == 0) continue;
            chain_.edges.assign(1, e);
            chain_.links.clear();
            extend(next, visit);
        }
        return count_;
    }

private:
    template <class Next, class Visit>
    void extend(Next& next, Visit& visit) {
        if (chain_.edges.size() == r_) {
            if (++count_ > ceiling_) chain_overflow(ceiling_);
            visit(chain_);
            return;
        }
        const EdgeId tail = chain_.edges.back();
        std::vector<std::pair<EdgeId, Vertex>> candidates;
        next(tail, [&](Vertex x, EdgeId g) {
            if (g != tail && admissible(tail, g)) candidates.emplace_back(g, x);
        });
        std::sort(candidates.begin(), candidates.end());

        // cover_ counts the edges before the tail; while recursing past g the
        // tail joins them
        for (Vertex v : h_.edge(tail)) ++cover_[v];
        for (auto [g, x] : candidates) {
            chain_.edges.push_back(g);
            chain_.links.push_back(x);
            extend(next, visit);
            chain_.edges.pop_back();
            chain_.links.pop_back();
        }
        for (Vertex v : h_.edge(tail)) --cover_[v];
    }

    // g meets tail in exactly one vertex and avoids every edge before tail.
    bool admissible(EdgeId tail, EdgeId g) const {
        auto f = h_.edge(tail);
        std::size_t common = 0;
        for (Vertex u : h_.edge(g)) {
            if (cover_[u] > 0) return false;
            if (contains(f, u) && ++common > 1) return false;
        }
        return common == 1;
    }

    const Hypergraph& h_;
    std::size_t r_;
    std::uint64_t ceiling_;
    std::uint64_t count_ = 0;
    std::vector<std::uint32_t> cover_;
    Chain chain_;
};

} // namespace

IntervalPartition::IntervalPartition(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0)) throw invalid_input("interval parameter p must lie in (0,1)");
}

FirstLast first_last(std::span<const Vertex> edge, const BirthTimes& t) {
    if (edge.empty()) throw invalid_input("first/last of an empty edge");
    FirstLast out{edge[0], edge[0]};
    for (Vertex v : edge.subspan(1)) {
        if (t.before(v, out.first)) out.first = v;
        if (t.before(out.last, v)) out.last = v;
    }
    return out;
}

double edge_length(std::span<const Vertex> edge, const BirthTimes& t) {
    if (edge.empty()) throw invalid_input("length of an empty edge");
    double lo = t[edge[0]];
    double hi = lo;
    for (Vertex v : edge.subspan(1)) {
        lo = std::min(lo, t[v]);
        hi = std::max(hi, t[v]);
    }
    return hi - lo;
}

std::vector<EdgePair> dangerous_pairs(const Hypergraph& h) {
    std::vector<EdgePair> out;
    std::vector<std::uint32_t> shared(h.edge_count(), 0);
    std::vector<EdgeId> touched;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        touched.clear();
        for (Vertex v : h.edge(e)) {
            for (EdgeId g : h.incident(v)) {
                if (g == e) continue;
                if (shared[g]++ == 0) touched.push_back(g);
            }
        }
        std::sort(touched.begin(), touched.end());
        for (EdgeId g : touched) {
            if (shared[g] == 1) out.emplace_back(e, g);
            shared[g] = 0;
        }
    }
    return out;
}

std::vector<EdgePair> conflicting_pairs(const Hypergraph& h, const BirthTimes& t) {
    require_total(h, t);
    const auto fl = all_first_last(h, t);
    std::vector<EdgePair> out;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const Vertex x = fl[e].last;
        for (EdgeId f : h.incident(x)) {
            if (f != e && fl[f].first == x) out.emplace_back(e, f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t for_each_chain(const Hypergraph& h, int r, const std::function<void(const Chain&)>& visit,
                             std::uint64_t ceiling) {
    require_chain_length(r);
    ChainSearch search(h, r, ceiling);
    auto next = [&h](EdgeId tail, auto&& emit) {
        for (Vertex x : h.edge(tail)) {
            for (EdgeId g : h.incident(x)) emit(x, g);
        }
    };
    return search.run(next, visit);
}

std::vector<Chain> enumerate_chains(const Hypergraph& h, int r, std::uint64_t ceiling) {
    std::vector<Chain> out;
    for_each_chain(h, r, [&](const Chain& c) { out.push_back(c); }, ceiling);
    return out;
}

std::vector<Chain> conflicting_chains(const Hypergraph& h, const BirthTimes& t, int r, std::uint64_t ceiling) {
    require_chain_length(r);
    require_total(h, t);
    const auto fl = all_first_last(h, t);
    std::vector<Chain> out;
    ChainSearch search(h, r, ceiling);
    auto next = [&](EdgeId tail, auto&& emit) {
        const Vertex x = fl[tail].last;
        for (EdgeId g : h.incident(x)) {
            if (fl[g].first == x) emit(x, g);
        }
    };
    search.run(next, [&](const Chain& c) { out.push_back(c); });
    return out;
}

std::uint64_t count_conflicting_chains(const Hypergraph& h, const BirthTimes& t, int r, std::uint64_t ceiling) {
    require_chain_length(r);
    require_total(h, t);
    const auto fl = all_first_last(h, t);
    ChainSearch search(h, r, ceiling);
    auto next = [&](EdgeId tail, auto&& emit) {
        const Vertex x = fl[tail].last;
        for (EdgeId g : h.incident(x)) {
            if (fl[g].first == x) emit(x, g);
        }
    };
    return search.run(next, [](const Chain&) {});
}

std::vector<EdgeId> short_edges(const Hypergraph& h, const BirthTimes& t, int r, double p) {
    require_total(h, t);
    const double threshold = (1.0 - p) / r;
    std::vector<EdgeId> out;
    if (auto u = uniformity(h)) {
        std::vector<double> spans(h.edge_count());
        kernels::uniform_edge_spans(h.flat_vertices(), u->n, t.values(), spans);
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            if (spans[e] < threshold) out.push_back(e);
        }
        return out;
    }
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (h.edge_size(e) > 0 && edge_length(h.edge(e), t) < threshold) out.push_back(e);
    }
    return out;
}

IntervalCounts classify_conflicts_by_interval(const Hypergraph& h, const BirthTimes& t,
                                              const IntervalPartition& partition) {
    IntervalCounts counts;
    const auto fl = all_first_last(h, t);
    for (auto [e, f] : conflicting_pairs(h, t)) {
        (void)f;
        switch (partition.classify(t[fl[e].last])) {
        case IntervalPartition::Part::B: ++counts.b; break;
        case IntervalPartition::Part::P: ++counts.p; break;
        case IntervalPartition::Part::R: ++counts.r; break;
        }
    }
    return counts;
}

bool links_within_windows(const Chain& chain, const BirthTimes& t, int r, double p) {
    constexpr double slack = 1e-12;
    for (std::size_t k = 0; k < chain.links.size(); ++k) {
        const double i = static_cast<double>(k + 1);
        const double lo = (i - i * p) / r;
        const double hi = (i + (r - i) * p) / r;
        const double x = t[chain.links[k]];
        if (x < lo - slack || x > hi + slack) return false;
    }
    return true;
}

} // namespace hgc
