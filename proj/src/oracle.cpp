#include "hgc/oracle.hpp"

#include "hgc/errors.hpp"
#include "hgc/greedy.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

namespace hgc::oracle {
namespace {

void require_colors(int r, int max_r) {
    if (r < 2 || r > max_r) throw invalid_input("number of colors out of range for the oracle");
}

// Backtracking with forward checking over per-vertex color masks.
class ColorSearch {
public:
    ColorSearch(const Hypergraph& h, int r, std::uint64_t node_budget)
        : h_(h), r_(r), budget_(node_budget), colors_(h.vertex_count(), kUncolored),
          domain_(h.vertex_count(), full_mask(r)), colored_(h.edge_count(), 0) {}

    bool solve() { return descend(0, 0); }
    Coloring witness() const { return Coloring{colors_, r_}; }

private:
    static std::uint64_t full_mask(int r) { return r >= 64 ? ~0ULL : ((1ULL << r) - 1); }

    bool descend(Vertex v, int max_used) {
        if (v == h_.vertex_count()) return true;
        if (++nodes_ > budget_) {
            throw budget_exceeded("colorability search exceeded " + std::to_string(budget_) + " nodes");
        }
        // colors above max_used + 1 are interchangeable with max_used + 1
        const int limit = std::min(r_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (!(domain_[v] >> (c - 1) & 1ULL)) continue;
            const std::size_t mark = trail_.size();
            if (assign(v, static_cast<Color>(c)) && descend(v + 1, std::max(max_used, c))) return true;
            unassign(v, mark);
        }
        return false;
    }

    // Colors v and prunes domains of vertices left alone in a one-colored edge.
    bool assign(Vertex v, Color c) {
        colors_[v] = c;
        for (EdgeId e : h_.incident(v)) ++colored_[e];
        bool ok = true;
        for (EdgeId e : h_.incident(v)) {
            const auto f = h_.edge(e);
            if (colored_[e] == f.size()) {
                if (std::all_of(f.begin(), f.end(), [&](Vertex u) { return colors_[u] == c; })) ok = false;
            } else if (colored_[e] + 1 == f.size()) {
                Vertex open = 0;
                bool same = true;
                for (Vertex u : f) {
                    if (colors_[u] == kUncolored) {
                        open = u;
                    } else if (colors_[u] != c) {
                        same = false;
                    }
                }
                if (same) {
                    const std::uint64_t bit = 1ULL << (c - 1);
                    if (domain_[open] & bit) {
                        trail_.emplace_back(open, domain_[open]);
                        domain_[open] &= ~bit;
                        if (domain_[open] == 0) ok = false;
                    }
                }
            }
            if (!ok) break;
        }
        return ok;
    }

    void unassign(Vertex v, std::size_t mark) {
        while (trail_.size() > mark) {
            domain_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
        for (EdgeId e : h_.incident(v)) --colored_[e];
        colors_[v] = kUncolored;
    }

    const Hypergraph& h_;
    int r_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Color> colors_;
    std::vector<std::uint64_t> domain_;
    std::vector<std::size_t> colored_;
    std::vector<std::pair<Vertex, std::uint64_t>> trail_;
};

// r^v, or nullopt past `cap`.
std::optional<std::uint64_t> bounded_power(std::uint64_t r, std::size_t v, std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < v; ++i) {
        if (acc > cap / r) return std::nullopt;
        acc *= r;
    }
    return acc;
}

std::optional<std::uint64_t> bounded_factorial(std::size_t v, std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (std::size_t i = 2; i <= v; ++i) {
        if (acc > cap / i) return std::nullopt;
        acc *= i;
    }
    return acc;
}

} // namespace

Colorability is_r_colorable(const Hypergraph& h, int r, const Budget& budget) {
    require_colors(r, 64);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (h.edge_size(e) == 1) return {false, std::nullopt};
    }
    ColorSearch search(h, r, budget.search_nodes);
    if (!search.solve()) return {false, std::nullopt};
    return {true, search.witness()};
}

std::uint64_t count_proper_colorings(const Hypergraph& h, int r, const Budget& budget) {
    require_colors(r, 65534);
    const std::size_t v = h.vertex_count();
    if (!bounded_power(static_cast<std::uint64_t>(r), v, budget.colorings)) {
        throw budget_exceeded("r^|V| exceeds coloring budget of " + std::to_string(budget.colorings));
    }
    std::vector<Color> c(v, 1);
    std::uint64_t count = 0;
    while (true) {
        bool proper = true;
        for (EdgeId e = 0; e < h.edge_count() && proper; ++e) {
            const auto f = h.edge(e);
            proper = !std::all_of(f.begin(), f.end(), [&](Vertex u) { return c[u] == c[f[0]]; });
        }
        count += proper;
        // odometer increment
        std::size_t i = 0;
        while (i < v && c[i] == r) c[i++] = 1;
        if (i == v) break;
        ++c[i];
    }
    return count;
}

std::uint64_t OrderingStatistics::numerator() const {
    const std::uint64_t g = std::gcd(proper_orderings, total_orderings);
    return g ? proper_orderings / g : 0;
}

std::uint64_t OrderingStatistics::denominator() const {
    const std::uint64_t g = std::gcd(proper_orderings, total_orderings);
    return g ? total_orderings / g : 1;
}

OrderingStatistics greedy_success_exact(const Hypergraph& h, int r, const Budget& budget) {
    require_colors(r, 65534);
    const std::size_t v = h.vertex_count();
    const auto total = bounded_factorial(v, budget.orderings);
    if (!total) throw budget_exceeded("|V|! exceeds ordering budget of " + std::to_string(budget.orderings));
    if (v == 0) {
        return {1, h.edge_count() == 0 ? 1u : 0u};
    }

    // a run is proper exactly when no vertex is forced, so each order can stop
    // at its first forced vertex
    auto count_from = [&](Vertex first) {
        std::vector<Vertex> order(v);
        std::iota(order.begin(), order.end(), Vertex{0});
        std::rotate(order.begin(), order.begin() + first, order.begin() + first + 1);
        std::uint64_t proper = 0;
        do {
            proper += !greedy_color_by_permutation(h, order, r, true).aborted;
        } while (std::next_permutation(order.begin() + 1, order.end()));
        return proper;
    };

    unsigned threads = budget.threads ? budget.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(v));
    std::vector<std::uint64_t> per_first(v, 0);
    if (threads <= 1) {
        for (Vertex f = 0; f < v; ++f) per_first[f] = count_from(f);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (Vertex f = w; f < v; f += threads) per_first[f] = count_from(f);
            });
        }
    }
    return {*total, std::accumulate(per_first.begin(), per_first.end(), std::uint64_t{0})};
}

} // namespace hgc::oracle
