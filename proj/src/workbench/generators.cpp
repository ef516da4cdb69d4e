#include "hgc/workbench/generators.hpp"

#include "hgc/errors.hpp"
#include "hgc/rng.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace hgc::workbench {
namespace {

void require_shape(std::size_t m, std::size_t n) {
    if (n < 2 || n > m) throw invalid_input("need 2 <= n <= m");
    if (m > std::numeric_limits<Vertex>::max()) throw invalid_input("too many vertices");
}

// Advance a sorted n-subset of {0..m-1} to its lexicographic successor.
bool next_combination(std::vector<Vertex>& c, std::size_t m) {
    const std::size_t n = c.size();
    std::size_t i = n;
    while (i > 0 && c[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < n; ++j) c[j] = c[j - 1] + 1;
    return true;
}

} // namespace

std::uint64_t binomial(std::uint64_t m, std::uint64_t n) {
    if (n > m) return 0;
    n = std::min(n, m - n);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        // acc * (m - n + i) / i stays integral at every step
        const std::uint64_t num = m - n + i;
        const std::uint64_t g = std::gcd(acc, i);
        const std::uint64_t a = acc / g;
        const std::uint64_t d = i / g;
        const std::uint64_t b = num / d;
        if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
        acc = a * b;
    }
    return acc;
}

Hypergraph gen_complete_uniform(std::size_t m, std::size_t n, std::uint64_t edge_budget) {
    require_shape(m, n);
    const std::uint64_t count = binomial(m, n);
    if (count > edge_budget) {
        throw budget_exceeded("C(" + std::to_string(m) + "," + std::to_string(n) + ") exceeds edge budget");
    }
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(count);
    std::vector<Vertex> c(n);
    std::iota(c.begin(), c.end(), Vertex{0});
    do {
        edges.push_back(c);
    } while (next_combination(c, m));
    return Hypergraph(m, edges);
}

Hypergraph gen_random_uniform(std::size_t m, std::size_t n, std::uint64_t edge_count, std::uint64_t seed,
                              std::uint64_t edge_budget) {
    require_shape(m, n);
    const std::uint64_t available = binomial(m, n);
    if (edge_count > available) throw invalid_input("edge_count exceeds C(m, n)");
    if (edge_count > edge_budget) throw budget_exceeded("edge_count exceeds edge budget");
    Rng rng(seed);
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(edge_count);

    if (available <= edge_budget && edge_count * 2 > available) {
        // dense: shuffle the complete list
        edges = gen_complete_uniform(m, n, edge_budget).edge_lists();
        shuffle(edges.begin(), edges.end(), rng);
        edges.resize(edge_count);
        return Hypergraph(m, edges);
    }

    std::set<std::vector<Vertex>> seen;
    std::vector<Vertex> pool(m);
    while (edges.size() < edge_count) {
        // partial Fisher-Yates picks n distinct vertices
        std::iota(pool.begin(), pool.end(), Vertex{0});
        for (std::size_t i = 0; i < n; ++i) {
            const auto j = i + rng.below(m - i);
            std::swap(pool[i], pool[j]);
        }
        std::vector<Vertex> edge(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
        std::sort(edge.begin(), edge.end());
        if (seen.insert(edge).second) edges.push_back(std::move(edge));
    }
    return Hypergraph(m, edges);
}

Hypergraph gen_fano() {
    return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph gen_single_edge(std::size_t n) {
    if (n < 1) throw invalid_input("edge size must be positive");
    std::vector<Vertex> e(n);
    std::iota(e.begin(), e.end(), Vertex{0});
    return Hypergraph(n, {e});
}

Hypergraph gen_chain(std::size_t n, std::size_t r) {
    if (n < 2 || r < 1) throw invalid_input("chain needs n >= 2, r >= 1");
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Vertex> e(n);
        std::iota(e.begin(), e.end(), static_cast<Vertex>(i * (n - 1)));
        edges.push_back(std::move(e));
    }
    return Hypergraph(r * (n - 1) + 1, edges);
}

} // namespace hgc::workbench
