#include "hgc/greedy.hpp"

#include "hgc/errors.hpp"
#include "hgc/rng.hpp"

#include <limits>
#include <numeric>

namespace hgc {
namespace {

constexpr Color kMixed = std::numeric_limits<Color>::max();

void require_colors(int r) {
    if (r < 2 || r >= kMixed) throw invalid_input("number of colors must be in [2, 65534]");
}

// Per-edge bookkeeping: how many vertices are colored and, if they all agree,
// which color they share (kUncolored when none is colored, kMixed otherwise).
class GreedyEngine {
public:
    GreedyEngine(const Hypergraph& h, int r)
        : h_(h), r_(r), colored_(h.edge_count(), 0), shared_(h.edge_count(), kUncolored),
          blocked_stamp_(static_cast<std::size_t>(r) + 1, 0) {
        trace_.coloring.r = r;
        trace_.coloring.colors.assign(h.vertex_count(), kUncolored);
    }

    void assign(Vertex v, Color c) {
        trace_.coloring.colors[v] = c;
        for (EdgeId e : h_.incident(v)) {
            ++colored_[e];
            if (shared_[e] == kUncolored && colored_[e] == 1) {
                shared_[e] = c;
            } else if (shared_[e] != c) {
                shared_[e] = kMixed;
            }
        }
    }

    // Returns false if v was forced.
    bool step(Vertex v) {
        ++stamp_;
        int blocked = 0;
        for (EdgeId e : h_.incident(v)) {
            const std::size_t size = h_.edge_size(e);
            if (colored_[e] + 1 != size) continue;
            if (size == 1) {
                blocked = r_;
                break;
            }
            const Color c = shared_[e];
            if (c != kMixed && blocked_stamp_[c] != stamp_) {
                blocked_stamp_[c] = stamp_;
                ++blocked;
            }
        }
        Color choice = static_cast<Color>(r_);
        bool forced = blocked >= r_;
        if (!forced) {
            for (Color j = 1; j <= r_; ++j) {
                if (blocked_stamp_[j] != stamp_) {
                    choice = j;
                    break;
                }
            }
        } else {
            trace_.forced_vertices.push_back(v);
        }
        trace_.processing_order.push_back(v);
        assign(v, choice);
        return !forced;
    }

    GreedyTrace take() { return std::move(trace_); }
    GreedyTrace& trace() { return trace_; }

private:
    const Hypergraph& h_;
    int r_;
    std::vector<std::size_t> colored_;
    std::vector<Color> shared_;
    std::vector<std::uint64_t> blocked_stamp_;
    std::uint64_t stamp_ = 0;
    GreedyTrace trace_;
};

std::vector<Vertex> birth_order(const Hypergraph& h, const BirthTimes& t) {
    std::vector<Vertex> order = t.order();
    std::erase_if(order, [&](Vertex v) { return v >= h.vertex_count(); });
    return order;
}

} // namespace

BirthTimes sample_birth_times(std::size_t vertex_count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> times(vertex_count);
    for (auto& t : times) t = rng.uniform01();
    return BirthTimes(std::move(times));
}

GreedyTrace greedy_color_by_permutation(const Hypergraph& h, std::span<const Vertex> order, int r,
                                        bool stop_at_first_forced) {
    require_colors(r);
    if (order.size() != h.vertex_count()) throw invalid_input("order is not a permutation of the vertices");
    std::vector<char> seen(h.vertex_count(), 0);
    for (Vertex v : order) {
        if (v >= h.vertex_count() || seen[v]) throw invalid_input("order is not a permutation of the vertices");
        seen[v] = 1;
    }
    GreedyEngine engine(h, r);
    engine.trace().processing_order.reserve(order.size());
    for (Vertex v : order) {
        if (!engine.step(v) && stop_at_first_forced) {
            engine.trace().aborted = true;
            break;
        }
    }
    return engine.take();
}

GreedyTrace greedy_color(const Hypergraph& h, const BirthTimes& t, int r) {
    require_total(h, t);
    require_colors(r);
    return greedy_color_by_permutation(h, birth_order(h, t), r);
}

GreedyTrace two_phase_color(const Hypergraph& h, const BirthTimes& t, int r, double p) {
    if (r != 2) throw invalid_input("two-phase coloring is only defined for r = 2");
    if (!(p > 0.0 && p < 1.0)) throw invalid_input("p must lie in (0,1)");
    require_total(h, t);
    const double b_end = (1.0 - p) / 2.0;
    const double r_begin = (1.0 + p) / 2.0;

    const std::vector<Vertex> order = birth_order(h, t);
    GreedyEngine engine(h, r);
    auto& trace = engine.trace();
    std::vector<Vertex> middle;
    for (Vertex v : order) {
        if (t[v] < b_end) {
            trace.processing_order.push_back(v);
            engine.assign(v, 1);
        } else if (t[v] >= r_begin) {
            trace.processing_order.push_back(v);
            engine.assign(v, 2);
        } else {
            middle.push_back(v);
        }
    }
    for (Vertex v : middle) engine.step(v);
    return engine.take();
}

Coloring equitable_partition_color(const Hypergraph& h, std::uint64_t seed, int r) {
    require_colors(r);
    Rng rng(seed);
    std::vector<Vertex> perm(h.vertex_count());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    shuffle(perm.begin(), perm.end(), rng);
    Coloring c;
    c.r = r;
    c.colors.assign(h.vertex_count(), kUncolored);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        c.colors[perm[i]] = static_cast<Color>(i % static_cast<std::size_t>(r) + 1);
    }
    return c;
}

} // namespace hgc
