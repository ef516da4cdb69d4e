#include "hgc/workbench/suite.hpp"

#include "hgc/workbench/generators.hpp"

namespace hgc::workbench {
namespace {

Hypergraph cycle_graph(std::size_t m) {
    std::vector<std::vector<Vertex>> edges;
    for (Vertex i = 0; i < m; ++i) {
        Vertex a = i;
        Vertex b = static_cast<Vertex>((i + 1) % m);
        if (a > b) std::swap(a, b);
        edges.push_back({a, b});
    }
    return Hypergraph(m, edges);
}

} // namespace

std::vector<SuiteInstance> fixed_suite() {
    std::vector<SuiteInstance> s;
    auto add = [&](std::string name, Hypergraph h, int r) { s.push_back({std::move(name), std::move(h), r}); };

    add("single-edge-2", gen_single_edge(2), 2);
    add("single-edge-3", gen_single_edge(3), 2);
    add("path-6", gen_chain(2, 6), 2);
    add("single-edge-8", gen_single_edge(8), 3);
    add("path-2", gen_chain(2, 2), 2);
    add("path-4", gen_chain(2, 4), 2);
    add("chain-3x2", gen_chain(3, 2), 2);
    add("chain-3x3", gen_chain(3, 3), 3);
    add("triangle-r2", cycle_graph(3), 2);
    add("triangle-r3", cycle_graph(3), 3);
    add("cycle-4", cycle_graph(4), 2);
    add("cycle-5-r2", cycle_graph(5), 2);
    add("cycle-5-r3", cycle_graph(5), 3);
    add("cycle-6", cycle_graph(6), 2);
    add("rand-8-3-40-r3", gen_random_uniform(8, 3, 40, 26), 3);
    add("k4-graph-r3", gen_complete_uniform(4, 2), 3);
    add("k4-graph-r4", gen_complete_uniform(4, 2), 4);
    add("k5-graph-r4", gen_complete_uniform(5, 2), 4);
    add("fano-r2", gen_fano(), 2);
    add("fano-r3", gen_fano(), 3);
    add("rand-7-3-12", gen_random_uniform(7, 3, 12, 28), 2);
    add("k5-3", gen_complete_uniform(5, 3), 2);
    add("k6-3", gen_complete_uniform(6, 3), 2);
    add("rand-8-3-45-r3", gen_random_uniform(8, 3, 45, 30), 3);
    add("k6-4", gen_complete_uniform(6, 4), 2);
    add("k7-4", gen_complete_uniform(7, 4), 2);
    add("k8-5", gen_complete_uniform(8, 5), 2);
    add("k7-3-r3", gen_complete_uniform(7, 3), 3);
    add("rand-6-3-6", gen_random_uniform(6, 3, 6, 11), 2);
    add("rand-7-3-10", gen_random_uniform(7, 3, 10, 12), 2);
    add("rand-8-3-12", gen_random_uniform(8, 3, 12, 13), 2);
    add("rand-8-3-14", gen_random_uniform(8, 3, 14, 22), 2);
    add("rand-8-4-10", gen_random_uniform(8, 4, 10, 15), 2);
    add("rand-8-4-30", gen_random_uniform(8, 4, 30, 16), 2);
    add("rand-7-2-10-r3", gen_random_uniform(7, 2, 10, 17), 3);
    add("rand-8-2-13-r3", gen_random_uniform(8, 2, 13, 31), 3);
    add("rand-8-3-30-r3", gen_random_uniform(8, 3, 30, 19), 3);
    add("rand-8-4-50", gen_random_uniform(8, 4, 50, 25), 2);
    add("rand-8-4-40", gen_random_uniform(8, 4, 40, 24), 2);
    add("sunflower-3", Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}), 2);
    return s;
}

} // namespace hgc::workbench
