#pragma once

#include "hgc/hypergraph.hpp"

#include <cstdint>

namespace hgc::workbench {

inline constexpr std::uint64_t kDefaultEdgeBudget = 5'000'000;

/// C(m, n), or UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t m, std::uint64_t n);

/// All n-subsets of {0..m-1} in lexicographic order. Requires 2 <= n <= m.
Hypergraph gen_complete_uniform(std::size_t m, std::size_t n, std::uint64_t edge_budget = kDefaultEdgeBudget);

/// `edge_count` distinct n-subsets of {0..m-1}, uniformly at random, deterministic in seed.
Hypergraph gen_random_uniform(std::size_t m, std::size_t n, std::uint64_t edge_count, std::uint64_t seed,
                              std::uint64_t edge_budget = kDefaultEdgeBudget);

/// The seven lines of the Fano plane on 7 points.
Hypergraph gen_fano();

/// One edge {0..n-1}.
Hypergraph gen_single_edge(std::size_t n);

/// An explicit r-chain of n-uniform edges: edge i is {i(n-1), ..., i(n-1)+n-1},
/// so consecutive edges share one vertex. Vertices r(n-1)+1.
Hypergraph gen_chain(std::size_t n, std::size_t r);

} // namespace hgc::workbench
