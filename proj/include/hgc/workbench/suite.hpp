#pragma once

#include "hgc/hypergraph.hpp"

#include <string>
#include <vector>

namespace hgc::workbench {

struct SuiteInstance {
    std::string name;
    Hypergraph h;
    int r;
};

/// Forty small instances (at most 8 vertices each) used for oracle agreement
/// and baseline comparisons. Fixed: random members use fixed seeds.
std::vector<SuiteInstance> fixed_suite();

} // namespace hgc::workbench
