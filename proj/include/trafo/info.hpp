#pragma once

#include <string>
#include <vector>

#include "trafo/transformation.hpp"

namespace trafo {

/// Per-component summary: the cycle points (in cycle order, least first),
/// per-cycle-point incoming-tree sizes, and the depth of the deepest tree
/// (edges on the longest chain feeding the cycle; 0 when there are no trees).
struct ComponentSummary {
    std::vector<int> cycle;
    std::vector<int> tree_sizes;
    int max_tree_depth = 0;
};

/// Aggregated description of one transformation, as printed by the CLI. All
/// fields describe the same object: `images` reinterprets to `canonical`.
struct InfoReport {
    int degree = 0;
    std::vector<int> images;
    std::string canonical;
    bool permutation = false;
    bool idempotent = false;
    std::vector<ComponentSummary> components;
    std::vector<OrbitIndices> orbits; // per point 1..degree; filled on request
};

InfoReport make_info_report(const Transformation& f, bool with_orbits = false);

} // namespace trafo
