#include "trafo/info.hpp"

#include <algorithm>

#include "trafo/canonical.hpp"

namespace trafo {

namespace {

int tree_size(const TreeNode& node) {
    int size = 1;
    for (const TreeNode& child : node.children) {
        size += tree_size(child);
    }
    return size;
}

int tree_depth(const TreeNode& node) {
    int deepest = 0;
    for (const TreeNode& child : node.children) {
        deepest = std::max(deepest, tree_depth(child));
    }
    return deepest + 1;
}

} // namespace

InfoReport make_info_report(const Transformation& f, bool with_orbits) {
    InfoReport report;
    report.degree = f.degree();
    report.images = f.images();
    report.canonical = canonical_form(f);
    report.permutation = is_permutation(f);
    report.idempotent = is_idempotent(f);

    for (const ComponentData& component : decompose(f).components) {
        ComponentSummary summary;
        summary.cycle = component.cycle;
        for (const std::vector<TreeNode>& forest : component.forests) {
            int size = 0;
            for (const TreeNode& tree : forest) {
                size += tree_size(tree);
                summary.max_tree_depth = std::max(summary.max_tree_depth, tree_depth(tree));
            }
            summary.tree_sizes.push_back(size);
        }
        report.components.push_back(std::move(summary));
    }

    if (with_orbits) {
        for (int x = 1; x <= f.degree(); ++x) {
            report.orbits.push_back(orbit_indices(f, x));
        }
    }
    return report;
}

} // namespace trafo
