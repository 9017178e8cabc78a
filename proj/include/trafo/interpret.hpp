#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "trafo/ast.hpp"
#include "trafo/transformation.hpp"

namespace trafo {

/// A finite set of individual maps p -> q with pairwise-distinct first
/// coordinates. Point uniqueness in a valid expression guarantees the
/// distinctness; `add` still checks it and throws std::logic_error.
class PairSet {
public:
    void add(int from, int to);
    void merge(const PairSet& other);
    bool maps(int from) const;
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

private:
    std::vector<std::pair<int, int>> pairs_;
};

/// Maps contributed by a tree: nothing for a bare point; for a splat, the
/// subtree maps plus every subtree root mapping to the target; for a
/// conveyor, the subtree maps plus each root mapping to the next root.
PairSet interpret_tree(const AstTree& tree);

/// Maps contributed by a component: a cycle additionally closes the chain of
/// entry roots by mapping the last root back to the first.
PairSet interpret_component(const AstComponent& component);

/// Builds the total transformation denoted by the expression. Every point of
/// {1..degree} that no component maps becomes a fixed point. The default
/// degree is the largest mentioned point (0 for the identity "()"); throws
/// std::invalid_argument if an explicit degree is smaller than that.
Transformation interpret(const CompactAst& ast, std::optional<int> degree = std::nullopt);

/// parse_compact + interpret in one step.
Transformation interpret_compact(std::string_view text, std::optional<int> degree = std::nullopt);

} // namespace trafo
