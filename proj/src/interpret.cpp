#include "trafo/interpret.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "trafo/parser.hpp"

namespace trafo {

void PairSet::add(int from, int to) {
    if (maps(from)) {
        throw std::logic_error("point " + std::to_string(from) + " already has an image");
    }
    pairs_.emplace_back(from, to);
}

void PairSet::merge(const PairSet& other) {
    for (const auto& [from, to] : other.pairs_) {
        add(from, to);
    }
}

bool PairSet::maps(int from) const {
    for (const auto& [p, q] : pairs_) {
        if (p == from) {
            return true;
        }
    }
    return false;
}

PairSet interpret_tree(const AstTree& tree) {
    PairSet out;
    switch (tree.kind) {
    case AstTree::Kind::point:
        break;
    case AstTree::Kind::splat:
        for (const AstTree& sub : tree.trees) {
            out.merge(interpret_tree(sub));
        }
        for (const AstTree& sub : tree.trees) {
            out.add(root(sub), tree.point);
        }
        break;
    case AstTree::Kind::conveyor:
        for (const AstTree& sub : tree.trees) {
            out.merge(interpret_tree(sub));
        }
        for (std::size_t i = 0; i + 1 < tree.trees.size(); ++i) {
            out.add(root(tree.trees[i]), root(tree.trees[i + 1]));
        }
        break;
    }
    return out;
}

PairSet interpret_component(const AstComponent& component) {
    if (!component.cycle) {
        return interpret_tree(component.trees.front());
    }
    PairSet out;
    for (const AstTree& tree : component.trees) {
        out.merge(interpret_tree(tree));
    }
    for (std::size_t i = 0; i + 1 < component.trees.size(); ++i) {
        out.add(root(component.trees[i]), root(component.trees[i + 1]));
    }
    out.add(root(component.trees.back()), root(component.trees.front()));
    return out;
}

Transformation interpret(const CompactAst& ast, std::optional<int> degree) {
    const int needed = max_point(ast);
    const int n = degree.value_or(needed);
    if (n < needed) {
        throw std::invalid_argument("degree " + std::to_string(n) +
                                    " is smaller than the largest mentioned point " +
                                    std::to_string(needed));
    }
    PairSet all;
    for (const AstComponent& component : ast.components) {
        all.merge(interpret_component(component));
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1); // unmapped points stay fixed
    for (const auto& [from, to] : all.pairs()) {
        images[static_cast<std::size_t>(from) - 1] = to;
    }
    return Transformation(std::move(images));
}

Transformation interpret_compact(std::string_view text, std::optional<int> degree) {
    return interpret(parse_compact(text), degree);
}

} // namespace trafo
