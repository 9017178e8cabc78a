#include "trafo/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "trafo/interpret.hpp"
#include "trafo/parser.hpp"

namespace trafo {

namespace {

std::string render_into(int point, const std::vector<TreeNode>& trees);

std::string render_tree(const TreeNode& node) {
    return render_into(node.point, node.children);
}

std::string render_splat(int target, const std::vector<TreeNode>& trees) {
    std::vector<const TreeNode*> subs;
    subs.reserve(trees.size());
    for (const TreeNode& t : trees) {
        subs.push_back(&t);
    }
    std::sort(subs.begin(), subs.end(),
              [](const TreeNode* a, const TreeNode* b) { return min_point(*a) < min_point(*b); });
    std::string out = "[";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += render_tree(*subs[i]);
    }
    out += '|';
    out += std::to_string(target);
    out += ']';
    return out;
}

// Notation for `point` including its incoming trees: a bare point, a splat,
// or a conveyor belt walked backward while the preimage is unique.
std::string render_into(int point, const std::vector<TreeNode>& trees) {
    if (trees.empty()) {
        return std::to_string(point);
    }
    if (trees.size() >= 2) {
        return render_splat(point, trees);
    }
    std::vector<const TreeNode*> chain;
    const TreeNode* cur = &trees.front();
    while (cur->children.size() == 1) {
        chain.push_back(cur);
        cur = &cur->children.front();
    }
    chain.push_back(cur); // 0 or >= 2 children: bare point or splat
    std::string out = "[";
    out += cur->children.empty() ? std::to_string(cur->point)
                                 : render_splat(cur->point, cur->children);
    for (std::size_t i = chain.size() - 1; i-- > 0;) {
        out += ',';
        out += std::to_string(chain[i]->point);
    }
    out += ',';
    out += std::to_string(point);
    out += ']';
    return out;
}

bool is_bare_point(const AstTree& tree) {
    return tree.kind == AstTree::Kind::point;
}

} // namespace

std::string canonical_form(const Transformation& f) {
    const Decomposition d = decompose(f);
    std::string out;
    for (const ComponentData& component : d.components) {
        if (component.cycle.size() == 1) {
            if (component.forests.front().empty()) {
                continue; // singleton components are not written
            }
            out += render_into(component.cycle.front(), component.forests.front());
            continue;
        }
        out += '(';
        for (std::size_t i = 0; i < component.cycle.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += render_into(component.cycle[i], component.forests[i]);
        }
        out += ')';
    }
    if (out.empty()) {
        out = "()";
    }
    return out;
}

bool is_canonical(std::string_view text) {
    return canonical_form(interpret(parse_compact(text))) == text;
}

bool structural_idempotent(std::string_view text) {
    if (!is_canonical(text)) {
        throw std::invalid_argument("not a canonical form: " + std::string(text));
    }
    const CompactAst ast = parse_compact(text);
    for (const AstComponent& component : ast.components) {
        if (component.cycle) {
            return false;
        }
        const AstTree& tree = component.trees.front();
        switch (tree.kind) {
        case AstTree::Kind::conveyor:
            if (tree.trees.size() != 2 || !is_bare_point(tree.trees[0]) ||
                !is_bare_point(tree.trees[1])) {
                return false;
            }
            break;
        case AstTree::Kind::splat:
            if (!std::all_of(tree.trees.begin(), tree.trees.end(), is_bare_point)) {
                return false;
            }
            break;
        case AstTree::Kind::point:
            return false; // unreachable in canonical text
        }
    }
    return true;
}

} // namespace trafo
