#include "trafo/ast.hpp"

#include <algorithm>

namespace trafo {

namespace {

void collect_points(const AstTree& tree, std::vector<int>& out) {
    if (tree.kind == AstTree::Kind::point || tree.kind == AstTree::Kind::splat) {
        out.push_back(tree.point);
    }
    for (const AstTree& sub : tree.trees) {
        collect_points(sub, out);
    }
}

void emit_tree(const AstTree& tree, std::string& out) {
    switch (tree.kind) {
    case AstTree::Kind::point:
        out += std::to_string(tree.point);
        return;
    case AstTree::Kind::conveyor:
        out += '[';
        for (std::size_t i = 0; i < tree.trees.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            emit_tree(tree.trees[i], out);
        }
        out += ']';
        return;
    case AstTree::Kind::splat:
        out += '[';
        for (std::size_t i = 0; i < tree.trees.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            emit_tree(tree.trees[i], out);
        }
        out += '|';
        out += std::to_string(tree.point);
        out += ']';
        return;
    }
}

void relabel_tree(AstTree& tree, const std::function<int(int)>& map) {
    if (tree.kind == AstTree::Kind::point || tree.kind == AstTree::Kind::splat) {
        tree.point = map(tree.point);
    }
    for (AstTree& sub : tree.trees) {
        relabel_tree(sub, map);
    }
}

} // namespace

int root(const AstTree& tree) {
    switch (tree.kind) {
    case AstTree::Kind::point:
    case AstTree::Kind::splat:
        return tree.point;
    case AstTree::Kind::conveyor:
        return root(tree.trees.back());
    }
    return 0;
}

std::vector<int> mentioned_points(const CompactAst& ast) {
    std::vector<int> out;
    for (const AstComponent& component : ast.components) {
        for (const AstTree& tree : component.trees) {
            collect_points(tree, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int max_point(const CompactAst& ast) {
    const std::vector<int> points = mentioned_points(ast);
    return points.empty() ? 0 : points.back();
}

std::string emit_ast(const CompactAst& ast) {
    if (ast.identity()) {
        return "()";
    }
    std::string out;
    for (const AstComponent& component : ast.components) {
        if (component.cycle) {
            out += '(';
            for (std::size_t i = 0; i < component.trees.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                emit_tree(component.trees[i], out);
            }
            out += ')';
        } else {
            emit_tree(component.trees.front(), out);
        }
    }
    return out;
}

CompactAst relabel_points(const CompactAst& ast, const std::function<int(int)>& map) {
    CompactAst out = ast;
    for (AstComponent& component : out.components) {
        for (AstTree& tree : component.trees) {
            relabel_tree(tree, map);
        }
    }
    return out;
}

} // namespace trafo
