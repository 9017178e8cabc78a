#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trafo/errors.hpp"

namespace trafo {

/// A tree inside a compact-notation expression.
///
/// `point` holds the point value for `Kind::point` nodes and the splat target
/// for `Kind::splat` nodes. `trees` holds the conveyor entries (two or more)
/// or the splat subtrees (one or more).
struct AstTree {
    enum class Kind { point, conveyor, splat };

    Kind kind = Kind::point;
    int point = 0;
    std::vector<AstTree> trees;
    SourceSpan span;
};

/// A top-level component: a parenthesized cycle of two or more trees, or a
/// single nontrivial (bracketed) tree.
struct AstComponent {
    bool cycle = false;
    std::vector<AstTree> trees; // cycle entries, or exactly one tree
    SourceSpan span;
};

/// A parsed compact-notation expression. An empty component list denotes the
/// identity, written "()".
struct CompactAst {
    std::vector<AstComponent> components;

    bool identity() const { return components.empty(); }
};

/// The root of a tree: the point whose image is supplied by surrounding
/// context. For a splat it is the target point; for a conveyor the root of
/// its last entry.
int root(const AstTree& tree);

/// All point values occurring in the expression, sorted ascending.
std::vector<int> mentioned_points(const CompactAst& ast);

/// Largest point value in the expression; 0 for the identity.
int max_point(const CompactAst& ast);

/// Renders the expression back to notation text (no whitespace).
std::string emit_ast(const CompactAst& ast);

/// Returns a copy with every point value p replaced by map(p).
CompactAst relabel_points(const CompactAst& ast, const std::function<int(int)>& map);

} // namespace trafo
