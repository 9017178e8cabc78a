#pragma once

#include <string_view>

#include "trafo/ast.hpp"

namespace trafo {

struct ParseOptions {
    /// Reject splats with a single tree before '|' (e.g. "[1|2]"). The lenient
    /// default accepts them; the canonical emitter never produces them.
    bool strict = false;
};

/// Parses a compact-notation expression.
///
/// Grammar (terminals are '[', ']', '(', ')', ',', '|' and point symbols):
///
///   expression ::= component+ | "()"
///   component  ::= "(" tree ("," tree)+ ")" | bracket
///   bracket    ::= "[" tree ("," tree)* "|" point "]"
///                | "[" tree ("," tree)+ "]"
///   tree       ::= bracket | point
///
/// Each point value may occur at most once in the whole expression. "()" is
/// valid only as the entire expression. Whitespace between tokens is ignored.
/// Throws ParseError on any violation.
CompactAst parse_compact(std::string_view text, ParseOptions options = {});

} // namespace trafo
