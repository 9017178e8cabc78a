#pragma once

#include <string>
#include <string_view>

#include "trafo/transformation.hpp"

namespace trafo {

/// The canonical compact-notation string of a transformation.
///
/// Per component of the functional digraph: a lone fixed point with no
/// incoming tree is omitted; a lone fixed point with an incoming tree becomes
/// a bracketed top-level tree ending at that point; any longer cycle becomes
/// a parenthesized list of its points, each wrapped in its incoming-tree
/// notation. A point with exactly one outside preimage extends a conveyor
/// belt; one with several becomes a splat.
///
/// Ordering: components by least contained point, splat subtrees by least
/// contained point, cycles rotated to start at their least point. The
/// identity of any degree emits "()". The output carries no whitespace and
/// reinterprets to the input (up to trailing fixed points).
std::string canonical_form(const Transformation& f);

/// True iff the text is exactly the canonical form of the transformation it
/// denotes. Parse errors propagate.
bool is_canonical(std::string_view text);

/// Structural idempotence test on a canonical string: true iff it is "()" or
/// every component is a two-entry conveyor of bare points or a single-level
/// splat of bare points. Throws std::invalid_argument on non-canonical input.
bool structural_idempotent(std::string_view text);

} // namespace trafo
