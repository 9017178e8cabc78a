#pragma once

#include <vector>

#include "trafo/transformation.hpp"

namespace trafo {

/// Hard limit for the brute-force conjugacy witness search (n! permutations).
inline constexpr int kConjugacySearchMaxDegree = 8;

/// Hard limit for full conjugacy-class enumeration (n^n transformations).
inline constexpr int kClassEnumerationMaxDegree = 5;

/// True iff some permutation s satisfies conjugate(f, s) == g, found by
/// searching all of S_n. Throws std::invalid_argument on degree mismatch and
/// BoundError for degrees above kConjugacySearchMaxDegree.
bool are_conjugate(const Transformation& f, const Transformation& g);

/// One representative per conjugacy class of the full transformation
/// semigroup T_n: the element of each class whose canonical compact string is
/// lexicographically least. Returned sorted by that string. Throws BoundError
/// for degrees above kClassEnumerationMaxDegree.
std::vector<Transformation> conjugacy_class_representatives(int n);

} // namespace trafo
