#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trafo::golden {

/// The worked 17-point example in canonical compact form.
extern const char* const kBasins17;
/// The 9-point example with a conveyor belt and a branching tree.
extern const char* const kBranching9;

/// The running 5-point example in each dialect.
extern const char* const kRunningImageList;
extern const char* const kRunningCompact;
extern const char* const kRunningLinear;
extern const char* const kRunningPath;
extern const char* const kRunningFactors;

/// The two compact spellings of one transformation, and their common
/// canonical form (the second one).
extern const char* const kAmbiguousA;
extern const char* const kAmbiguousB;

/// The relabeling identity: conjugating kConjugated by kConjugator gives
/// kConjugationResult.
extern const char* const kConjugated;
extern const char* const kConjugator;
extern const char* const kConjugationResult;

/// A five-point chain in linear notation.
extern const char* const kLinearChain;

/// The 19 degree-4 conjugacy class representative strings.
const std::vector<std::string>& t4_class_strings();

/// Runs every embedded corpus check; returns one message per failure.
std::vector<std::string> run_golden_checks();

/// Prints one ok/FAIL line per check plus a summary; returns the number of
/// failures.
int run_selftest(std::ostream& out);

} // namespace trafo::golden
