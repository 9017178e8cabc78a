#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace trafo {

/// Half-open character range [begin, end) into the source text, in code units.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const SourceSpan&) const = default;
};

/// Lexical or syntactic error in any of the textual notations.
///
/// `span()` points at the offending range of the input. For duplicate-point
/// errors, `first_use()` additionally carries the span of the first occurrence.
class ParseError : public std::runtime_error {
public:
    enum class Code {
        unexpected_char,
        bad_integer,
        unexpected_token,
        unexpected_end,
        duplicate_point,
        cycle_too_short,
        empty_brackets,
        splat_arity,
        bad_factor,
        value_out_of_range,
    };

    ParseError(Code code, SourceSpan span, const std::string& message)
        : std::runtime_error(message), code_(code), span_(span) {}

    ParseError(Code code, SourceSpan span, SourceSpan first_use, const std::string& message)
        : std::runtime_error(message), code_(code), span_(span), first_use_(first_use) {}

    Code code() const noexcept { return code_; }
    SourceSpan span() const noexcept { return span_; }
    const std::optional<SourceSpan>& first_use() const noexcept { return first_use_; }

private:
    Code code_;
    SourceSpan span_;
    std::optional<SourceSpan> first_use_;
};

/// A documented brute-force bound was exceeded (see classify.hpp).
class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested dialect feature is not supported (e.g. parsing path notation).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace trafo
