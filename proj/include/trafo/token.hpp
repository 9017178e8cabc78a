#pragma once

#include <string_view>
#include <vector>

#include "trafo/errors.hpp"

namespace trafo {

enum class TokenKind {
    lbracket,
    rbracket,
    lparen,
    rparen,
    comma,
    bar,
    semicolon, // linear dialect only; the compact parser rejects it
    point,
};

struct Token {
    TokenKind kind = TokenKind::point;
    SourceSpan span;
    int value = 0; // set for TokenKind::point
};

/// Printable name of a token kind, for diagnostics.
const char* token_kind_name(TokenKind kind);

/// Splits notation text into tokens. Whitespace between tokens is skipped;
/// every other character must belong to a token.
///
/// Point symbols are positive decimal integers with no sign and no leading
/// zeros. Throws ParseError for unexpected characters and malformed integers.
std::vector<Token> tokenize(std::string_view text);

} // namespace trafo
