#include "trafo/token.hpp"

#include <cctype>
#include <limits>

namespace trafo {

namespace {

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

} // namespace

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::comma: return "','";
    case TokenKind::bar: return "'|'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::point: return "point";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (is_blank(c)) {
            ++i;
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '[': kind = TokenKind::lbracket; break;
        case ']': kind = TokenKind::rbracket; break;
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        case ',': kind = TokenKind::comma; break;
        case '|': kind = TokenKind::bar; break;
        case ';': kind = TokenKind::semicolon; break;
        default: {
            if (!is_digit(c)) {
                throw ParseError(ParseError::Code::unexpected_char, {i, i + 1},
                                 std::string("unexpected character '") + c + "'");
            }
            std::size_t j = i;
            while (j < text.size() && is_digit(text[j])) {
                ++j;
            }
            const SourceSpan span{i, j};
            if (c == '0') {
                throw ParseError(ParseError::Code::bad_integer, span,
                                 j - i == 1 ? "point values must be positive"
                                            : "point values must not have leading zeros");
            }
            long long value = 0;
            for (std::size_t k = i; k < j; ++k) {
                value = value * 10 + (text[k] - '0');
                if (value > std::numeric_limits<int>::max()) {
                    throw ParseError(ParseError::Code::bad_integer, span, "point value too large");
                }
            }
            tokens.push_back({TokenKind::point, span, static_cast<int>(value)});
            i = j;
            continue;
        }
        }
        tokens.push_back({kind, {i, i + 1}, 0});
        ++i;
    }
    return tokens;
}

} // namespace trafo
