#include "trafo/parser.hpp"

#include <unordered_map>
#include <utility>

#include "trafo/token.hpp"

namespace trafo {

namespace {

class Parser {
public:
    Parser(std::string_view text, ParseOptions options)
        : options_(options), end_(text.size()), tokens_(tokenize(text)) {}

    CompactAst parse() {
        if (tokens_.empty()) {
            throw ParseError(ParseError::Code::unexpected_end, end_span(),
                             "expected '(' or '[', got end of input");
        }
        if (tokens_.size() == 2 && tokens_[0].kind == TokenKind::lparen &&
            tokens_[1].kind == TokenKind::rparen) {
            return CompactAst{}; // the identity, "()"
        }
        CompactAst ast;
        while (!at_end()) {
            ast.components.push_back(parse_component());
        }
        return ast;
    }

private:
    AstComponent parse_component() {
        const Token& tok = peek("'(' or '['");
        if (tok.kind == TokenKind::lparen) {
            return parse_cycle();
        }
        if (tok.kind == TokenKind::lbracket) {
            AstComponent component;
            component.trees.push_back(parse_bracket());
            component.span = component.trees.front().span;
            return component;
        }
        throw unexpected(tok, "'(' or '['");
    }

    AstComponent parse_cycle() {
        const Token open = advance();
        if (!at_end() && peek_kind() == TokenKind::rparen) {
            const Token close = advance();
            throw ParseError(ParseError::Code::empty_brackets, {open.span.begin, close.span.end},
                             "\"()\" denotes the identity only as the whole expression");
        }
        AstComponent component;
        component.cycle = true;
        component.trees.push_back(parse_tree());
        while (try_consume(TokenKind::comma)) {
            component.trees.push_back(parse_tree());
        }
        const Token close = expect(TokenKind::rparen, "',' or ')'");
        component.span = {open.span.begin, close.span.end};
        if (component.trees.size() < 2) {
            throw ParseError(ParseError::Code::cycle_too_short, component.span,
                             "a cycle needs at least two entries");
        }
        return component;
    }

    AstTree parse_bracket() {
        const Token open = advance();
        if (!at_end() && peek_kind() == TokenKind::rbracket) {
            const Token close = advance();
            throw ParseError(ParseError::Code::empty_brackets, {open.span.begin, close.span.end},
                             "empty brackets");
        }
        std::vector<AstTree> trees;
        trees.push_back(parse_tree());
        for (;;) {
            if (try_consume(TokenKind::comma)) {
                trees.push_back(parse_tree());
                continue;
            }
            if (!at_end() && peek_kind() == TokenKind::bar) {
                const Token bar = advance();
                if (options_.strict && trees.size() < 2) {
                    throw ParseError(ParseError::Code::splat_arity, bar.span,
                                     "strict grammar requires at least two trees before '|'");
                }
                const Token target = expect(TokenKind::point, "a point after '|'");
                note_point(target);
                const Token close = expect(TokenKind::rbracket, "']'");
                AstTree tree;
                tree.kind = AstTree::Kind::splat;
                tree.point = target.value;
                tree.trees = std::move(trees);
                tree.span = {open.span.begin, close.span.end};
                return tree;
            }
            if (!at_end() && peek_kind() == TokenKind::rbracket && trees.size() >= 2) {
                const Token close = advance();
                AstTree tree;
                tree.kind = AstTree::Kind::conveyor;
                tree.trees = std::move(trees);
                tree.span = {open.span.begin, close.span.end};
                return tree;
            }
            const char* wanted = trees.size() < 2 ? "',' or '|'" : "',', '|' or ']'";
            if (at_end()) {
                throw ParseError(ParseError::Code::unexpected_end, end_span(),
                                 std::string("expected ") + wanted + ", got end of input");
            }
            throw unexpected(peek(wanted), wanted);
        }
    }

    AstTree parse_tree() {
        const Token& tok = peek("a point or '['");
        if (tok.kind == TokenKind::point) {
            advance();
            note_point(tok);
            AstTree tree;
            tree.kind = AstTree::Kind::point;
            tree.point = tok.value;
            tree.span = tok.span;
            return tree;
        }
        if (tok.kind == TokenKind::lbracket) {
            return parse_bracket();
        }
        throw unexpected(tok, "a point or '['");
    }

    void note_point(const Token& tok) {
        auto [it, inserted] = seen_.try_emplace(tok.value, tok.span);
        if (!inserted) {
            throw ParseError(ParseError::Code::duplicate_point, tok.span, it->second,
                             "duplicate point " + std::to_string(tok.value));
        }
    }

    bool at_end() const { return pos_ >= tokens_.size(); }

    TokenKind peek_kind() const { return tokens_[pos_].kind; }

    const Token& peek(const char* wanted) const {
        if (at_end()) {
            throw ParseError(ParseError::Code::unexpected_end, end_span(),
                             std::string("expected ") + wanted + ", got end of input");
        }
        return tokens_[pos_];
    }

    Token advance() { return tokens_[pos_++]; }

    bool try_consume(TokenKind kind) {
        if (!at_end() && peek_kind() == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    Token expect(TokenKind kind, const char* wanted) {
        const Token& tok = peek(wanted);
        if (tok.kind != kind) {
            throw unexpected(tok, wanted);
        }
        return advance();
    }

    ParseError unexpected(const Token& tok, const char* wanted) const {
        return ParseError(ParseError::Code::unexpected_token, tok.span,
                          std::string("expected ") + wanted + ", got " +
                              token_kind_name(tok.kind));
    }

    SourceSpan end_span() const { return {end_, end_}; }

    ParseOptions options_;
    std::size_t end_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::unordered_map<int, SourceSpan> seen_;
};

} // namespace

CompactAst parse_compact(std::string_view text, ParseOptions options) {
    return Parser(text, options).parse();
}

} // namespace trafo
