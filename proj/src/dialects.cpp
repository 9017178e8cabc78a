#include "trafo/dialects.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "trafo/canonical.hpp"
#include "trafo/errors.hpp"
#include "trafo/interpret.hpp"
#include "trafo/parser.hpp"
#include "trafo/token.hpp"

namespace trafo {

std::optional<Dialect> dialect_from_name(std::string_view name) {
    if (name == "compact") return Dialect::compact;
    if (name == "linear") return Dialect::linear;
    if (name == "imagelist") return Dialect::image_list;
    if (name == "path") return Dialect::path;
    if (name == "factor") return Dialect::factorization;
    return std::nullopt;
}

std::string_view dialect_name(Dialect dialect) {
    switch (dialect) {
    case Dialect::compact: return "compact";
    case Dialect::linear: return "linear";
    case Dialect::image_list: return "imagelist";
    case Dialect::path: return "path";
    case Dialect::factorization: return "factor";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Image-list notation

Transformation parse_image_list(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    std::vector<int> entries;
    std::vector<SourceSpan> spans;
    bool want_entry = true;
    for (const Token& tok : tokens) {
        if (tok.kind == TokenKind::point) {
            entries.push_back(tok.value);
            spans.push_back(tok.span);
            want_entry = false;
            continue;
        }
        if (tok.kind == TokenKind::comma && !want_entry) {
            want_entry = true;
            continue;
        }
        throw ParseError(ParseError::Code::unexpected_token, tok.span,
                         std::string("expected an image entry, got ") + token_kind_name(tok.kind));
    }
    if (entries.empty()) {
        throw ParseError(ParseError::Code::unexpected_end, {text.size(), text.size()},
                         "empty image list");
    }
    if (want_entry) {
        throw ParseError(ParseError::Code::unexpected_end, {text.size(), text.size()},
                         "expected an image entry after ','");
    }
    const int n = static_cast<int>(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 1 || entries[i] > n) {
            throw ParseError(ParseError::Code::value_out_of_range, spans[i],
                             "image " + std::to_string(entries[i]) + " is outside 1.." +
                                 std::to_string(n));
        }
    }
    return Transformation(std::move(entries));
}

std::string emit_image_list(const Transformation& f) {
    std::string out;
    for (int i = 0; i < f.degree(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(f.images()[static_cast<std::size_t>(i)]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linear notation

namespace {

// Parses linear notation into a compact AST in which every "[...;r]" bracket
// becomes a splat; the shared interpreter then supplies the semantics.
class LinearParser {
public:
    explicit LinearParser(std::string_view text) : end_(text.size()), tokens_(tokenize(text)) {}

    CompactAst parse() {
        if (tokens_.empty()) {
            throw ParseError(ParseError::Code::unexpected_end, end_span(),
                             "expected '(' or '[', got end of input");
        }
        if (tokens_.size() == 2 && tokens_[0].kind == TokenKind::lparen &&
            tokens_[1].kind == TokenKind::rparen) {
            return CompactAst{};
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
            const Token open = advance();
            if (!at_end() && peek_kind() == TokenKind::rparen) {
                const Token close = advance();
                throw ParseError(ParseError::Code::empty_brackets,
                                 {open.span.begin, close.span.end},
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
        if (tok.kind == TokenKind::lbracket) {
            AstComponent component;
            component.trees.push_back(parse_bracket());
            component.span = component.trees.front().span;
            return component;
        }
        throw unexpected(tok, "'(' or '['");
    }

    AstTree parse_bracket() {
        const Token open = advance();
        std::vector<AstTree> trees;
        trees.push_back(parse_tree());
        while (try_consume(TokenKind::comma)) {
            trees.push_back(parse_tree());
        }
        expect(TokenKind::semicolon, "',' or ';'");
        const Token target = expect(TokenKind::point, "a point after ';'");
        note_point(target);
        const Token close = expect(TokenKind::rbracket, "']'");
        AstTree tree;
        tree.kind = AstTree::Kind::splat;
        tree.point = target.value;
        tree.trees = std::move(trees);
        tree.span = {open.span.begin, close.span.end};
        return tree;
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

    std::size_t end_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::unordered_map<int, SourceSpan> seen_;
};

std::string render_linear_into(int point, const std::vector<TreeNode>& trees) {
    if (trees.empty()) {
        return std::to_string(point);
    }
    std::vector<const TreeNode*> subs;
    subs.reserve(trees.size());
    for (const TreeNode& t : trees) {
        subs.push_back(&t);
    }
    std::sort(subs.begin(), subs.end(),
              [](const TreeNode* a, const TreeNode* b) { return min_point(*a) < min_point(*b); });
    std::string out = "[";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += render_linear_into(subs[i]->point, subs[i]->children);
    }
    out += ';';
    out += std::to_string(point);
    out += ']';
    return out;
}

} // namespace

Transformation parse_linear(std::string_view text, std::optional<int> degree) {
    return interpret(LinearParser(text).parse(), degree);
}

std::string emit_linear(const Transformation& f) {
    const Decomposition d = decompose(f);
    std::string out;
    for (const ComponentData& component : d.components) {
        if (component.cycle.size() == 1) {
            if (component.forests.front().empty()) {
                continue;
            }
            out += render_linear_into(component.cycle.front(), component.forests.front());
            continue;
        }
        out += '(';
        for (std::size_t i = 0; i < component.cycle.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += render_linear_into(component.cycle[i], component.forests[i]);
        }
        out += ')';
    }
    if (out.empty()) {
        out = "()";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path notation (emission only)

std::string emit_path(const Transformation& f) {
    const int n = f.degree();
    const Decomposition d = decompose(f);
    std::vector<char> on_cycle(static_cast<std::size_t>(n) + 1, 0);
    std::vector<const ComponentData*> cycles;
    for (const ComponentData& component : d.components) {
        for (const int c : component.cycle) {
            on_cycle[static_cast<std::size_t>(c)] = 1;
        }
        if (component.cycle.size() >= 2) {
            cycles.push_back(&component);
        }
    }
    std::sort(cycles.begin(), cycles.end(), [](const ComponentData* a, const ComponentData* b) {
        return a->cycle.front() < b->cycle.front();
    });

    std::string out;
    for (const ComponentData* component : cycles) {
        out += '(';
        for (std::size_t i = 0; i < component->cycle.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(component->cycle[i]);
        }
        out += ')';
    }

    std::vector<int> pre_count(static_cast<std::size_t>(n) + 1, 0);
    for (int x = 1; x <= n; ++x) {
        ++pre_count[static_cast<std::size_t>(f.apply(x))];
    }
    for (int x = 1; x <= n; ++x) {
        if (on_cycle[static_cast<std::size_t>(x)] || pre_count[static_cast<std::size_t>(x)] != 0) {
            continue;
        }
        out += '(';
        int cur = x;
        for (;;) {
            out += std::to_string(cur);
            if (on_cycle[static_cast<std::size_t>(cur)]) {
                break;
            }
            out += ',';
            cur = f.apply(cur);
        }
        out += '>';
    }
    if (out.empty()) {
        out = "()";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factorization notation

Transformation factor_transformation(const TrajectoryFactor& factor, int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int x = 1; x <= degree; ++x) {
        images[static_cast<std::size_t>(x) - 1] = x;
    }
    for (std::size_t i = 0; i + 1 < factor.path.size(); ++i) {
        images[static_cast<std::size_t>(factor.path[i]) - 1] = factor.path[i + 1];
    }
    if (!factor.path.empty()) {
        images[static_cast<std::size_t>(factor.path.back()) - 1] = factor.connect;
    }
    return Transformation(std::move(images));
}

FactorList emit_factorization(const Transformation& f) {
    const int n = f.degree();
    // realized[x] means the product built so far already sends x to f(x);
    // fixed points hold from the empty product onward.
    std::vector<char> realized(static_cast<std::size_t>(n) + 1, 0);
    int remaining = 0;
    for (int x = 1; x <= n; ++x) {
        realized[static_cast<std::size_t>(x)] = f.apply(x) == x;
        if (!realized[static_cast<std::size_t>(x)]) {
            ++remaining;
        }
    }

    FactorList out;
    std::vector<char> in_path(static_cast<std::size_t>(n) + 1, 0);
    while (remaining > 0) {
        // Start from the least trajectory start: an unrealized point none of
        // whose preimages is still unrealized. Pure unrealized cycles have no
        // such point; fall back to the least unrealized point.
        int start = 0;
        for (int x = 1; x <= n && start == 0; ++x) {
            if (realized[static_cast<std::size_t>(x)]) {
                continue;
            }
            bool has_unrealized_pre = false;
            for (int y = 1; y <= n; ++y) {
                if (f.apply(y) == x && !realized[static_cast<std::size_t>(y)]) {
                    has_unrealized_pre = true;
                    break;
                }
            }
            if (!has_unrealized_pre) {
                start = x;
            }
        }
        if (start == 0) {
            for (int x = 1; x <= n; ++x) {
                if (!realized[static_cast<std::size_t>(x)]) {
                    start = x;
                    break;
                }
            }
        }

        TrajectoryFactor factor;
        factor.path.push_back(start);
        in_path[static_cast<std::size_t>(start)] = 1;
        for (;;) {
            const int last = factor.path.back();
            const int next = f.apply(last);
            if (in_path[static_cast<std::size_t>(next)]) {
                factor.connect = next; // close the trajectory into itself
                break;
            }
            factor.path.push_back(next);
            in_path[static_cast<std::size_t>(next)] = 1;
            if (realized[static_cast<std::size_t>(next)]) {
                factor.connect = next; // its true image is already realized
                break;
            }
        }
        for (const int p : factor.path) {
            in_path[static_cast<std::size_t>(p)] = 0;
            if (!realized[static_cast<std::size_t>(p)]) {
                realized[static_cast<std::size_t>(p)] = 1;
                --remaining;
            }
        }
        out.push_back(std::move(factor));
    }
    return out;
}

std::string render_factorization(const FactorList& factors) {
    if (factors.empty()) {
        return "()";
    }
    std::string out;
    for (const TrajectoryFactor& factor : factors) {
        out += '[';
        for (std::size_t i = 0; i < factor.path.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(factor.path[i]);
        }
        out += '|';
        out += std::to_string(factor.connect);
        out += ']';
    }
    return out;
}

Transformation parse_factorization(std::string_view text, std::optional<int> degree) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.size() == 2 && tokens[0].kind == TokenKind::lparen &&
        tokens[1].kind == TokenKind::rparen) {
        return Transformation::identity(degree.value_or(0));
    }

    FactorList factors;
    int max_seen = 0;
    std::size_t pos = 0;
    const auto expect = [&](TokenKind kind, const char* wanted) -> const Token& {
        if (pos >= tokens.size()) {
            throw ParseError(ParseError::Code::unexpected_end, {text.size(), text.size()},
                             std::string("expected ") + wanted + ", got end of input");
        }
        const Token& tok = tokens[pos];
        if (tok.kind != kind) {
            throw ParseError(ParseError::Code::unexpected_token, tok.span,
                             std::string("expected ") + wanted + ", got " +
                                 token_kind_name(tok.kind));
        }
        ++pos;
        return tok;
    };

    if (tokens.empty()) {
        throw ParseError(ParseError::Code::unexpected_end, {text.size(), text.size()},
                         "empty factorization");
    }
    while (pos < tokens.size()) {
        const Token& open = expect(TokenKind::lbracket, "'['");
        TrajectoryFactor factor;
        std::unordered_map<int, SourceSpan> seen;
        const auto read_path_point = [&] {
            const Token& tok = expect(TokenKind::point, "a point");
            auto [it, inserted] = seen.try_emplace(tok.value, tok.span);
            if (!inserted) {
                throw ParseError(ParseError::Code::duplicate_point, tok.span, it->second,
                                 "duplicate point " + std::to_string(tok.value) +
                                     " within one factor");
            }
            factor.path.push_back(tok.value);
            max_seen = std::max(max_seen, tok.value);
        };
        read_path_point();
        while (pos < tokens.size() && tokens[pos].kind == TokenKind::comma) {
            ++pos;
            read_path_point();
        }
        expect(TokenKind::bar, "',' or '|'");
        const Token& connect = expect(TokenKind::point, "a point after '|'");
        if (std::find(factor.path.begin(), factor.path.end(), connect.value) ==
            factor.path.end()) {
            throw ParseError(ParseError::Code::bad_factor, connect.span,
                             "connect point " + std::to_string(connect.value) +
                                 " does not appear in the factor path");
        }
        factor.connect = connect.value;
        max_seen = std::max(max_seen, connect.value);
        const Token& close = expect(TokenKind::rbracket, "']'");
        (void)open;
        (void)close;
        factors.push_back(std::move(factor));
    }

    const int n = degree.value_or(max_seen);
    if (n < max_seen) {
        throw std::invalid_argument("degree " + std::to_string(n) +
                                    " is smaller than the largest mentioned point " +
                                    std::to_string(max_seen));
    }
    Transformation product = Transformation::identity(n);
    for (const TrajectoryFactor& factor : factors) {
        product = compose(product, factor_transformation(factor, n));
    }
    return product;
}

// ---------------------------------------------------------------------------
// Conversions

Transformation parse_dialect(Dialect dialect, std::string_view text, std::optional<int> degree) {
    switch (dialect) {
    case Dialect::compact:
        return interpret_compact(text, degree);
    case Dialect::linear:
        return parse_linear(text, degree);
    case Dialect::image_list: {
        Transformation f = parse_image_list(text);
        return degree ? extended(f, *degree) : f;
    }
    case Dialect::factorization:
        return parse_factorization(text, degree);
    case Dialect::path:
        throw UnsupportedError("path notation is emission-only and cannot be parsed");
    }
    throw std::logic_error("unknown dialect");
}

std::string emit_dialect(Dialect dialect, const Transformation& f) {
    switch (dialect) {
    case Dialect::compact:
        return canonical_form(f);
    case Dialect::linear:
        return emit_linear(f);
    case Dialect::image_list:
        return emit_image_list(f);
    case Dialect::path:
        return emit_path(f);
    case Dialect::factorization:
        return render_factorization(emit_factorization(f));
    }
    throw std::logic_error("unknown dialect");
}

std::string convert(std::string_view text, Dialect from, Dialect to, std::optional<int> degree) {
    return emit_dialect(to, parse_dialect(from, text, degree));
}

} // namespace trafo
