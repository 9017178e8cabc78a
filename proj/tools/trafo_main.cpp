#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trafo/canonical.hpp"
#include "trafo/classify.hpp"
#include "trafo/dialects.hpp"
#include "trafo/errors.hpp"
#include "trafo/golden.hpp"
#include "trafo/info.hpp"
#include "trafo/interpret.hpp"
#include "trafo/parser.hpp"
#include "trafo/random.hpp"
#include "trafo/token.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBound = 4;

// Refuse degrees whose image tables would not fit in a desk-tool process.
constexpr int kMaxDegree = 1 << 24;

void print_diagnostic(const trafo::ParseError& error, std::string_view input) {
    std::cerr << "error: " << error.what() << " (at " << error.span().begin << ".."
              << error.span().end << ")";
    if (error.first_use()) {
        std::cerr << "; first occurrence at " << error.first_use()->begin << ".."
                  << error.first_use()->end;
    }
    std::cerr << "\n";
    if (input.size() <= 200 && input.find('\n') == std::string_view::npos) {
        std::cerr << "  " << input << "\n  ";
        const std::size_t begin = std::min(error.span().begin, input.size());
        const std::size_t end = std::min(std::max(error.span().end, begin + 1), input.size() + 1);
        std::cerr << std::string(begin, ' ') << std::string(end - begin, '^') << "\n";
    }
}

void guard_degree(std::optional<int> degree) {
    if (degree && *degree > kMaxDegree) {
        throw trafo::BoundError("degree " + std::to_string(*degree) + " exceeds the tool limit " +
                                std::to_string(kMaxDegree));
    }
}

// Mentioned points drive the inferred degree; reject absurd ones up front so
// a stray huge point value fails cleanly instead of exhausting memory.
void guard_text(std::string_view text, trafo::Dialect dialect) {
    if (dialect == trafo::Dialect::image_list || dialect == trafo::Dialect::path) {
        return;
    }
    for (const trafo::Token& token : trafo::tokenize(text)) {
        if (token.kind == trafo::TokenKind::point && token.value > kMaxDegree) {
            throw trafo::BoundError("point " + std::to_string(token.value) +
                                    " exceeds the tool limit " + std::to_string(kMaxDegree));
        }
    }
}

trafo::Transformation parse_guarded(trafo::Dialect dialect, const std::string& text,
                                    std::optional<int> degree) {
    guard_degree(degree);
    guard_text(text, dialect);
    return trafo::parse_dialect(dialect, text, degree);
}

json info_to_json(const trafo::InfoReport& report) {
    json j;
    j["degree"] = report.degree;
    j["images"] = report.images;
    j["canonical"] = report.canonical;
    j["is_permutation"] = report.permutation;
    j["is_idempotent"] = report.idempotent;
    j["components"] = json::array();
    for (const trafo::ComponentSummary& component : report.components) {
        json c;
        c["cycle"] = component.cycle;
        c["cycle_length"] = component.cycle.size();
        c["tree_sizes"] = component.tree_sizes;
        c["max_tree_depth"] = component.max_tree_depth;
        j["components"].push_back(std::move(c));
    }
    if (!report.orbits.empty()) {
        j["orbits"] = json::array();
        for (std::size_t i = 0; i < report.orbits.size(); ++i) {
            json o;
            o["point"] = i + 1;
            o["tail"] = report.orbits[i].tail;
            o["period"] = report.orbits[i].period;
            j["orbits"].push_back(std::move(o));
        }
    }
    return j;
}

void print_info_text(const trafo::InfoReport& report) {
    std::cout << "degree: " << report.degree << "\n";
    std::cout << "images:";
    for (const int y : report.images) {
        std::cout << ' ' << y;
    }
    std::cout << "\n";
    std::cout << "canonical: " << report.canonical << "\n";
    std::cout << "permutation: " << (report.permutation ? "yes" : "no") << "\n";
    std::cout << "idempotent: " << (report.idempotent ? "yes" : "no") << "\n";
    std::cout << "components: " << report.components.size() << "\n";
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        const trafo::ComponentSummary& component = report.components[i];
        std::cout << "  component " << i + 1 << ": cycle (";
        for (std::size_t k = 0; k < component.cycle.size(); ++k) {
            if (k > 0) {
                std::cout << ',';
            }
            std::cout << component.cycle[k];
        }
        std::cout << ") length " << component.cycle.size() << " trees [";
        for (std::size_t k = 0; k < component.tree_sizes.size(); ++k) {
            if (k > 0) {
                std::cout << ',';
            }
            std::cout << component.tree_sizes[k];
        }
        std::cout << "] depth " << component.max_tree_depth << "\n";
    }
    for (std::size_t i = 0; i < report.orbits.size(); ++i) {
        std::cout << "orbit " << i + 1 << ": m=" << report.orbits[i].tail
                  << " k=" << report.orbits[i].period << "\n";
    }
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n\v\f") == std::string::npos;
}

struct ParseArgs {
    std::string expr;
    std::string dialect = "compact";
    std::optional<int> degree;
    bool orbits = false;
    bool strict = false;
    bool as_json = false;
};

struct CanonArgs {
    std::string expr;
    bool keep_going = false;
    bool strict = false;
};

struct ConvertArgs {
    std::string expr;
    std::string from;
    std::string to;
    std::optional<int> degree;
};

struct ComposeArgs {
    std::vector<std::string> exprs;
    std::string dialect = "compact";
    std::optional<int> degree;
};

struct ConjugateArgs {
    std::string expr;
    std::string perm;
    std::string dialect = "compact";
    bool canonical = false;
};

struct PowerArgs {
    std::string expr;
    long long exponent = 0;
    std::string dialect = "compact";
    std::optional<int> degree;
};

struct RandomArgs {
    int degree = 0;
    int count = 1;
    std::uint64_t seed = 0;
    std::string dialect = "compact";
};

trafo::Dialect need_dialect(const std::string& name) {
    const std::optional<trafo::Dialect> dialect = trafo::dialect_from_name(name);
    if (!dialect) {
        throw std::invalid_argument("unknown dialect '" + name +
                                    "' (expected compact, linear, imagelist, path or factor)");
    }
    return *dialect;
}

int cmd_parse(const ParseArgs& args) {
    const trafo::Dialect dialect = need_dialect(args.dialect);
    trafo::Transformation f;
    if (dialect == trafo::Dialect::compact && args.strict) {
        guard_degree(args.degree);
        guard_text(args.expr, dialect);
        f = trafo::interpret(trafo::parse_compact(args.expr, {.strict = true}), args.degree);
    } else {
        f = parse_guarded(dialect, args.expr, args.degree);
    }
    const trafo::InfoReport report = trafo::make_info_report(f, args.orbits);
    if (args.as_json) {
        std::cout << info_to_json(report).dump() << "\n";
    } else {
        print_info_text(report);
    }
    return kExitOk;
}

int cmd_canon(const CanonArgs& args) {
    const trafo::ParseOptions options{.strict = args.strict};
    if (!args.expr.empty()) {
        guard_text(args.expr, trafo::Dialect::compact);
        std::cout << trafo::canonical_form(trafo::interpret(trafo::parse_compact(args.expr, options)))
                  << "\n";
        return kExitOk;
    }
    std::string line;
    int line_number = 0;
    bool failed = false;
    while (std::getline(std::cin, line)) {
        ++line_number;
        if (blank(line)) {
            continue;
        }
        try {
            guard_text(line, trafo::Dialect::compact);
            std::cout << trafo::canonical_form(trafo::interpret(trafo::parse_compact(line, options)))
                      << "\n";
        } catch (const trafo::ParseError& e) {
            std::cerr << "line " << line_number << ": ";
            print_diagnostic(e, line);
            if (!args.keep_going) {
                return kExitParse;
            }
            failed = true;
        }
    }
    return failed ? kExitParse : kExitOk;
}

int cmd_convert(const ConvertArgs& args) {
    const trafo::Dialect from = need_dialect(args.from);
    const trafo::Dialect to = need_dialect(args.to);
    std::cout << trafo::emit_dialect(to, parse_guarded(from, args.expr, args.degree)) << "\n";
    return kExitOk;
}

int cmd_compose(const ComposeArgs& args) {
    const trafo::Dialect dialect = need_dialect(args.dialect);
    std::vector<trafo::Transformation> operands;
    int common = args.degree.value_or(0);
    for (const std::string& expr : args.exprs) {
        operands.push_back(parse_guarded(dialect, expr, std::nullopt));
        common = std::max(common, operands.back().degree());
    }
    guard_degree(common);
    trafo::Transformation product = trafo::Transformation::identity(common);
    for (const trafo::Transformation& operand : operands) {
        product = trafo::compose(product, trafo::extended(operand, common));
    }
    std::cout << trafo::canonical_form(product) << "\n";
    return kExitOk;
}

int cmd_conjugate(const ConjugateArgs& args) {
    const trafo::Dialect dialect = need_dialect(args.dialect);
    trafo::Transformation f = parse_guarded(dialect, args.expr, std::nullopt);
    trafo::Transformation s = parse_guarded(trafo::Dialect::compact, args.perm, std::nullopt);
    const int common = std::max(f.degree(), s.degree());
    f = trafo::extended(f, common);
    s = trafo::extended(s, common);
    const trafo::Transformation h = trafo::conjugate(f, s);
    if (args.canonical) {
        std::cout << trafo::canonical_form(h) << "\n";
        return kExitOk;
    }
    // Conjugation is relabeling: rewrite the canonical form of f point by
    // point. The result denotes h but keeps f's shape on display.
    const trafo::CompactAst relabeled = trafo::relabel_points(
        trafo::parse_compact(trafo::canonical_form(f)), [&](int p) { return s.apply(p); });
    std::cout << trafo::emit_ast(relabeled) << "\n";
    return kExitOk;
}

int cmd_power(const PowerArgs& args) {
    const trafo::Dialect dialect = need_dialect(args.dialect);
    const trafo::Transformation f = parse_guarded(dialect, args.expr, args.degree);
    std::cout << trafo::canonical_form(trafo::power(f, args.exponent)) << "\n";
    return kExitOk;
}

int cmd_classes(int degree) {
    const std::vector<trafo::Transformation> reps = trafo::conjugacy_class_representatives(degree);
    for (const trafo::Transformation& rep : reps) {
        std::cout << trafo::canonical_form(rep) << "\n";
    }
    std::cout << "total " << reps.size() << "\n";
    return kExitOk;
}

int cmd_random(const RandomArgs& args) {
    if (args.degree > kMaxDegree) {
        throw trafo::BoundError("degree " + std::to_string(args.degree) +
                                " exceeds the tool limit " + std::to_string(kMaxDegree));
    }
    const trafo::Dialect dialect = need_dialect(args.dialect);
    if (dialect == trafo::Dialect::path) {
        throw trafo::UnsupportedError(
            "path output cannot be parsed back; pick a parseable dialect");
    }
    trafo::SplitMix64 rng(args.seed);
    for (int i = 0; i < args.count; ++i) {
        std::cout << trafo::emit_dialect(dialect, trafo::random_transformation(args.degree, rng))
                  << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compact notation for finite total transformations"};
    app.require_subcommand(1);

    ParseArgs parse_args;
    CLI::App* parse_cmd = app.add_subcommand("parse", "parse an expression and describe it");
    parse_cmd->add_option("expr", parse_args.expr, "expression text")->required();
    parse_cmd->add_option("--dialect", parse_args.dialect,
                          "input dialect: compact, linear, imagelist, factor");
    parse_cmd->add_option("--degree", parse_args.degree, "extend with fixed points to this degree");
    parse_cmd->add_flag("--orbits", parse_args.orbits, "include per-point orbit indices (m, k)");
    parse_cmd->add_flag("--strict", parse_args.strict, "reject single-tree splats like [1|2]");
    parse_cmd->add_flag("--json", parse_args.as_json, "print the report as JSON");

    CanonArgs canon_args;
    CLI::App* canon_cmd =
        app.add_subcommand("canon", "canonicalize expressions (argument or stdin lines)");
    canon_cmd->add_option("expr", canon_args.expr, "expression text; omit to read stdin");
    canon_cmd->add_flag("--keep-going", canon_args.keep_going,
                        "report failing lines and continue");
    canon_cmd->add_flag("--strict", canon_args.strict, "reject single-tree splats like [1|2]");

    ConvertArgs convert_args;
    CLI::App* convert_cmd = app.add_subcommand("convert", "convert between dialects");
    convert_cmd->add_option("expr", convert_args.expr, "expression text")->required();
    convert_cmd->add_option("--from", convert_args.from, "source dialect")->required();
    convert_cmd->add_option("--to", convert_args.to, "target dialect")->required();
    convert_cmd->add_option("--degree", convert_args.degree,
                            "extend with fixed points to this degree");

    ComposeArgs compose_args;
    CLI::App* compose_cmd =
        app.add_subcommand("compose", "compose expressions left to right (first applied first)");
    compose_cmd->add_option("exprs", compose_args.exprs, "expressions")->required()->expected(-1);
    compose_cmd->add_option("--dialect", compose_args.dialect, "operand dialect");
    compose_cmd->add_option("--degree", compose_args.degree, "pad operands to this degree");

    ConjugateArgs conjugate_args;
    CLI::App* conjugate_cmd =
        app.add_subcommand("conjugate", "relabel a transformation by a permutation");
    conjugate_cmd->add_option("expr", conjugate_args.expr, "transformation")->required();
    conjugate_cmd->add_option("perm", conjugate_args.perm, "permutation, compact notation")
        ->required();
    conjugate_cmd->add_option("--dialect", conjugate_args.dialect, "transformation dialect");
    conjugate_cmd->add_flag("--canonical", conjugate_args.canonical,
                            "print the canonical form instead of the relabeled string");

    PowerArgs power_args;
    CLI::App* power_cmd = app.add_subcommand("power", "iterate a transformation");
    power_cmd->add_option("expr", power_args.expr, "transformation")->required();
    power_cmd->add_option("exponent", power_args.exponent, "nonnegative exponent")->required();
    power_cmd->add_option("--dialect", power_args.dialect, "input dialect");
    power_cmd->add_option("--degree", power_args.degree, "extend with fixed points to this degree");

    int classes_degree = 0;
    CLI::App* classes_cmd =
        app.add_subcommand("classes", "conjugacy class representatives of T_n");
    classes_cmd->add_option("degree", classes_degree, "degree n")->required();

    RandomArgs random_args;
    CLI::App* random_cmd =
        app.add_subcommand("random", "reproducible uniform random transformations");
    random_cmd->add_option("degree", random_args.degree, "degree n")->required();
    random_cmd->add_option("--count", random_args.count, "how many to print");
    random_cmd->add_option("--seed", random_args.seed, "SplitMix64 seed");
    random_cmd->add_option("--dialect", random_args.dialect, "output dialect");

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the embedded golden corpus checks");

    std::string input_for_diagnostics;
    try {
        app.parse(argc, argv);
        if (parse_cmd->parsed()) {
            input_for_diagnostics = parse_args.expr;
            return cmd_parse(parse_args);
        }
        if (canon_cmd->parsed()) {
            input_for_diagnostics = canon_args.expr;
            return cmd_canon(canon_args);
        }
        if (convert_cmd->parsed()) {
            input_for_diagnostics = convert_args.expr;
            return cmd_convert(convert_args);
        }
        if (compose_cmd->parsed()) {
            return cmd_compose(compose_args);
        }
        if (conjugate_cmd->parsed()) {
            return cmd_conjugate(conjugate_args);
        }
        if (power_cmd->parsed()) {
            input_for_diagnostics = power_args.expr;
            return cmd_power(power_args);
        }
        if (classes_cmd->parsed()) {
            return cmd_classes(classes_degree);
        }
        if (random_cmd->parsed()) {
            return cmd_random(random_args);
        }
        if (selftest_cmd->parsed()) {
            return trafo::golden::run_selftest(std::cout) == 0 ? kExitOk : 1;
        }
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    } catch (const trafo::ParseError& e) {
        print_diagnostic(e, input_for_diagnostics);
        return kExitParse;
    } catch (const trafo::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const trafo::BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitBound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
