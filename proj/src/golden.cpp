#include "trafo/golden.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <utility>

#include "trafo/canonical.hpp"
#include "trafo/classify.hpp"
#include "trafo/dialects.hpp"
#include "trafo/interpret.hpp"
#include "trafo/parser.hpp"

namespace trafo::golden {

const char* const kBasins17 = "[[[1,3|2],5|4],6]([[7,8|9],10],11,[14,13,12])(16,17)";
const char* const kBranching9 = "([[8,9|5],6,7|1],[4,3,2])";

const char* const kRunningImageList = "2 1 2 3 3";
const char* const kRunningCompact = "(1,[[4,5|3],2])";
const char* const kRunningLinear = "([[4,5;3];2],1)";
const char* const kRunningPath = "(1,2)(4,3,2>(5,3,2>";
const char* const kRunningFactors = "[4,3,2,1|2][5,3|3]";

const char* const kAmbiguousA = "[1,2,[3,4|6]]";
const char* const kAmbiguousB = "[[1,2],3,4|6]";

const char* const kConjugated = "([1,2],3,4)";
const char* const kConjugator = "(1,2,3)";
const char* const kConjugationResult = "([2,3],1,4)";

const char* const kLinearChain = "[[[[1;2];3];4];5]";

const std::vector<std::string>& t4_class_strings() {
    static const std::vector<std::string> strings = {
        "[1,2,3|4]",
        "[[1,2],3|4]",
        "[1,2|3]",
        "[[1,2|3],4]",
        "[1,2,3,4]",
        "[1,2,3]",
        "[1,2][3,4]",
        "[1,2]",
        "[1,2](3,4)",
        "()",
        "(1,2)",
        "([1,2],3)",
        "(1,2,3)",
        "([1,2|3],4)",
        "([1,2],[3,4])",
        "([1,2,3],4)",
        "(1,2)(3,4)",
        "([1,2],3,4)",
        "(1,2,3,4)",
    };
    return strings;
}

namespace {

using Failures = std::vector<std::string>;

void check(Failures& fails, bool ok, const std::string& what) {
    if (!ok) {
        fails.push_back(what);
    }
}

Transformation running_example() {
    return Transformation({2, 1, 2, 3, 3});
}

void check_basins17(Failures& fails) {
    const Transformation g = interpret_compact(kBasins17, 17);
    check(fails, g.degree() == 17, "17-point example: degree");
    check(fails, g.apply(15) == 15, "17-point example: unmentioned point 15 must be fixed");
    const Decomposition d = decompose(g);
    check(fails, d.components.size() == 4, "17-point example: four components expected");
    if (d.components.size() == 4) {
        check(fails, d.components[0].cycle == std::vector<int>{6}, "component 1 cycle {6}");
        check(fails, d.components[1].cycle == std::vector<int>({10, 11, 12}),
              "component 2 cycle {10,11,12}");
        check(fails, d.components[2].cycle == std::vector<int>{15}, "component 3 cycle {15}");
        check(fails, d.components[3].cycle == std::vector<int>({16, 17}),
              "component 4 cycle {16,17}");
    }
    check(fails, canonical_form(g) == kBasins17, "17-point example: canonical form reproduces it");
    // The figure prints the expression with a blank between components.
    const std::string spaced = "[[[1,3|2],5|4],6] ([[7,8|9],10],11,[14,13,12])(16,17)";
    check(fails, interpret_compact(spaced, 17) == g, "whitespace variant parses identically");
    std::vector<int> expected_points;
    for (int p = 1; p <= 14; ++p) {
        expected_points.push_back(p);
    }
    expected_points.push_back(16);
    expected_points.push_back(17);
    check(fails, mentioned_points(parse_compact(kBasins17)) == expected_points,
          "17-point example: mentioned points");
}

void check_branching9(Failures& fails) {
    const Transformation f = interpret_compact(kBranching9);
    check(fails, f.images() == std::vector<int>({2, 1, 2, 3, 1, 1, 1, 5, 5}),
          "9-point example: image table");
    check(fails, canonical_form(f) == kBranching9, "9-point example: canonical form reproduces it");
}

void check_running_renderings(Failures& fails) {
    const Transformation f = running_example();
    check(fails, parse_image_list(kRunningImageList) == f, "running example: image list parses");
    check(fails, interpret_compact(kRunningCompact) == f, "running example: compact parses");
    check(fails, parse_linear(kRunningLinear) == f, "running example: linear parses");
    check(fails, parse_factorization(kRunningFactors) == f, "running example: factors parse");
    check(fails, canonical_form(f) == kRunningCompact, "running example: canonical compact form");
    check(fails, emit_path(f) == kRunningPath, "running example: path emission");
    check(fails, render_factorization(emit_factorization(f)) == kRunningFactors,
          "running example: greedy factorization reproduces the published product");
}

void check_ambiguous_pair(Failures& fails) {
    const Transformation a = interpret_compact(kAmbiguousA);
    const Transformation b = interpret_compact(kAmbiguousB);
    check(fails, a == b, "ambiguous pair: both spellings denote one transformation");
    check(fails, canonical_form(a) == kAmbiguousB, "ambiguous pair: canonical spelling");
    check(fails, !is_canonical(kAmbiguousA), "ambiguous pair: conveyor spelling is not canonical");
    check(fails, is_canonical(kAmbiguousB), "ambiguous pair: splat spelling is canonical");
}

void check_conjugation(Failures& fails) {
    const Transformation f = interpret_compact(kConjugated, 4);
    const Transformation s = interpret_compact(kConjugator, 4);
    const Transformation expected = interpret_compact(kConjugationResult, 4);
    check(fails, conjugate(f, s) == expected, "conjugation example: relabeled transformation");
    // Relabeling the notation text point-for-point gives the published string.
    const CompactAst relabeled =
        relabel_points(parse_compact(canonical_form(f)), [&](int p) { return s.apply(p); });
    check(fails, emit_ast(relabeled) == kConjugationResult,
          "conjugation example: string-level relabeling");
}

void check_t4_strings(Failures& fails) {
    const auto& strings = t4_class_strings();
    check(fails, strings.size() == 19, "19 degree-4 class strings");
    std::vector<Transformation> parsed;
    for (const std::string& text : strings) {
        parsed.push_back(interpret_compact(text, 4));
        check(fails, is_canonical(text), "class string is canonical: " + text);
        check(fails,
              structural_idempotent(canonical_form(parsed.back())) == is_idempotent(parsed.back()),
              "structural idempotence agrees for " + text);
    }
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        for (std::size_t j = i + 1; j < parsed.size(); ++j) {
            check(fails, !are_conjugate(parsed[i], parsed[j]),
                  "class strings are pairwise non-conjugate: " + strings[i] + " vs " + strings[j]);
        }
    }
}

void check_small_forms(Failures& fails) {
    check(fails, interpret_compact("()", 5) == Transformation::identity(5), "identity at degree 5");
    check(fails, canonical_form(Transformation::identity(7)) == "()", "identity emits ()");
    check(fails, emit_path(Transformation::identity(3)) == "()", "identity path form");
    check(fails, emit_linear(Transformation::identity(3)) == "()", "identity linear form");
    check(fails, render_factorization(emit_factorization(Transformation::identity(3))) == "()",
          "identity factorization form");
    check(fails, interpret_compact("[1,2,3|4]").images() == std::vector<int>({4, 4, 4, 4}),
          "constant map to 4");
    const Transformation chain = parse_linear(kLinearChain);
    check(fails, chain.images() == std::vector<int>({2, 3, 4, 5, 5}), "five-point linear chain");
    check(fails, canonical_form(chain) == "[1,2,3,4,5]", "chain collapses to one conveyor");
}

const std::vector<std::pair<const char*, void (*)(Failures&)>>& checks() {
    static const std::vector<std::pair<const char*, void (*)(Failures&)>> list = {
        {"17-point-example", check_basins17},
        {"9-point-example", check_branching9},
        {"running-example-renderings", check_running_renderings},
        {"ambiguous-pair", check_ambiguous_pair},
        {"conjugation-relabeling", check_conjugation},
        {"degree-4-class-strings", check_t4_strings},
        {"small-forms", check_small_forms},
    };
    return list;
}

} // namespace

std::vector<std::string> run_golden_checks() {
    Failures fails;
    for (const auto& [name, fn] : checks()) {
        try {
            fn(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string(name) + " threw: " + e.what());
        }
    }
    return fails;
}

int run_selftest(std::ostream& out) {
    int failures = 0;
    for (const auto& [name, fn] : checks()) {
        Failures fails;
        try {
            fn(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        if (fails.empty()) {
            out << "ok " << name << "\n";
        } else {
            ++failures;
            out << "FAIL " << name << "\n";
            for (const std::string& message : fails) {
                out << "  - " << message << "\n";
            }
        }
    }
    out << (failures == 0 ? "selftest passed" : "selftest FAILED") << " ("
        << checks().size() - static_cast<std::size_t>(failures) << "/" << checks().size()
        << " checks)\n";
    return failures;
}

} // namespace trafo::golden
