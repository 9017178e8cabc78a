#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trafo/transformation.hpp"

namespace trafo {

/// The notation dialects this library converts between. Path notation
/// supports emission only.
enum class Dialect {
    compact,
    linear,
    image_list,
    path,
    factorization,
};

/// CLI-facing dialect identifiers: "compact", "linear", "imagelist", "path",
/// "factor".
std::optional<Dialect> dialect_from_name(std::string_view name);
std::string_view dialect_name(Dialect dialect);

/// One factor of a trajectory factorization: path entries map to their
/// successor, the last entry maps to `connect` (a point of the path), and
/// every other point stays fixed.
struct TrajectoryFactor {
    std::vector<int> path;
    int connect = 0;

    bool operator==(const TrajectoryFactor&) const = default;
};

using FactorList = std::vector<TrajectoryFactor>;

/// Image-list notation: entry i is f(i), separated by spaces and/or commas.
Transformation parse_image_list(std::string_view text);
std::string emit_image_list(const Transformation& f);

/// Linear notation: recursive "[preimages;root]" trees, cycles in
/// parentheses. Emission follows the same ordering rules as the canonical
/// compact form; conveyor chains become nested brackets.
Transformation parse_linear(std::string_view text, std::optional<int> degree = std::nullopt);
std::string emit_linear(const Transformation& f);

/// Path notation (emission only): every nontrivial cycle in parentheses,
/// then for every leaf the full trajectory up to and including the first
/// cycle point, written "(x,...,c>". Shared suffixes repeat. The identity
/// emits "()".
std::string emit_path(const Transformation& f);

/// Trajectory factorization. Parsing evaluates each factor as a full
/// transformation (unmentioned points fixed) and composes left to right.
/// Emission greedily covers the unrealized edges, starting factors from the
/// least available trajectory start; the correctness contract is product
/// equality, not string equality.
Transformation factor_transformation(const TrajectoryFactor& factor, int degree);
FactorList emit_factorization(const Transformation& f);
std::string render_factorization(const FactorList& factors);
Transformation parse_factorization(std::string_view text, std::optional<int> degree = std::nullopt);

/// Parses `text` in the source dialect and emits it in the target dialect;
/// compact output is canonical. A supplied degree pads with fixed points.
/// Throws UnsupportedError when the source dialect is path.
std::string convert(std::string_view text, Dialect from, Dialect to,
                    std::optional<int> degree = std::nullopt);

/// Dialect-dispatching parse/emit used by convert and the CLI.
Transformation parse_dialect(Dialect dialect, std::string_view text,
                             std::optional<int> degree = std::nullopt);
std::string emit_dialect(Dialect dialect, const Transformation& f);

} // namespace trafo
