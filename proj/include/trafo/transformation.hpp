#pragma once

#include <compare>
#include <vector>

namespace trafo {

/// A total function on {1..n}, stored as its image table.
///
/// Entry i-1 of the table holds f(i). Degree 0 is legal and denotes the empty
/// transformation. Immutable after construction; equality is image-table
/// equality.
class Transformation {
public:
    /// The empty transformation (degree 0).
    Transformation() = default;

    /// Builds from a 1-based image table. Throws std::invalid_argument if any
    /// entry falls outside {1..n}.
    explicit Transformation(std::vector<int> images);

    static Transformation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }

    /// f(x) for 1 <= x <= degree. Throws std::invalid_argument out of range.
    int apply(int x) const;

    int operator()(int x) const { return apply(x); }

    const std::vector<int>& images() const { return images_; }

    bool operator==(const Transformation&) const = default;
    auto operator<=>(const Transformation&) const = default;

private:
    std::vector<int> images_;
};

/// Eventual-orbit indices of a point: the least tail m >= 0 and, for that m,
/// the least period k >= 1 with f^m(x) = f^{m+k}(x).
struct OrbitIndices {
    int tail = 0;
    int period = 1;

    bool operator==(const OrbitIndices&) const = default;
};

/// A node of an incoming tree: a non-cycle point together with the trees of
/// its own preimages.
struct TreeNode {
    int point = 0;
    std::vector<TreeNode> children;
};

/// One connected component of the functional digraph: a cycle (listed in
/// cycle order, least point first) plus, per cycle point, the forest of
/// incoming trees rooted at its non-cycle preimages (sorted by root point).
struct ComponentData {
    std::vector<int> cycle;
    std::vector<std::vector<TreeNode>> forests; // parallel to cycle
};

/// Full functional-digraph decomposition. Components are sorted by their
/// least contained point and partition {1..n}.
struct Decomposition {
    std::vector<ComponentData> components;
};

/// h(x) = g(f(x)): f is applied first. Throws std::invalid_argument on
/// degree mismatch.
Transformation compose(const Transformation& f, const Transformation& g);

/// e-fold self-composition; power(f, 0) is the identity of the same degree.
Transformation power(const Transformation& f, long long exponent);

/// Extends f to a larger degree by adding fixed points. Throws
/// std::invalid_argument if degree < f.degree().
Transformation extended(const Transformation& f, int degree);

OrbitIndices orbit_indices(const Transformation& f, int x);

Decomposition decompose(const Transformation& f);

/// { y : f(y) = x }, sorted ascending.
std::vector<int> preimages(const Transformation& f, int x);

bool is_permutation(const Transformation& f);

/// f is idempotent iff compose(f, f) == f.
bool is_idempotent(const Transformation& f);

/// Relabels f by the permutation s: the result h satisfies h(s(x)) = s(f(x))
/// for all x. Throws std::invalid_argument if s is not a permutation of the
/// same degree.
Transformation conjugate(const Transformation& f, const Transformation& s);

/// Inverse of a permutation. Throws std::invalid_argument otherwise.
Transformation inverse(const Transformation& s);

/// Least point contained in the subtree rooted at `node`.
int min_point(const TreeNode& node);

} // namespace trafo
