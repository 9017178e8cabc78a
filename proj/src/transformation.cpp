#include "trafo/transformation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace trafo {

Transformation::Transformation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    for (int i = 0; i < n; ++i) {
        if (images_[i] < 1 || images_[i] > n) {
            throw std::invalid_argument("image " + std::to_string(images_[i]) + " of point " +
                                        std::to_string(i + 1) + " is outside 1.." +
                                        std::to_string(n));
        }
    }
}

Transformation Transformation::identity(int degree) {
    if (degree < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Transformation(std::move(images));
}

int Transformation::apply(int x) const {
    if (x < 1 || x > degree()) {
        throw std::invalid_argument("point " + std::to_string(x) + " is outside 1.." +
                                    std::to_string(degree()));
    }
    return images_[static_cast<std::size_t>(x) - 1];
}

Transformation compose(const Transformation& f, const Transformation& g) {
    if (f.degree() != g.degree()) {
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(f.degree()) +
                                    " vs " + std::to_string(g.degree()) + ")");
    }
    std::vector<int> images(static_cast<std::size_t>(f.degree()));
    for (int x = 1; x <= f.degree(); ++x) {
        images[static_cast<std::size_t>(x) - 1] = g.apply(f.apply(x));
    }
    return Transformation(std::move(images));
}

Transformation power(const Transformation& f, long long exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("power: exponent must be nonnegative");
    }
    Transformation result = Transformation::identity(f.degree());
    Transformation base = f;
    while (exponent > 0) {
        if (exponent & 1) {
            result = compose(result, base);
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = compose(base, base);
        }
    }
    return result;
}

Transformation extended(const Transformation& f, int degree) {
    if (degree < f.degree()) {
        throw std::invalid_argument("cannot extend to degree " + std::to_string(degree) +
                                    ": transformation already has degree " +
                                    std::to_string(f.degree()));
    }
    std::vector<int> images = f.images();
    images.reserve(static_cast<std::size_t>(degree));
    for (int x = f.degree() + 1; x <= degree; ++x) {
        images.push_back(x);
    }
    return Transformation(std::move(images));
}

OrbitIndices orbit_indices(const Transformation& f, int x) {
    if (x < 1 || x > f.degree()) {
        throw std::invalid_argument("point " + std::to_string(x) + " is outside 1.." +
                                    std::to_string(f.degree()));
    }
    std::vector<int> step(static_cast<std::size_t>(f.degree()) + 1, -1);
    int cur = x;
    int t = 0;
    while (step[static_cast<std::size_t>(cur)] == -1) {
        step[static_cast<std::size_t>(cur)] = t++;
        cur = f.apply(cur);
    }
    const int first = step[static_cast<std::size_t>(cur)];
    return {first, t - first};
}

Decomposition decompose(const Transformation& f) {
    const int n = f.degree();
    std::vector<std::vector<int>> pre(static_cast<std::size_t>(n) + 1);
    for (int x = 1; x <= n; ++x) {
        pre[static_cast<std::size_t>(f.apply(x))].push_back(x);
    }

    // Peel indegree-0 points; whatever survives lies on a cycle. The peel
    // order guarantees a point is processed after all of its preimages.
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (int x = 1; x <= n; ++x) {
        indeg[static_cast<std::size_t>(x)] = static_cast<int>(pre[static_cast<std::size_t>(x)].size());
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (int x = 1; x <= n; ++x) {
        if (indeg[static_cast<std::size_t>(x)] == 0) {
            stack.push_back(x);
        }
    }
    std::vector<char> on_cycle(static_cast<std::size_t>(n) + 1, 1);
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        on_cycle[static_cast<std::size_t>(x)] = 0;
        order.push_back(x);
        const int y = f.apply(x);
        if (--indeg[static_cast<std::size_t>(y)] == 0) {
            stack.push_back(y);
        }
    }

    // Build the incoming trees bottom-up along the peel order.
    std::vector<TreeNode> built(static_cast<std::size_t>(n) + 1);
    for (const int x : order) {
        TreeNode node;
        node.point = x;
        for (const int y : pre[static_cast<std::size_t>(x)]) {
            node.children.push_back(std::move(built[static_cast<std::size_t>(y)]));
        }
        built[static_cast<std::size_t>(x)] = std::move(node);
    }

    Decomposition result;
    std::vector<int> comp_of(static_cast<std::size_t>(n) + 1, -1);
    for (int x = 1; x <= n; ++x) {
        if (!on_cycle[static_cast<std::size_t>(x)] || comp_of[static_cast<std::size_t>(x)] != -1) {
            continue;
        }
        // x is the least point of its cycle: cycles are discovered in
        // ascending point order.
        ComponentData component;
        int cur = x;
        do {
            comp_of[static_cast<std::size_t>(cur)] = static_cast<int>(result.components.size());
            component.cycle.push_back(cur);
            cur = f.apply(cur);
        } while (cur != x);
        for (const int c : component.cycle) {
            std::vector<TreeNode> forest;
            for (const int y : pre[static_cast<std::size_t>(c)]) {
                if (!on_cycle[static_cast<std::size_t>(y)]) {
                    forest.push_back(std::move(built[static_cast<std::size_t>(y)]));
                }
            }
            component.forests.push_back(std::move(forest));
        }
        result.components.push_back(std::move(component));
    }

    // Sort components by their least contained point. Walk each non-cycle
    // point to its cycle to find its component first.
    for (int x = 1; x <= n; ++x) {
        if (comp_of[static_cast<std::size_t>(x)] != -1) {
            continue;
        }
        std::vector<int> path;
        int cur = x;
        while (comp_of[static_cast<std::size_t>(cur)] == -1) {
            path.push_back(cur);
            cur = f.apply(cur);
        }
        for (const int p : path) {
            comp_of[static_cast<std::size_t>(p)] = comp_of[static_cast<std::size_t>(cur)];
        }
    }
    std::vector<int> first_seen(result.components.size(), 0);
    int next = 0;
    for (int x = 1; x <= n; ++x) {
        const int c = comp_of[static_cast<std::size_t>(x)];
        if (first_seen[static_cast<std::size_t>(c)] == 0) {
            first_seen[static_cast<std::size_t>(c)] = ++next;
        }
    }
    std::vector<ComponentData> sorted(result.components.size());
    for (std::size_t i = 0; i < result.components.size(); ++i) {
        sorted[static_cast<std::size_t>(first_seen[i] - 1)] = std::move(result.components[i]);
    }
    result.components = std::move(sorted);
    return result;
}

std::vector<int> preimages(const Transformation& f, int x) {
    if (x < 1 || x > f.degree()) {
        throw std::invalid_argument("point " + std::to_string(x) + " is outside 1.." +
                                    std::to_string(f.degree()));
    }
    std::vector<int> out;
    for (int y = 1; y <= f.degree(); ++y) {
        if (f.apply(y) == x) {
            out.push_back(y);
        }
    }
    return out;
}

bool is_permutation(const Transformation& f) {
    std::vector<char> hit(static_cast<std::size_t>(f.degree()) + 1, 0);
    for (const int y : f.images()) {
        if (hit[static_cast<std::size_t>(y)]) {
            return false;
        }
        hit[static_cast<std::size_t>(y)] = 1;
    }
    return true;
}

bool is_idempotent(const Transformation& f) {
    return compose(f, f) == f;
}

Transformation conjugate(const Transformation& f, const Transformation& s) {
    if (s.degree() != f.degree()) {
        throw std::invalid_argument("conjugate: degree mismatch (" + std::to_string(f.degree()) +
                                    " vs " + std::to_string(s.degree()) + ")");
    }
    if (!is_permutation(s)) {
        throw std::invalid_argument("conjugate: conjugator must be a permutation");
    }
    std::vector<int> images(static_cast<std::size_t>(f.degree()));
    for (int x = 1; x <= f.degree(); ++x) {
        images[static_cast<std::size_t>(s.apply(x)) - 1] = s.apply(f.apply(x));
    }
    return Transformation(std::move(images));
}

Transformation inverse(const Transformation& s) {
    if (!is_permutation(s)) {
        throw std::invalid_argument("inverse: not a permutation");
    }
    std::vector<int> images(static_cast<std::size_t>(s.degree()));
    for (int x = 1; x <= s.degree(); ++x) {
        images[static_cast<std::size_t>(s.apply(x)) - 1] = x;
    }
    return Transformation(std::move(images));
}

int min_point(const TreeNode& node) {
    int best = node.point;
    for (const TreeNode& child : node.children) {
        best = std::min(best, min_point(child));
    }
    return best;
}

} // namespace trafo
