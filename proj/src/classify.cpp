#include "trafo/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "trafo/canonical.hpp"
#include "trafo/errors.hpp"

namespace trafo {

namespace {

// Conjugation by a permutation table, without revalidating the permutation.
std::vector<int> conjugate_table(const std::vector<int>& f, const std::vector<int>& s) {
    std::vector<int> h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        h[static_cast<std::size_t>(s[i]) - 1] = s[static_cast<std::size_t>(f[i]) - 1];
    }
    return h;
}

std::uint64_t code_of(const std::vector<int>& images, int n) {
    std::uint64_t code = 0;
    for (std::size_t i = images.size(); i-- > 0;) {
        code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(images[i] - 1);
    }
    return code;
}

std::vector<int> images_of(std::uint64_t code, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        images[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(n)) + 1;
        code /= static_cast<std::uint64_t>(n);
    }
    return images;
}

} // namespace

bool are_conjugate(const Transformation& f, const Transformation& g) {
    if (f.degree() != g.degree()) {
        throw std::invalid_argument("are_conjugate: degree mismatch");
    }
    const int n = f.degree();
    if (n > kConjugacySearchMaxDegree) {
        throw BoundError("are_conjugate: degree " + std::to_string(n) +
                         " exceeds the brute-force bound " +
                         std::to_string(kConjugacySearchMaxDegree));
    }
    if (f == g) {
        return true;
    }
    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    do {
        if (conjugate_table(f.images(), s) == g.images()) {
            return true;
        }
    } while (std::next_permutation(s.begin(), s.end()));
    return false;
}

std::vector<Transformation> conjugacy_class_representatives(int n) {
    if (n < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    if (n > kClassEnumerationMaxDegree) {
        throw BoundError("conjugacy_class_representatives: degree " + std::to_string(n) +
                         " exceeds the enumeration bound " +
                         std::to_string(kClassEnumerationMaxDegree));
    }
    if (n == 0) {
        return {Transformation()};
    }

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> s(static_cast<std::size_t>(n));
        std::iota(s.begin(), s.end(), 1);
        do {
            perms.push_back(s);
        } while (std::next_permutation(s.begin(), s.end()));
    }

    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(n);
    }

    std::vector<char> visited(total, 0);
    std::vector<std::pair<std::string, Transformation>> reps;
    for (std::uint64_t code = 0; code < total; ++code) {
        if (visited[code]) {
            continue;
        }
        const std::vector<int> base = images_of(code, n);
        std::string best_string;
        Transformation best;
        for (const std::vector<int>& s : perms) {
            std::vector<int> h = conjugate_table(base, s);
            const std::uint64_t h_code = code_of(h, n);
            if (visited[h_code]) {
                continue;
            }
            visited[h_code] = 1;
            Transformation candidate(std::move(h));
            std::string text = canonical_form(candidate);
            if (best_string.empty() || text < best_string) {
                best_string = std::move(text);
                best = std::move(candidate);
            }
        }
        reps.emplace_back(std::move(best_string), std::move(best));
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Transformation> out;
    out.reserve(reps.size());
    for (auto& [text, rep] : reps) {
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace trafo
