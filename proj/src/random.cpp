#include "trafo/random.hpp"

#include <stdexcept>

namespace trafo {

Transformation random_transformation(int degree, SplitMix64& rng) {
    if (degree < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    if (degree == 0) {
        return Transformation();
    }
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        images[static_cast<std::size_t>(i)] =
            static_cast<int>(rng.bounded(static_cast<std::uint64_t>(degree))) + 1;
    }
    return Transformation(std::move(images));
}

} // namespace trafo
