#pragma once

#include <cstdint>

#include "trafo/transformation.hpp"

namespace trafo {

/// SplitMix64 generator (Steele, Lea, Flood; the java.util.SplittableRandom
/// finalizer). Fixed here so random corpora are reproducible byte-for-byte
/// across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by rejection sampling (no modulo bias).
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

private:
    std::uint64_t state_;
};

/// Uniformly random transformation on {1..degree}: each image is drawn with
/// one `bounded(degree)` call, for points 1 through degree in order.
Transformation random_transformation(int degree, SplitMix64& rng);

} // namespace trafo
