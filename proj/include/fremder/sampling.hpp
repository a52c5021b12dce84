#pragma once

#include <cstdint>
#include <random>

#include "fremder/matrix.hpp"

namespace fremder {

/// Deterministic engine for stream `stream` derived from a user seed.
inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

/// Uniform point on the complex unit sphere (normalized complex Gaussian).
template <class Engine>
Vector random_unit_vector(Index n, Engine& engine) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector x(n);
    for (;;) {
        for (Index i = 0; i < n; ++i) {
            const double re = normal(engine);
            const double im = normal(engine);
            x(i) = Complex(re, im);
        }
        const double norm = x.norm();
        if (norm > 1e-300) return x / norm;
    }
}

}  // namespace fremder
