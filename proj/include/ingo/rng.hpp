#pragma once

#include <cstdint>
#include <random>

namespace ingo {

// Seeded random stream. Same seed -> bit-identical draw sequence.
// All uniform doubles are produced from the top 53 bits of the engine
// output, so the sequence does not depend on library distribution
// internals.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    // Uniform integer in [0, n). n must be > 0.
    std::size_t index(std::size_t n) {
        std::size_t k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

    // Uniform integer in [0, n) \ {excluded}. n must be >= 2.
    std::size_t index_excluding(std::size_t n, std::size_t excluded) {
        std::size_t k = index(n - 1);
        return k < excluded ? k : k + 1;
    }

    // -1.0 or +1.0 with equal probability.
    double sign() { return uniform() < 0.5 ? -1.0 : 1.0; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace ingo
