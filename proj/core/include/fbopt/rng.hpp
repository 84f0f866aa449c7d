#pragma once

#include <cstdint>
#include <random>

namespace fbopt {

// Deterministic random source. All sampling goes through explicit
// integer/float conversions so that a given seed reproduces the same
// stream regardless of standard-library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased integer in [0, n), n > 0, by rejection on the top bits.
    std::uint32_t uniform_below(std::uint32_t n) {
        const std::uint64_t span = 0x100000000ull;
        const std::uint64_t limit = span - span % n;
        for (;;) {
            std::uint64_t x = next_u64() >> 32;
            if (x < limit) return static_cast<std::uint32_t>(x % n);
        }
    }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // +1 or -1 with equal probability.
    int sign() { return (next_u64() >> 63) ? -1 : +1; }

private:
    std::mt19937_64 gen_;
};

} // namespace fbopt
