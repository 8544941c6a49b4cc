// Deterministic 64-bit PRNG (splitmix64) so weight draws, data generation
// and shuffles reproduce bit-for-bit across platforms. The exact recurrence
// is documented in README.md; changing it changes every seeded artifact.
#ifndef DIFB_RNG_HPP
#define DIFB_RNG_HPP

#include <cstdint>

namespace difb {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // [0, n), by modulo; bias is negligible for n << 2^64
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

}  // namespace difb

#endif
