#pragma once

// Seeded RNG with an explicit uint64 -> double mapping.  We avoid
// std::uniform_real_distribution because its output sequence is
// implementation-defined; documented seeds must reproduce everywhere.

#include <cstdint>
#include <random>

namespace evosr {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53 random mantissa bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Uniform in the open interval (lo, hi): exact endpoints are redrawn
    // (probability ~2^-53 per draw, so this effectively never loops).
    double uniform_open(double lo, double hi) {
        for (;;) {
            const double v = uniform(lo, hi);
            if (v != lo && v != hi) return v;
        }
    }

    std::uint64_t next_u64() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace evosr
