#pragma once

#include <cstdint>
#include <random>

#include "wrench/common.hpp"

namespace wrench {

// Deterministic random stream. mt19937_64 output is fixed by the standard
// and the value mappings below are our own, so sequences are identical
// across platforms and compilers for a given (seed, stream) pair.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(splitmix64(seed ^ splitmix64(stream))) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of resolution.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], inclusive.
    std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t span = hi - lo + 1;
        if (span == 0) return engine_();  // full 64-bit range
        // Fixed-point multiply keeps the mapping platform-independent.
        return lo + static_cast<std::uint64_t>(
                        (static_cast<unsigned __int128>(engine_()) * span) >> 64);
    }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wrench
