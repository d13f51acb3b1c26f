#pragma once

#include <cstdint>

#include "certint/rational.hpp"

namespace certint {

/// Deterministic 64-bit generator (splitmix64). Hand-rolled so that seeded
/// suites produce identical streams on every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Rational in [lo, hi] with denominator at most max_den.
    Rational rational_in(long lo, long hi, long max_den) {
        const long den = range(1, max_den);
        const long num = range(lo * den, hi * den);
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace certint
