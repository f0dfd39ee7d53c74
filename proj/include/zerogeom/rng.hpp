#pragma once

#include <cstdint>

#include "zerogeom/rational.hpp"

namespace zerogeom {

// The reproducibility contract for every randomized run: splitmix64 with
// 64-bit state. Substream i of base seed s starts from state
// s + (i + 1) * 0x9E3779B97F4A7C15, so trials can run in parallel and still
// produce identical draws in any execution order. Bounded draws use plain
// modulo reduction; the tiny bias is irrelevant here and keeping the mapping
// trivial makes the stream easy to reproduce in any language.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
    }
};

// Nonzero rational with numerator in [-20, 20] \ {0} and denominator in
// [1, 20]; the draw convention behind every RANDOM_EVAL trial.
inline BigRational random_nonzero_rational(SplitMix64& rng) {
    const std::uint64_t pick = rng.next_below(40);
    const long num = pick < 20 ? static_cast<long>(pick) - 20 : static_cast<long>(pick) - 19;
    const long den = static_cast<long>(rng.next_below(20)) + 1;
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

// Rational in (0, hi] with denominator in [1, den_max].
inline BigRational random_positive_rational(SplitMix64& rng, unsigned hi, unsigned den_max) {
    const unsigned long den = rng.next_below(den_max) + 1;
    const unsigned long num = rng.next_below(hi * den) + 1;
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace zerogeom
