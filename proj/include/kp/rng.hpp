#pragma once

#include <cstdint>
#include <stdexcept>

namespace kp {

/// Deterministic 64-bit random stream used by the generator and the GA.
///
/// The algorithm is xoshiro256** 1.0 (Blackman & Vigna), with the state
/// expanded from a single 64-bit seed via SplitMix64. Both algorithms are
/// published with reference implementations, so a seed produces the same
/// stream on every platform and with every standard library. Integer draws
/// use rejection sampling, not modulo reduction, so they are unbiased.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        // SplitMix64 state expansion.
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    /// Next raw 64-bit word of the stream.
    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, range), rejection sampled. range must be > 0.
    std::uint64_t uniform_below(std::uint64_t range) {
        if (range == 0)
            throw std::invalid_argument("Rng::uniform_below: empty range");
        const std::uint64_t threshold = (0 - range) % range;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold)
                return r % range;
        }
    }

    /// Uniform integer in the closed interval [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi)
            throw std::invalid_argument("Rng::uniform: lo > hi");
        const std::uint64_t span = hi - lo;
        if (span == ~0ULL)
            return next();
        return lo + uniform_below(span + 1);
    }

    /// Uniform signed integer in the closed interval [lo, hi].
    std::int64_t uniform_i64(std::int64_t lo, std::int64_t hi) {
        if (lo > hi)
            throw std::invalid_argument("Rng::uniform_i64: lo > hi");
        return lo + static_cast<std::int64_t>(
                        uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// True with probability p (p <= 0 never, p >= 1 always).
    bool bernoulli(double p) { return uniform01() < p; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace kp
