#pragma once

#include <cstdint>

namespace hribench::util {

/// SplitMix64 stream. Every seeded draw in the project goes through this
/// class so that sequences are bit-identical across platforms and standard
/// library implementations (std:: distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). Fixed-point reduction, no rejection loop.
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(next_u64() >> 32)) * n) >> 32);
    }

    /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

    /// True with probability percent/100.
    bool chance(int percent) { return static_cast<int>(below(100)) < percent; }

    /// Stable combination of two seeds into a new stream seed.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

} // namespace hribench::util
