#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace icb {

// splitmix64 stream. Self-contained so synthesized tensors do not depend on
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1]
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // Box-Muller, one draw per call (the paired value is cached)
    float normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double theta = 6.283185307179586476925287 * uniform();
        spare_ = static_cast<float>(r * std::sin(theta));
        have_spare_ = true;
        return static_cast<float>(r * std::cos(theta));
    }

    // integer in [lo, hi] inclusive
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + next_u64() % (hi - lo + 1);
    }

private:
    std::uint64_t state_;
    float spare_ = 0.0f;
    bool have_spare_ = false;
};

// Derives an independent stream for (seed, tag) pairs.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed ^ (tag * 0xD1B54A32D192ED03ull);
    z = (z ^ (z >> 32)) * 0xDABA0B6EB09322E3ull;
    return z ^ (z >> 32);
}

inline void fill_normal(Rng& rng, std::span<float> out, float stddev = 1.0f) {
    for (float& v : out) v = rng.normal() * stddev;
}

}  // namespace icb
