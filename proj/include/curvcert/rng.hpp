#pragma once

#include <cmath>
#include <cstdint>

namespace curvcert {

/// SplitMix64 generator: seedable, and splittable per sample index so
/// Monte-Carlo sweeps stay deterministic under any parallel schedule.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for one sample of a sweep: mixes the base seed
    /// with the sample index before seeding.
    static Rng split(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (haveSpare_) {
            haveSpare_ = false;
            return spare_;
        }
        double u = 0;
        while (u == 0.0) u = uniform();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(a);
        haveSpare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    bool haveSpare_ = false;
    double spare_ = 0.0;
};

}  // namespace curvcert
