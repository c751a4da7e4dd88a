#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace unilab {

// All randomness in the library flows through Rng. A top-level seed plus a
// path of child() calls determines every draw, so independent components
// (signs, permutations, masks, reflections, per-trial workers) can consume
// randomness in any order without perturbing each other.
//
// Distribution sampling is implemented here rather than with <random>
// distributions because the standard leaves those implementation-defined;
// outputs must be reproducible across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : root_(splitmix64(seed ^ kGolden)), engine_(root_) {}

    /// Child stream for an indexed component (trial, probe, column, ...).
    Rng child(std::uint64_t index) const { return from_root(mix(root_, index)); }

    /// Child stream for a named component ("signs", "perm", ...).
    Rng child(std::string_view label) const {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        return from_root(mix(root_, h));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n), n >= 1. Rejection keeps the draw unbiased.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - (max % n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    double rademacher() { return (engine_() & 1ull) ? 1.0 : -1.0; }

    /// Standard normal via Box-Muller; one value per call, no state carried.
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

private:
    struct FromRoot {};
    Rng(FromRoot, std::uint64_t root) : root_(root), engine_(root) {}
    static Rng from_root(std::uint64_t root) { return Rng(FromRoot{}, root); }

    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += kGolden;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        return splitmix64(a ^ splitmix64(b + kGolden));
    }

    std::uint64_t root_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace unilab
