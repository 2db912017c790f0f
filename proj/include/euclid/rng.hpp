#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>

namespace euclid {

// splitmix64 finalizer; derives independent, well-scrambled stream seeds
// from a user seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// mt19937_64 engine with hand-coded uniform and normal mappings.  The
// engine's output sequence is pinned by the standard and the mappings are
// spelled out here, so a fixed seed produces the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller (second deviate cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    std::uint64_t next_u64() { return eng_(); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Fills `out` with a point uniform on the unit sphere (Gaussian direction,
/// normalized; the all-zero draw is rejected).
inline void sample_unit_sphere(Rng& rng, std::span<double> out) {
    for (;;) {
        double norm2 = 0.0;
        for (double& x : out) {
            x = rng.normal();
            norm2 += x * x;
        }
        if (norm2 > 0.0) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& x : out) x *= inv;
            return;
        }
    }
}

/// Fills `out` with a point uniform in the closed unit ball
/// (sphere direction scaled by U^(1/n)).
inline void sample_unit_ball(Rng& rng, std::span<double> out) {
    sample_unit_sphere(rng, out);
    const double r = std::pow(rng.uniform01(), 1.0 / static_cast<double>(out.size()));
    for (double& x : out) x *= r;
}

}  // namespace euclid
