#pragma once

#include <cstdint>
#include <vector>

#include "euclid/algebra.hpp"

namespace euclid {

/// Axis-aligned box, the concrete measurable set used by the invariant
/// measure estimators.  lower_i < upper_i for all i.
struct RegionBox {
    std::vector<double> lower;
    std::vector<double> upper;

    int dim() const noexcept { return static_cast<int>(lower.size()); }
    double volume() const;
    void validate(const Algebra& ctx) const;
};

struct HaarEstimate {
    double value;
    double std_error;
    std::uint64_t samples;
    std::uint64_t clipped;  ///< samples rejected as too close to the zero-divisor set
    bool reliable;          ///< clipped / samples <= 1%
};

/// Density of the invariant measure on the unit group:
/// 1 / |det matrix_rep(x)|.  Throws ZeroDivisorError on (numerical)
/// zero divisors, where the density is singular.
double haar_density(const Element& x);

/// Plain Monte Carlo estimate of integral over `box` of the invariant
/// density: volume * mean density over uniform samples.  Samples whose
/// spectral ratio is at or below ctx.zero_ratio are excluded and counted
/// in `clipped`; throws AllSamplesClipped if none survive.  Deterministic
/// for fixed seed and sample count (fixed chunking, per-chunk seeds).
HaarEstimate haar_measure_mc(const Algebra& ctx, const RegionBox& box, std::uint64_t samples,
                             std::uint64_t seed);

/// Estimates the measure of the translated set a * box by mapping uniform
/// samples y in box through y -> a*y and weighting by the Jacobian
/// |det matrix_rep(a)|.  Translation invariance makes this agree with
/// haar_measure_mc(box) up to combined statistical error.
HaarEstimate translate_region(const Element& a, const RegionBox& box, std::uint64_t samples,
                              std::uint64_t seed);

}  // namespace euclid
