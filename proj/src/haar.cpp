#include "euclid/haar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "euclid/group.hpp"
#include "euclid/rng.hpp"
#include "euclid/spectral.hpp"

namespace euclid {

namespace {

constexpr std::uint64_t kChunk = 1 << 16;

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t used = 0;
    std::uint64_t clipped = 0;

    void add(double w) {
        sum += w;
        sum_sq += w * w;
        ++used;
    }

    HaarEstimate finish(double volume, std::uint64_t samples) const {
        if (used == 0) throw AllSamplesClipped("haar estimate: every sample was clipped");
        const double mean = sum / static_cast<double>(used);
        double std_err = 0.0;
        if (used > 1) {
            const double var =
                std::max(0.0, (sum_sq - static_cast<double>(used) * mean * mean) /
                                  static_cast<double>(used - 1));
            std_err = volume * std::sqrt(var / static_cast<double>(used));
        }
        HaarEstimate est{};
        est.value = volume * mean;
        est.std_error = std_err;
        est.samples = samples;
        est.clipped = clipped;
        est.reliable = clipped * 100 <= samples;
        return est;
    }
};

}  // namespace

double RegionBox::volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i];
    return v;
}

void RegionBox::validate(const Algebra& ctx) const {
    if (dim() != ctx.dim() || static_cast<int>(upper.size()) != ctx.dim())
        throw DimensionMismatch("RegionBox: bounds do not match the algebra dimension");
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (!(lower[i] < upper[i]))
            throw std::invalid_argument("RegionBox: lower bound must be below upper bound");
}

double haar_density(const Element& x) {
    const SpectralPlan::DetInfo info = det_info_via_spectrum(x);
    if (info.ratio <= x.context().zero_ratio())
        throw ZeroDivisorError("haar_density: singular on the zero-divisor set");
    return std::exp(-info.log_abs);
}

HaarEstimate haar_measure_mc(const Algebra& ctx, const RegionBox& box, std::uint64_t samples,
                             std::uint64_t seed) {
    box.validate(ctx);
    if (samples < 1) throw std::invalid_argument("haar_measure_mc: samples >= 1");
    const std::size_t n = static_cast<std::size_t>(ctx.dim());
    const SpectralPlan plan(ctx.dim());
    std::vector<double> point(n);

    Accumulator acc;
    std::uint64_t done = 0;
    for (std::uint64_t chunk = 0; done < samples; ++chunk) {
        Rng rng(derive_seed(seed, chunk));
        const std::uint64_t count = std::min<std::uint64_t>(kChunk, samples - done);
        for (std::uint64_t i = 0; i < count; ++i) {
            for (std::size_t d = 0; d < n; ++d)
                point[d] = box.lower[d] + (box.upper[d] - box.lower[d]) * rng.uniform01();
            const SpectralPlan::DetInfo info = plan.det_info(point);
            if (info.ratio <= ctx.zero_ratio()) {
                ++acc.clipped;
                continue;
            }
            acc.add(std::exp(-info.log_abs));
        }
        done += count;
    }
    return acc.finish(box.volume(), samples);
}

HaarEstimate translate_region(const Element& a, const RegionBox& box, std::uint64_t samples,
                              std::uint64_t seed) {
    const Algebra& ctx = a.context();
    box.validate(ctx);
    if (samples < 1) throw std::invalid_argument("translate_region: samples >= 1");
    const SpectralPlan plan(ctx.dim());
    const SpectralPlan::DetInfo a_info = plan.det_info(a.coeffs());
    if (a_info.ratio <= ctx.zero_ratio())
        throw ZeroDivisorError("translate_region: translation element is a zero divisor");

    const std::size_t n = static_cast<std::size_t>(ctx.dim());
    std::vector<double> point(n), mapped(n);

    Accumulator acc;
    std::uint64_t done = 0;
    for (std::uint64_t chunk = 0; done < samples; ++chunk) {
        Rng rng(derive_seed(seed, chunk));
        const std::uint64_t count = std::min<std::uint64_t>(kChunk, samples - done);
        for (std::uint64_t i = 0; i < count; ++i) {
            for (std::size_t d = 0; d < n; ++d)
                point[d] = box.lower[d] + (box.upper[d] - box.lower[d]) * rng.uniform01();
            negacyclic_multiply(a.coeffs(), point, mapped);
            const SpectralPlan::DetInfo info = plan.det_info(mapped);
            if (info.ratio <= ctx.zero_ratio()) {
                ++acc.clipped;
                continue;
            }
            // density at the mapped point times the Jacobian of y -> a*y
            acc.add(std::exp(a_info.log_abs - info.log_abs));
        }
        done += count;
    }
    return acc.finish(box.volume(), samples);
}

}  // namespace euclid
