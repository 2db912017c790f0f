#include "euclid/group.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "euclid/rng.hpp"

namespace euclid {

namespace {

constexpr std::uint64_t kChunk = 1 << 16;

}  // namespace

ZeroDivisorReport is_zero_divisor(const Element& u) {
    const SpectralPlan::DetInfo info = det_info_via_spectrum(u);
    ZeroDivisorReport report{};
    report.det_value = info.value;
    report.min_eigen_ratio = info.ratio;
    report.is_zero_divisor = info.ratio <= u.context().zero_ratio();
    return report;
}

Element inverse_cayley_hamilton(const Element& u) {
    if (is_zero_divisor(u).is_zero_divisor)
        throw ZeroDivisorError("inverse_cayley_hamilton: element is a zero divisor");
    const int n = u.dim();
    // x * rep(u) = e_1  <=>  rep(u)^T x^T = e_1^T
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(0) = 1.0;
    const Eigen::VectorXd x = matrix_rep(u).transpose().partialPivLu().solve(rhs);
    std::vector<double> coeffs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) coeffs[static_cast<std::size_t>(i)] = x(i);
    return Element(u.context(), std::move(coeffs));
}

double r4_det_closed_form(const Element& u) {
    if (u.dim() != 4)
        throw DimensionMismatch("r4_det_closed_form: requires dimension 4");
    const double u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3];
    const double a = u1 * u1 - u3 * u3 + 2.0 * u2 * u4;
    const double b = u4 * u4 - u2 * u2 + 2.0 * u1 * u3;
    return a * a + b * b;
}

Element r4_zero_divisor_point(const Algebra& ctx, double s, double t, PlaneBranch branch) {
    if (ctx.dim() != 4)
        throw DimensionMismatch("r4_zero_divisor_point: requires dimension 4");
    const double r = std::numbers::sqrt2;
    std::vector<double> coeffs(4);
    coeffs[0] = s;
    coeffs[1] = t;
    if (branch == PlaneBranch::I) {
        coeffs[2] = -s + r * t;
        coeffs[3] = -r * s + t;
    } else {
        coeffs[2] = -s - r * t;
        coeffs[3] = r * s + t;
    }
    return Element(ctx, std::move(coeffs));
}

double estimate_zero_divisor_measure(const Algebra& ctx, std::uint64_t samples, double eps,
                                     std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("estimate_zero_divisor_measure: samples >= 1");
    const std::size_t n = static_cast<std::size_t>(ctx.dim());
    const SpectralPlan plan(ctx.dim());
    std::vector<double> point(n);

    std::uint64_t hits = 0;
    std::uint64_t done = 0;
    for (std::uint64_t chunk = 0; done < samples; ++chunk) {
        Rng rng(derive_seed(seed, chunk));
        const std::uint64_t count = std::min<std::uint64_t>(kChunk, samples - done);
        for (std::uint64_t i = 0; i < count; ++i) {
            sample_unit_ball(rng, point);
            const SpectralPlan::DetInfo info = plan.det_info(point);
            if (std::abs(info.value) < eps) ++hits;
        }
        done += count;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

bool star_shape_check(const Element& u, std::span<const double> ts) {
    if (!is_zero_divisor(u).is_zero_divisor)
        throw NotAZeroDivisor("star_shape_check: input is not a zero divisor");
    for (double t : ts)
        if (!is_zero_divisor(t * u).is_zero_divisor) return false;
    return true;
}

std::vector<Element> square_roots_of_pm1(const Algebra& ctx, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("square_roots_of_pm1: sign must be +1 or -1");
    const int n = ctx.dim();
    if (n > 16)
        throw std::invalid_argument("square_roots_of_pm1: enumeration limited to n <= 16");

    using cd = std::complex<double>;
    const cd plus = (sign == 1) ? cd(1.0, 0.0) : cd(0.0, 1.0);
    const cd minus = -plus;

    // Free slots: one per conjugate pair k < n-1-k, plus the self-paired
    // middle eigenvalue when n is odd.  The middle one must be real, so
    // sign = -1 has no solutions in odd dimension.
    const int pairs = n / 2;
    const bool has_middle = (n % 2) == 1;
    if (has_middle && sign == -1) return {};

    const SpectralPlan plan(n);
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<Element> roots;
    const std::uint64_t combos = 1ull << (pairs + (has_middle ? 1 : 0));
    std::vector<cd> lam(nn), raw(nn);
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
        for (int k = 0; k < pairs; ++k) {
            const cd v = (bits >> k & 1ull) ? minus : plus;
            lam[static_cast<std::size_t>(k)] = v;
            lam[static_cast<std::size_t>(n - 1 - k)] = std::conj(v);
        }
        if (has_middle)
            lam[static_cast<std::size_t>(pairs)] = (bits >> pairs & 1ull) ? -1.0 : 1.0;

        plan.coefficients(lam, raw);
        std::vector<double> coeffs(nn);
        double residue = 0.0;
        for (std::size_t i = 0; i < nn; ++i) {
            // eigenvalues all have magnitude 1, so anything this small is
            // transform residue, not signal
            coeffs[i] = (std::abs(raw[i].real()) <= 1e-12) ? 0.0 : raw[i].real();
            residue = std::max(residue, std::abs(raw[i].imag()));
        }
        if (residue > ctx.tol_eq()) continue;  // cannot happen for valid patterns
        Element v(ctx, std::move(coeffs));
        const Element target = static_cast<double>(sign) * Element::one(ctx);
        if (max_abs_diff(power(v, 2), target) > ctx.tol_eq()) continue;
        roots.push_back(std::move(v));
    }

    std::sort(roots.begin(), roots.end(), [](const Element& a, const Element& b) {
        return a.coeffs() < b.coeffs();
    });
    return roots;
}

}  // namespace euclid
