#include "euclid/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace euclid {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 transform, X_k = sum_j a_j exp(sign*2*pi*i*jk/N),
// no normalization.  Twiddles come from one polar-evaluated table so the
// error does not accumulate across butterflies.
void fft_pow2(std::vector<cd>& a, int sign) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<cd> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = sign * 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        tw[k] = cd(std::cos(ang), std::sin(ang));
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const cd u = a[i + k];
                const cd v = a[i + k + half] * tw[k * stride];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

// Arbitrary-length transform via the Bluestein chirp re-expression:
// jk = (j^2 + k^2 - (j-k)^2) / 2 turns the DFT into one linear
// convolution, done with zero-padded power-of-two FFTs.  The quadratic
// chirp exponent is reduced mod 2n in integer arithmetic first.
std::vector<cd> dft_bluestein(const std::vector<cd>& a, int sign) {
    const std::size_t n = a.size();
    const long long two_n = 2LL * static_cast<long long>(n);
    std::vector<cd> chirp(n);
    for (std::size_t m = 0; m < n; ++m) {
        const long long e = static_cast<long long>(m) * static_cast<long long>(m) % two_n;
        const double ang = sign * kPi * static_cast<double>(e) / static_cast<double>(n);
        chirp[m] = cd(std::cos(ang), std::sin(ang));
    }
    const std::size_t L = next_pow2(2 * n - 1);
    std::vector<cd> b(L, cd(0.0)), c(L, cd(0.0));
    for (std::size_t m = 0; m < n; ++m) b[m] = a[m] * chirp[m];
    c[0] = std::conj(chirp[0]);
    for (std::size_t m = 1; m < n; ++m) c[m] = c[L - m] = std::conj(chirp[m]);
    fft_pow2(b, -1);
    fft_pow2(c, -1);
    for (std::size_t i = 0; i < L; ++i) b[i] *= c[i];
    fft_pow2(b, +1);
    const double inv = 1.0 / static_cast<double>(L);
    std::vector<cd> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = chirp[k] * b[k] * inv;
    return out;
}

std::vector<cd> dft_any(std::vector<cd> a, int sign) {
    if (is_pow2(a.size())) {
        fft_pow2(a, sign);
        return a;
    }
    return dft_bluestein(a, sign);
}

}  // namespace

SpectralPlan::SpectralPlan(int n) : n_(n), pow2_(is_pow2(static_cast<std::size_t>(n))) {
    if (n < 2) throw std::invalid_argument("SpectralPlan: dimension must be >= 2");
    root_.resize(2 * static_cast<std::size_t>(n));
    for (std::size_t m = 0; m < root_.size(); ++m) {
        const double ang = kPi * static_cast<double>(m) / static_cast<double>(n);
        root_[m] = cd(std::cos(ang), std::sin(ang));
    }
}

void SpectralPlan::eigenvalues(std::span<const double> coeffs,
                               std::span<std::complex<double>> out) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    if (coeffs.size() != n || out.size() != n)
        throw DimensionMismatch("SpectralPlan::eigenvalues: size mismatch");
    if (n_ < kDirectThreshold) {
        for (std::size_t k = 0; k < n; ++k) {
            cd acc(0.0);
            for (std::size_t j = 0; j < n; ++j)
                acc += coeffs[j] * root_[(2 * k + 1) * j % (2 * n)];
            out[k] = acc;
        }
        return;
    }
    std::vector<cd> t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = coeffs[j] * root_[j];
    std::vector<cd> res = dft_any(std::move(t), +1);
    std::copy(res.begin(), res.end(), out.begin());
}

void SpectralPlan::coefficients(std::span<const std::complex<double>> values,
                                std::span<std::complex<double>> out) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    if (values.size() != n || out.size() != n)
        throw DimensionMismatch("SpectralPlan::coefficients: size mismatch");
    const double inv_n = 1.0 / static_cast<double>(n);
    if (n_ < kDirectThreshold) {
        for (std::size_t j = 0; j < n; ++j) {
            cd acc(0.0);
            for (std::size_t k = 0; k < n; ++k)
                acc += values[k] * std::conj(root_[(2 * k + 1) * j % (2 * n)]);
            out[j] = acc * inv_n;
        }
        return;
    }
    std::vector<cd> t(values.begin(), values.end());
    std::vector<cd> res = dft_any(std::move(t), -1);
    for (std::size_t j = 0; j < n; ++j) out[j] = res[j] * inv_n * std::conj(root_[j]);
}

SpectralPlan::DetInfo SpectralPlan::det_info(std::span<const double> coeffs) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<cd> lam(n);
    eigenvalues(coeffs, lam);

    double log_abs = 0.0;
    cd phase(1.0, 0.0);
    double min_mag = std::numeric_limits<double>::infinity();
    double max_mag = 0.0;
    bool exact_zero = false;
    for (const cd& l : lam) {
        const double m = std::abs(l);
        min_mag = std::min(min_mag, m);
        max_mag = std::max(max_mag, m);
        if (m == 0.0) {
            exact_zero = true;
            continue;
        }
        log_abs += std::log(m);
        phase *= l / m;
        phase /= std::abs(phase);
    }

    DetInfo info{};
    info.ratio = (max_mag > 0.0) ? min_mag / max_mag : 0.0;
    if (exact_zero) {
        info.value = 0.0;
        info.log_abs = -std::numeric_limits<double>::infinity();
        info.sign = 0;
        info.overflow = false;
        return info;
    }
    info.log_abs = log_abs;
    info.sign = (phase.real() >= 0.0) ? 1 : -1;
    info.overflow = log_abs > std::log(std::numeric_limits<double>::max());
    info.value = info.overflow
                     ? info.sign * std::numeric_limits<double>::infinity()
                     : info.sign * std::exp(log_abs);
    return info;
}

Spectrum spectrum(const Element& u) {
    SpectralPlan plan(u.dim());
    Spectrum s;
    s.values.resize(static_cast<std::size_t>(u.dim()));
    plan.eigenvalues(u.coeffs(), s.values);
    return s;
}

Element inverse_spectrum(const Algebra& ctx, const Spectrum& s) {
    if (s.dim() != ctx.dim())
        throw DimensionMismatch("inverse_spectrum: spectrum has dimension " +
                                std::to_string(s.dim()));
    SpectralPlan plan(ctx.dim());
    std::vector<std::complex<double>> raw(s.values.size());
    plan.coefficients(s.values, raw);

    double scale = 1.0;
    for (const auto& v : s.values) scale = std::max(scale, std::abs(v));
    double residue = 0.0;
    for (const auto& c : raw) residue = std::max(residue, std::abs(c.imag()));
    if (residue > ctx.tol_eq() * scale)
        throw NotConjugateSymmetric("inverse_spectrum: imaginary residue " +
                                    std::to_string(residue));

    std::vector<double> coeffs(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) coeffs[i] = raw[i].real();
    return Element(ctx, std::move(coeffs));
}

Element multiply_fast(const Element& u, const Element& v) {
    if (u.dim() != v.dim())
        throw DimensionMismatch("multiply_fast: operands have dimensions " +
                                std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
    SpectralPlan plan(u.dim());
    const std::size_t n = static_cast<std::size_t>(u.dim());
    std::vector<std::complex<double>> a(n), b(n);
    plan.eigenvalues(u.coeffs(), a);
    plan.eigenvalues(v.coeffs(), b);
    for (std::size_t k = 0; k < n; ++k) a[k] *= b[k];
    std::vector<std::complex<double>> raw(n);
    plan.coefficients(a, raw);
    std::vector<double> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = raw[i].real();
    return Element(u.context(), std::move(coeffs));
}

SpectralPlan::DetInfo det_info_via_spectrum(const Element& u) {
    SpectralPlan plan(u.dim());
    return plan.det_info(u.coeffs());
}

double det_via_spectrum(const Element& u) { return det_info_via_spectrum(u).value; }

double spectral_ratio(const Element& u) { return det_info_via_spectrum(u).ratio; }

Element inverse_via_spectrum(const Element& u) {
    const Algebra& ctx = u.context();
    SpectralPlan plan(ctx.dim());
    const std::size_t n = static_cast<std::size_t>(ctx.dim());
    std::vector<std::complex<double>> lam(n);
    plan.eigenvalues(u.coeffs(), lam);

    double min_mag = std::numeric_limits<double>::infinity();
    double max_mag = 0.0;
    for (const auto& l : lam) {
        const double m = std::abs(l);
        min_mag = std::min(min_mag, m);
        max_mag = std::max(max_mag, m);
    }
    if (max_mag == 0.0 || min_mag / max_mag <= ctx.zero_ratio())
        throw ZeroDivisorError("inverse_via_spectrum: element is a zero divisor");

    for (auto& l : lam) l = 1.0 / l;
    Spectrum s;
    s.values = std::move(lam);
    return inverse_spectrum(ctx, s);
}

}  // namespace euclid
