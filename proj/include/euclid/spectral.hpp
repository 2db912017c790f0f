#pragma once

#include <complex>
#include <span>
#include <vector>

#include "euclid/algebra.hpp"

namespace euclid {

/// The n eigenvalues of matrix_rep(u).
///
/// Convention (fixed so spectra are reproducible): with w = exp(i*pi/n),
/// lambda_k = u(w^{2k+1}) for k = 0, ..., n-1, where u(x) = sum_l u_l x^{l-1}.
/// The odd powers of w are exactly the roots of x^n + 1, so this is the
/// evaluation map of the quotient ring R[x]/(x^n + 1).  For real u the
/// multiset is conjugate-symmetric: lambda_{n-1-k} = conj(lambda_k).
struct Spectrum {
    std::vector<std::complex<double>> values;
    int dim() const noexcept { return static_cast<int>(values.size()); }
};

/// Reusable transform for a fixed dimension.  Powers of two of size >=
/// kDirectThreshold go through an iterative radix-2 FFT after the
/// negacyclic twist; other sizes >= kDirectThreshold use a Bluestein
/// re-expression; small sizes are evaluated directly from the root table.
class SpectralPlan {
public:
    /// Sizes below this go through direct O(n^2) evaluation.
    static constexpr int kDirectThreshold = 32;

    explicit SpectralPlan(int n);

    int dim() const noexcept { return n_; }

    /// Writes lambda_k into out (size n).
    void eigenvalues(std::span<const double> coeffs,
                     std::span<std::complex<double>> out) const;

    /// Inverse map: coefficients (still complex; the caller checks the
    /// imaginary residue) from the eigenvalue list.
    void coefficients(std::span<const std::complex<double>> values,
                      std::span<std::complex<double>> out) const;

    struct DetInfo {
        double value;     ///< sign * exp(log_abs); +-inf when overflowed
        double log_abs;   ///< sum of log|lambda_k|; -inf for exact zeros
        int sign;         ///< sign of the (real) determinant; 0 if det == 0
        double ratio;     ///< min|lambda| / max|lambda|; 0 for the zero element
        bool overflow;    ///< |det| exceeded the double range
    };

    /// One-pass determinant summary: log-magnitude accumulation keeps the
    /// result meaningful when the plain product would overflow.
    DetInfo det_info(std::span<const double> coeffs) const;

private:
    int n_;
    bool pow2_;
    std::vector<std::complex<double>> root_;  // exp(i*pi*m/n), m in [0, 2n)
};

Spectrum spectrum(const Element& u);

/// Reconstructs the element with the given spectrum.  Throws
/// NotConjugateSymmetric when the imaginary residue after the inverse
/// transform exceeds tol_eq (scaled by the largest eigenvalue magnitude).
Element inverse_spectrum(const Algebra& ctx, const Spectrum& s);

/// Product via pointwise multiplication of spectra; O(n log n).
Element multiply_fast(const Element& u, const Element& v);

/// det matrix_rep(u) through the eigenvalue product.
double det_via_spectrum(const Element& u);
SpectralPlan::DetInfo det_info_via_spectrum(const Element& u);

/// min|lambda| / max|lambda|; the scale-invariant zero-divisor indicator.
double spectral_ratio(const Element& u);

/// Inverse element via reciprocal eigenvalues.  Throws ZeroDivisorError
/// when the spectral ratio is at or below ctx.zero_ratio.
Element inverse_via_spectrum(const Element& u);

}  // namespace euclid
