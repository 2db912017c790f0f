#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "euclid/algebra.hpp"
#include "euclid/spectral.hpp"

namespace euclid {

/// Classification of one element against the zero-divisor set (the locus
/// where det matrix_rep vanishes; its complement is the unit group).
struct ZeroDivisorReport {
    double det_value;       ///< det matrix_rep(u) (eigenvalue product)
    double min_eigen_ratio; ///< min|lambda| / max|lambda|
    bool is_zero_divisor;   ///< ratio <= ctx.zero_ratio (exact zeros always true)
};

ZeroDivisorReport is_zero_divisor(const Element& u);

/// Inverse by solving x * matrix_rep(u) = e_1 with a partial-pivoting LU
/// factorization.  Throws ZeroDivisorError for (numerically) singular u.
/// Independent of inverse_via_spectrum; the two must agree.
Element inverse_cayley_hamilton(const Element& u);

/// Closed form of det matrix_rep(u) in dimension 4:
/// (u1^2 - u3^2 + 2 u2 u4)^2 + (u4^2 - u2^2 + 2 u1 u3)^2.
double r4_det_closed_form(const Element& u);

/// The zero-divisor set in dimension 4 is the union of two planes,
/// parametrized by (s, t).
enum class PlaneBranch { I, II };

/// Branch I:  [s, t, -s + sqrt2 t, -sqrt2 s + t]
/// Branch II: [s, t, -s - sqrt2 t,  sqrt2 s + t]
/// Every returned point satisfies r4_det_closed_form == 0 identically.
Element r4_zero_divisor_point(const Algebra& ctx, double s, double t, PlaneBranch branch);

/// Monte Carlo estimate of the fraction of the unit ball where
/// |det matrix_rep(x)| < eps.  Deterministic for a fixed seed (fixed
/// chunking with per-chunk derived seeds).
double estimate_zero_divisor_measure(const Algebra& ctx, std::uint64_t samples, double eps,
                                     std::uint64_t seed);

/// True iff t*u is classified as a zero divisor for every supplied t.
/// Requires u itself to be one (NotAZeroDivisor otherwise); t = 0 is
/// allowed since the zero element is a zero divisor.
bool star_shape_check(const Element& u, std::span<const double> ts);

/// All v with v*v = sign*e_1, found by enumerating eigenvalue patterns:
/// each lambda_k must square to `sign`, and the pattern must respect the
/// conjugate pairing lambda_{n-1-k} = conj(lambda_k).  Exhaustive up to
/// rounding; results are sorted lexicographically by coefficients.
/// sign must be +1 or -1; dimensions above 16 are rejected (the pattern
/// count grows as 2^ceil(n/2)).
std::vector<Element> square_roots_of_pm1(const Algebra& ctx, int sign);

}  // namespace euclid
