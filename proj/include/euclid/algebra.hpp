#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "euclid/errors.hpp"

namespace euclid {

using RealMatrix = Eigen::MatrixXd;

/// Ambient algebra R_n: R^n equipped with multiplication modulo x^n + 1
/// (negacyclic convolution).  Carries the dimension and the numeric
/// tolerances shared by every operation on its elements.
class Algebra {
public:
    /// n >= 2; tol_eq is the relative equality tolerance (scaled by the
    /// largest magnitude involved); zero_ratio is the spectral threshold
    /// min|lambda| / max|lambda| at or below which an element is treated
    /// as a zero divisor.  The ratio is scale-invariant, which keeps the
    /// classification stable under scaling of the element.
    explicit Algebra(int n, double tol_eq = 1e-9, double zero_ratio = 1e-9);

    int dim() const noexcept { return n_; }
    double tol_eq() const noexcept { return tol_eq_; }
    double zero_ratio() const noexcept { return zero_ratio_; }

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    int n_;
    double tol_eq_;
    double zero_ratio_;
};

/// An element u = sum_k u_k e_k of R_n, stored as its real coefficient
/// vector [u_1, ..., u_n].  e_1 is the multiplicative identity.  Immutable
/// value type; all coefficients are finite by construction.
class Element {
public:
    Element(const Algebra& ctx, std::vector<double> coeffs);

    static Element zero(const Algebra& ctx);
    static Element one(const Algebra& ctx);           ///< e_1
    static Element basis(const Algebra& ctx, int k);  ///< e_k, 1-based

    const Algebra& context() const noexcept { return ctx_; }
    int dim() const noexcept { return static_cast<int>(coeffs_.size()); }

    /// 1-based coefficient u_k.
    double coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k) - 1); }
    /// 0-based raw access.
    double operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    double max_abs() const;
    double norm2() const;  ///< Euclidean length of the coefficient vector

    friend bool operator==(const Element& a, const Element& b) {
        return a.ctx_.dim() == b.ctx_.dim() && a.coeffs_ == b.coeffs_;
    }

private:
    Algebra ctx_;
    std::vector<double> coeffs_;
};

/// Matrix of g^exponent where g is the negacyclic shift (g e_1 = -e_n,
/// g e_k = e_{k-1} for k >= 2).  g^n = -I and g^{2n} = I; any integer
/// exponent is reduced mod 2n.
RealMatrix generator_power(const Algebra& ctx, long long exponent);

/// Matrix representation of u: sum_k u_k g^{k-1}.  Row r (0-based) is the
/// coefficient vector shifted right r places with sign flips on wraparound;
/// the first row is u itself.
RealMatrix matrix_rep(const Element& u);

/// Inverse of matrix_rep: reads the first row back.  Throws NotNegacyclic
/// if the matrix does not have the required structure within tol_eq.
Element element_from_matrix(const Algebra& ctx, const RealMatrix& m);

/// Product in R_n by direct negacyclic convolution, O(n^2).  Reference
/// path; the spectral module provides the equivalent fast path.
Element multiply_naive(const Element& u, const Element& v);

/// Raw-buffer negacyclic convolution: out_k = sum_{i+j=k} u_i v_j
/// - sum_{i+j=k+n} u_i v_j (0-based).  All spans must have equal size;
/// out must not alias the inputs.  Backbone of multiply_naive, exposed
/// for allocation-free inner loops.
void negacyclic_multiply(std::span<const double> u, std::span<const double> v,
                         std::span<double> out);

Element operator+(const Element& u, const Element& v);
Element operator-(const Element& u, const Element& v);
Element operator-(const Element& u);
Element operator*(double c, const Element& u);
Element operator*(const Element& u, double c);
Element operator*(const Element& u, const Element& v);  ///< multiply_naive

/// u^m by binary exponentiation; u^0 = e_1.
Element power(const Element& u, unsigned long long m);

/// Evaluates a_m x^m + ... + a_1 x + a_0 by Horner's scheme.
/// `coeffs` is ordered highest degree first: [a_m, ..., a_1, a_0].
Element poly_eval(std::span<const Element> coeffs, const Element& x);

/// |det matrix_rep(u)|, computed by LU factorization with partial
/// pivoting.  Multiplicative: norm(u*v) = norm(u)*norm(v).  Note this is
/// a degree-n homogeneous quantity, not a vector-space norm.
double algebra_norm(const Element& u);

/// Signed det matrix_rep(u) via LU (reference determinant path).
double det_lu(const Element& u);

/// Euclidean metric on coefficient vectors.
double euclidean_distance(const Element& x, const Element& a);

/// True when the coefficient vectors agree within ctx.tol_eq scaled by the
/// largest magnitude involved (floor 1).
bool approx_equal(const Element& a, const Element& b);
bool approx_equal(const Element& a, const Element& b, double tol);

/// max_k |a_k - b_k|.
double max_abs_diff(const Element& a, const Element& b);

}  // namespace euclid
