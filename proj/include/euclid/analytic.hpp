#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "euclid/algebra.hpp"

namespace euclid {

enum class Smoothness { None, C2 };

/// A sampled map R^n -> R^n probed by finite differences.  eval must be
/// reentrant and preserve the dimension; fd_step is the first-order
/// central-difference step (second-order probes use sqrt(fd_step) scaled
/// by the point magnitude).
struct VectorField {
    std::function<Element(const Element&)> eval;
    Smoothness smoothness = Smoothness::C2;
    double fd_step = 1e-5;
};

/// Evaluates the field, translating any failure (exception or non-finite
/// output) into EvaluationFailure.
Element eval_field(const VectorField& f, const Element& x);

/// Derivative estimate along coordinate axis j (1-based): the central
/// difference of f in direction e_j, multiplied in the algebra by
/// w^{1-j} where w = e_2 (so every axis measures the same derivative
/// for differentiable f; w^{-j} = -w^{n-j}).
Element derivative_via_axis(const VectorField& f, const Element& a, int axis);

/// Max disagreement between axis derivative estimates:
/// max over pairs (i, j) of the sup-norm of their difference.  Near zero
/// for differentiable fields, order 1 otherwise.
double differentiability_residual(const VectorField& f, const Element& a);

struct DifferentiabilityProbe {
    double axis_residual;         ///< same value differentiability_residual returns
    double directional_residual;  ///< max over random unit-group increments
};

/// Extended probe: additionally forms difference quotients
/// (f(a+delta) - f(a)) * delta^{-1} for `random_probes` small random
/// increments delta in the unit group and compares them with the axis-1
/// derivative.  Inverting delta amplifies noise, so callers should allow
/// roughly 10x the axis tolerance on directional_residual.
DifferentiabilityProbe differentiability_probe(const VectorField& f, const Element& a,
                                               int random_probes, std::uint64_t seed);

/// Max residual of the paired first-order system for n = 2k:
///   d f_m / d x_i    =  d f_{m+k} / d x_{i+k}
///   d f_{m+k} / d x_i = -d f_m / d x_{i+k}        (1 <= m, i <= k)
/// Throws OddDimension when n is odd.
double cauchy_riemann_residual(const VectorField& f, const Element& a);

/// Per-component Laplacian by central second differences, step
/// sqrt(fd_step) * max(1, |a|_inf).
std::vector<double> laplacian(const VectorField& f, const Element& a);

/// Exact Laplacian of component m of x -> x^2 in odd dimension n,
/// from the index combinatorics of the convolution: component m is
/// sum_{i+j-1=m} x_i x_j - sum_{i+j-1=m+n} x_i x_j, and only the diagonal
/// terms x_j^2 survive the Laplacian (contributing 2 each).
/// Returns +2 for odd m and -2 for even m; never zero, so no component
/// is harmonic.  Throws EvenDimension when n is even.
double square_laplacian_exact(int n, int m);

struct SphereMean {
    Element mean;
    std::vector<double> std_error;  ///< per-component standard error
    std::uint64_t points;
};

/// Average of f over `points` uniform samples on the sphere of radius r
/// centered at a.  Deterministic for fixed seed.
SphereMean sphere_mean(const VectorField& f, const Element& a, double radius,
                       std::uint64_t points, std::uint64_t seed);

/// Max Euclidean magnitude of f over sampled spheres centered at the
/// origin, one entry per radius.  A bounded entire function would give a
/// flat sequence; polynomial growth shows up directly.
std::vector<double> liouville_probe(const VectorField& f, const Algebra& ctx,
                                    std::span<const double> radii, std::uint64_t points,
                                    std::uint64_t seed);

/// Built-in field catalogue: "identity", "square", "cube", "conjugate2d"
/// (dimension 2 only), or "poly:<json>" where <json> is a list of
/// coefficient vectors ordered highest degree first.
VectorField make_named_field(const Algebra& ctx, std::string_view name);

}  // namespace euclid
