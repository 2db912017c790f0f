#include "euclid/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "euclid/rng.hpp"
#include "euclid/spectral.hpp"

namespace euclid {

namespace {

constexpr std::uint64_t kChunk = 1 << 16;

// w^m for w = e_2 and any integer m; w^n = -e_1, so exponents reduce
// mod 2n with a sign flip on the upper half.
Element w_power(const Algebra& ctx, long long m) {
    const int n = ctx.dim();
    long long e = m % (2LL * n);
    if (e < 0) e += 2LL * n;
    if (e < n) return Element::basis(ctx, static_cast<int>(e) + 1);
    return -Element::basis(ctx, static_cast<int>(e - n) + 1);
}

Element shifted(const Element& a, int axis0, double step) {
    std::vector<double> c(a.coeffs());
    c[static_cast<std::size_t>(axis0)] += step;
    return Element(a.context(), std::move(c));
}

// Central difference of f along a coordinate axis (vector of partials
// d f_m / d x_axis).
Element partial_central(const VectorField& f, const Element& a, int axis0, double h) {
    const Element fp = eval_field(f, shifted(a, axis0, h));
    const Element fm = eval_field(f, shifted(a, axis0, -h));
    return (1.0 / (2.0 * h)) * (fp - fm);
}

double second_order_step(const VectorField& f, const Element& a) {
    return std::sqrt(f.fd_step) * std::max(1.0, a.max_abs());
}

}  // namespace

Element eval_field(const VectorField& f, const Element& x) {
    if (!f.eval) throw EvaluationFailure("eval_field: field has no evaluator");
    try {
        Element out = f.eval(x);
        if (out.dim() != x.dim())
            throw DimensionMismatch("eval_field: field changed the dimension");
        return out;
    } catch (const DimensionMismatch&) {
        throw;
    } catch (const EvaluationFailure&) {
        throw;
    } catch (const std::exception& e) {
        throw EvaluationFailure(std::string("eval_field: ") + e.what());
    }
}

Element derivative_via_axis(const VectorField& f, const Element& a, int axis) {
    const int n = a.dim();
    if (axis < 1 || axis > n)
        throw std::invalid_argument("derivative_via_axis: axis out of range");
    const Element d = partial_central(f, a, axis - 1, f.fd_step);
    return multiply_naive(w_power(a.context(), 1 - axis), d);
}

double differentiability_residual(const VectorField& f, const Element& a) {
    const int n = a.dim();
    std::vector<Element> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) d.push_back(derivative_via_axis(f, a, j));
    double residual = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            residual = std::max(residual, max_abs_diff(d[static_cast<std::size_t>(i)],
                                                       d[static_cast<std::size_t>(j)]));
    return residual;
}

DifferentiabilityProbe differentiability_probe(const VectorField& f, const Element& a,
                                               int random_probes, std::uint64_t seed) {
    DifferentiabilityProbe probe{};
    probe.axis_residual = differentiability_residual(f, a);
    probe.directional_residual = 0.0;
    if (random_probes <= 0) return probe;

    const Algebra& ctx = a.context();
    const std::size_t n = static_cast<std::size_t>(a.dim());
    const Element reference = derivative_via_axis(f, a, 1);
    const double scale = 1e-7 * std::max(1.0, a.max_abs());
    const Element f_a = eval_field(f, a);

    Rng rng(derive_seed(seed, 0));
    std::vector<double> dir(n);
    for (int p = 0; p < random_probes; ++p) {
        Element delta = Element::zero(ctx);
        for (int tries = 0; tries < 64; ++tries) {
            sample_unit_sphere(rng, dir);
            std::vector<double> c(dir.begin(), dir.end());
            for (double& x : c) x *= scale;
            Element candidate(ctx, std::move(c));
            if (spectral_ratio(candidate) > 1e-6) {
                delta = std::move(candidate);
                break;
            }
        }
        if (delta == Element::zero(ctx)) continue;  // never found a well-conditioned increment
        const Element quotient =
            multiply_naive(eval_field(f, a + delta) - f_a, inverse_via_spectrum(delta));
        probe.directional_residual =
            std::max(probe.directional_residual, max_abs_diff(quotient, reference));
    }
    return probe;
}

double cauchy_riemann_residual(const VectorField& f, const Element& a) {
    const int n = a.dim();
    if (n % 2 != 0) throw OddDimension("cauchy_riemann_residual: dimension must be even");
    const int k = n / 2;
    // jac[i] = vector of d f_m / d x_{i+1}, m = 1..n
    std::vector<Element> jac;
    jac.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) jac.push_back(partial_central(f, a, i, f.fd_step));

    double residual = 0.0;
    for (int m = 0; m < k; ++m) {
        for (int i = 0; i < k; ++i) {
            const double r1 = jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] -
                              jac[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(m + k)];
            const double r2 = jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + k)] +
                              jac[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(m)];
            residual = std::max({residual, std::abs(r1), std::abs(r2)});
        }
    }
    return residual;
}

std::vector<double> laplacian(const VectorField& f, const Element& a) {
    const int n = a.dim();
    const double h = second_order_step(f, a);
    const Element f0 = eval_field(f, a);
    std::vector<double> lap(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const Element fp = eval_field(f, shifted(a, i, h));
        const Element fm = eval_field(f, shifted(a, i, -h));
        for (std::size_t m = 0; m < lap.size(); ++m)
            lap[m] += (fp[m] - 2.0 * f0[m] + fm[m]) / (h * h);
    }
    return lap;
}

double square_laplacian_exact(int n, int m) {
    if (n < 3 || n % 2 == 0)
        throw EvenDimension("square_laplacian_exact: dimension must be odd and >= 3");
    if (m < 1 || m > n) throw std::invalid_argument("square_laplacian_exact: component out of range");
    int plus = 0, minus = 0;
    for (int j = 1; j <= n; ++j) {
        if (2 * j - 1 == m) ++plus;
        if (2 * j - 1 == m + n) ++minus;
    }
    return 2.0 * (plus - minus);
}

SphereMean sphere_mean(const VectorField& f, const Element& a, double radius,
                       std::uint64_t points, std::uint64_t seed) {
    if (!(radius > 0.0)) throw std::invalid_argument("sphere_mean: radius must be positive");
    if (points < 1) throw std::invalid_argument("sphere_mean: points >= 1");
    const Algebra& ctx = a.context();
    const std::size_t n = static_cast<std::size_t>(a.dim());

    std::vector<double> sum(n, 0.0), sum_sq(n, 0.0), dir(n), coords(n);
    std::uint64_t done = 0;
    for (std::uint64_t chunk = 0; done < points; ++chunk) {
        Rng rng(derive_seed(seed, chunk));
        const std::uint64_t count = std::min<std::uint64_t>(kChunk, points - done);
        for (std::uint64_t i = 0; i < count; ++i) {
            sample_unit_sphere(rng, dir);
            for (std::size_t d = 0; d < n; ++d) coords[d] = a[d] + radius * dir[d];
            const Element fx = eval_field(f, Element(ctx, coords));
            for (std::size_t d = 0; d < n; ++d) {
                sum[d] += fx[d];
                sum_sq[d] += fx[d] * fx[d];
            }
        }
        done += count;
    }

    const double inv = 1.0 / static_cast<double>(points);
    std::vector<double> mean(n), std_err(n, 0.0);
    for (std::size_t d = 0; d < n; ++d) {
        mean[d] = sum[d] * inv;
        if (points > 1) {
            const double var = std::max(
                0.0, (sum_sq[d] - static_cast<double>(points) * mean[d] * mean[d]) /
                         static_cast<double>(points - 1));
            std_err[d] = std::sqrt(var * inv);
        }
    }
    return SphereMean{Element(ctx, std::move(mean)), std::move(std_err), points};
}

std::vector<double> liouville_probe(const VectorField& f, const Algebra& ctx,
                                    std::span<const double> radii, std::uint64_t points,
                                    std::uint64_t seed) {
    if (points < 1) throw std::invalid_argument("liouville_probe: points >= 1");
    const std::size_t n = static_cast<std::size_t>(ctx.dim());
    std::vector<double> out;
    out.reserve(radii.size());
    std::vector<double> dir(n), coords(n);
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        const double r = radii[ri];
        if (!(r > 0.0)) throw std::invalid_argument("liouville_probe: radii must be positive");
        double peak = 0.0;
        std::uint64_t done = 0;
        for (std::uint64_t chunk = 0; done < points; ++chunk) {
            Rng rng(derive_seed(seed, (static_cast<std::uint64_t>(ri) << 32) + chunk));
            const std::uint64_t count = std::min<std::uint64_t>(kChunk, points - done);
            for (std::uint64_t i = 0; i < count; ++i) {
                sample_unit_sphere(rng, dir);
                for (std::size_t d = 0; d < n; ++d) coords[d] = r * dir[d];
                peak = std::max(peak, eval_field(f, Element(ctx, coords)).norm2());
            }
            done += count;
        }
        out.push_back(peak);
    }
    return out;
}

VectorField make_named_field(const Algebra& ctx, std::string_view name) {
    VectorField field;
    if (name == "identity") {
        field.eval = [](const Element& x) { return x; };
    } else if (name == "square") {
        field.eval = [](const Element& x) { return multiply_naive(x, x); };
    } else if (name == "cube") {
        field.eval = [](const Element& x) { return power(x, 3); };
    } else if (name == "conjugate2d") {
        if (ctx.dim() != 2)
            throw DimensionMismatch("conjugate2d: requires dimension 2");
        field.eval = [](const Element& x) {
            return Element(x.context(), {x[0], -x[1]});
        };
    } else if (name.starts_with("poly:")) {
        const nlohmann::json parsed = nlohmann::json::parse(name.substr(5));
        if (!parsed.is_array() || parsed.empty())
            throw std::invalid_argument("poly field: expected a non-empty list of coefficient vectors");
        std::vector<Element> coeffs;
        coeffs.reserve(parsed.size());
        for (const auto& entry : parsed) {
            std::vector<double> c = entry.get<std::vector<double>>();
            coeffs.emplace_back(ctx, std::move(c));
        }
        field.eval = [coeffs = std::move(coeffs)](const Element& x) {
            return poly_eval(coeffs, x);
        };
    } else {
        throw std::invalid_argument("unknown field: " + std::string(name));
    }
    return field;
}

}  // namespace euclid
