#include "euclid/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace euclid {

namespace {

void require_same_dim(const Element& u, const Element& v, const char* op) {
    if (u.dim() != v.dim())
        throw DimensionMismatch(std::string(op) + ": operands have dimensions " +
                                std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
}

}  // namespace

Algebra::Algebra(int n, double tol_eq, double zero_ratio)
    : n_(n), tol_eq_(tol_eq), zero_ratio_(zero_ratio) {
    if (n < 2) throw std::invalid_argument("Algebra: dimension must be >= 2");
    if (!(tol_eq > 0.0)) throw std::invalid_argument("Algebra: tol_eq must be positive");
    if (!(zero_ratio > 0.0) || zero_ratio > 1.0)
        throw std::invalid_argument("Algebra: zero_ratio must be in (0, 1]");
}

Element::Element(const Algebra& ctx, std::vector<double> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != ctx.dim())
        throw DimensionMismatch("Element: got " + std::to_string(coeffs_.size()) +
                                " coefficients for dimension " + std::to_string(ctx.dim()));
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw EvaluationFailure("Element: non-finite coefficient");
}

Element Element::zero(const Algebra& ctx) {
    return Element(ctx, std::vector<double>(static_cast<std::size_t>(ctx.dim()), 0.0));
}

Element Element::one(const Algebra& ctx) { return basis(ctx, 1); }

Element Element::basis(const Algebra& ctx, int k) {
    if (k < 1 || k > ctx.dim())
        throw std::invalid_argument("Element::basis: index out of range");
    std::vector<double> c(static_cast<std::size_t>(ctx.dim()), 0.0);
    c[static_cast<std::size_t>(k) - 1] = 1.0;
    return Element(ctx, std::move(c));
}

double Element::max_abs() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double Element::norm2() const {
    double s = 0.0;
    for (double c : coeffs_) s += c * c;
    return std::sqrt(s);
}

RealMatrix generator_power(const Algebra& ctx, long long exponent) {
    const int n = ctx.dim();
    long long e = exponent % (2LL * n);
    if (e < 0) e += 2LL * n;
    double sign = 1.0;
    if (e >= n) {  // g^{n+k} = -g^k
        sign = -1.0;
        e -= n;
    }
    RealMatrix m = RealMatrix::Zero(n, n);
    for (int r = 0; r < n; ++r) {
        const int c = r + static_cast<int>(e);
        if (c < n)
            m(r, c) = sign;
        else
            m(r, c - n) = -sign;
    }
    return m;
}

RealMatrix matrix_rep(const Element& u) {
    const int n = u.dim();
    RealMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = (c >= r) ? u[static_cast<std::size_t>(c - r)]
                               : -u[static_cast<std::size_t>(n + c - r)];
    return m;
}

Element element_from_matrix(const Algebra& ctx, const RealMatrix& m) {
    const int n = ctx.dim();
    if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch("element_from_matrix: matrix is not n x n");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double tol = ctx.tol_eq() * scale;
    for (int r = 1; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const double expected = (c >= r) ? m(0, c - r) : -m(0, n + c - r);
            if (std::abs(m(r, c) - expected) > tol)
                throw NotNegacyclic("element_from_matrix: structure violated at (" +
                                    std::to_string(r) + "," + std::to_string(c) + ")");
        }
    }
    std::vector<double> coeffs(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) coeffs[static_cast<std::size_t>(c)] = m(0, c);
    return Element(ctx, std::move(coeffs));
}

void negacyclic_multiply(std::span<const double> u, std::span<const double> v,
                         std::span<double> out) {
    const std::size_t n = u.size();
    if (v.size() != n || out.size() != n)
        throw DimensionMismatch("negacyclic_multiply: size mismatch");
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double ui = u[i];
        if (ui == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const double t = ui * v[j];
            const std::size_t k = i + j;
            if (k < n)
                out[k] += t;
            else
                out[k - n] -= t;
        }
    }
}

Element multiply_naive(const Element& u, const Element& v) {
    require_same_dim(u, v, "multiply");
    std::vector<double> out(static_cast<std::size_t>(u.dim()), 0.0);
    negacyclic_multiply(u.coeffs(), v.coeffs(), out);
    return Element(u.context(), std::move(out));
}

Element operator+(const Element& u, const Element& v) {
    require_same_dim(u, v, "add");
    std::vector<double> out(u.coeffs());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
    return Element(u.context(), std::move(out));
}

Element operator-(const Element& u, const Element& v) {
    require_same_dim(u, v, "subtract");
    std::vector<double> out(u.coeffs());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= v[i];
    return Element(u.context(), std::move(out));
}

Element operator-(const Element& u) { return -1.0 * u; }

Element operator*(double c, const Element& u) {
    std::vector<double> out(u.coeffs());
    for (double& x : out) x *= c;
    return Element(u.context(), std::move(out));
}

Element operator*(const Element& u, double c) { return c * u; }

Element operator*(const Element& u, const Element& v) { return multiply_naive(u, v); }

Element power(const Element& u, unsigned long long m) {
    Element result = Element::one(u.context());
    Element base = u;
    while (m > 0) {
        if (m & 1ull) result = multiply_naive(result, base);
        m >>= 1;
        if (m > 0) base = multiply_naive(base, base);
    }
    return result;
}

Element poly_eval(std::span<const Element> coeffs, const Element& x) {
    if (coeffs.empty()) throw std::invalid_argument("poly_eval: empty coefficient list");
    for (const Element& a : coeffs) require_same_dim(a, x, "poly_eval");
    Element acc = coeffs.front();
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        acc = multiply_naive(acc, x) + coeffs[i];
    return acc;
}

double det_lu(const Element& u) {
    return matrix_rep(u).partialPivLu().determinant();
}

double algebra_norm(const Element& u) { return std::abs(det_lu(u)); }

double euclidean_distance(const Element& x, const Element& a) {
    require_same_dim(x, a, "euclidean_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        const double d = x[i] - a[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double max_abs_diff(const Element& a, const Element& b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

bool approx_equal(const Element& a, const Element& b, double tol) {
    require_same_dim(a, b, "approx_equal");
    const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
    return max_abs_diff(a, b) <= tol * scale;
}

bool approx_equal(const Element& a, const Element& b) {
    return approx_equal(a, b, a.context().tol_eq());
}

}  // namespace euclid
