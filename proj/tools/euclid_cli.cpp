// Command-line front end: exact and spectral arithmetic, zero-divisor
// structure, invariant-measure Monte Carlo, and finite-difference function
// probes, with reproducible seeds and plain or JSON output.
//
// Exit codes: 0 success, 2 usage error, 3 zero divisor, 4 numeric failure.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "euclid/analytic.hpp"
#include "euclid/group.hpp"
#include "euclid/haar.hpp"
#include "euclid/json_io.hpp"
#include "euclid/spectral.hpp"

namespace {

using namespace euclid;

struct Options {
    std::string format = "plain";
    int sig() const { return format == "json" ? 17 : 6; }
};

std::string fmt(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

std::string fmt_list(const std::vector<double>& values, int sig) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += fmt(values[i], sig);
    }
    return out + "]";
}

std::string fmt_element_json(const Element& u) {
    return "{\"n\":" + std::to_string(u.dim()) + ",\"coeffs\":" + fmt_list(u.coeffs(), 17) + "}";
}

void print_element(const Options& opt, const Element& u) {
    if (opt.format == "json")
        std::cout << fmt_element_json(u) << "\n";
    else
        std::cout << fmt_list(u.coeffs(), opt.sig()) << "\n";
}

void print_scalar(const Options& opt, const char* key, double v) {
    if (opt.format == "json")
        std::cout << "{\"" << key << "\":" << fmt(v, 17) << "}\n";
    else
        std::cout << fmt(v, opt.sig()) << "\n";
}

std::string fmt_estimate_fields(const HaarEstimate& est, int sig, bool json) {
    const char* q = json ? "\"" : "";
    const char* sep = json ? ":" : "=";
    const char* join = json ? "," : " ";
    std::string out;
    out += std::string(q) + "value" + q + sep + fmt(est.value, sig) + join;
    out += std::string(q) + "std_error" + q + sep + fmt(est.std_error, sig) + join;
    out += std::string(q) + "samples" + q + sep + std::to_string(est.samples) + join;
    out += std::string(q) + "clipped" + q + sep + std::to_string(est.clipped) + join;
    out += std::string(q) + "reliable" + q + sep + (est.reliable ? "true" : "false");
    return out;
}

Algebra make_context(int n) { return Algebra(n); }

std::vector<double> parse_array(const std::string& text) {
    return nlohmann::json::parse(text).get<std::vector<double>>();
}

RegionBox parse_box(const Algebra& ctx, const std::string& lower, const std::string& upper) {
    RegionBox box{parse_array(lower), parse_array(upper)};
    box.validate(ctx);
    return box;
}

std::vector<double> parse_radii(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t next = csv.find(',', pos);
        if (next == std::string::npos) next = csv.size();
        out.push_back(std::stod(csv.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("expected a comma-separated radius list");
    return out;
}

int parse_sign(const std::string& text) {
    if (text == "+1" || text == "1") return 1;
    if (text == "-1") return -1;
    throw CLI::ValidationError("--sign", "expected +1 or -1");
}

struct CliArgs {
    Options opt;

    int n = 4;
    std::uint64_t seed = 0;
    std::uint64_t samples = 100000;

    std::string elem_a, elem_b;
    unsigned long long exponent = 1;
    bool use_fast = false, use_naive = false, use_spectral = false;

    double plane_s = 0.0, plane_t = 0.0;
    std::string plane_branch = "I";
    double eps = 1e-3;

    std::string lower, upper, translate;

    std::string field = "identity";
    std::string at;
    std::string radii_csv = "1,2,4";
    double fd_step = 1e-5;
    double radius = 1.0;
    int probes = 10;

    std::string sign_text = "+1";
};

Element parse_at(const Algebra& ctx, const std::string& text) {
    if (text.empty()) return Element::zero(ctx);
    return parse_element(ctx, text);
}

int run_mul(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const Element u = parse_element(ctx, a.elem_a);
    const Element v = parse_element(ctx, a.elem_b);
    print_element(a.opt, a.use_fast ? multiply_fast(u, v) : multiply_naive(u, v));
    return 0;
}

int run_pow(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    print_element(a.opt, power(parse_element(ctx, a.elem_a), a.exponent));
    return 0;
}

int run_inv(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const Element u = parse_element(ctx, a.elem_a);
    print_element(a.opt, a.use_spectral ? inverse_via_spectrum(u) : inverse_cayley_hamilton(u));
    return 0;
}

int run_norm(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    print_scalar(a.opt, "norm", algebra_norm(parse_element(ctx, a.elem_a)));
    return 0;
}

int run_det(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    print_scalar(a.opt, "det", det_via_spectrum(parse_element(ctx, a.elem_a)));
    return 0;
}

int run_spectrum(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const Spectrum s = spectrum(parse_element(ctx, a.elem_a));
    const int sig = a.opt.sig();
    std::string body = "[";
    for (int k = 0; k < s.dim(); ++k) {
        if (k) body += ",";
        const auto& v = s.values[static_cast<std::size_t>(k)];
        body += "[" + fmt(v.real(), sig) + "," + fmt(v.imag(), sig) + "]";
    }
    body += "]";
    if (a.opt.format == "json")
        std::cout << "{\"n\":" << ctx.dim() << ",\"values\":" << body << "}\n";
    else
        std::cout << body << "\n";
    return 0;
}

int run_zdiv_check(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const ZeroDivisorReport r = is_zero_divisor(parse_element(ctx, a.elem_a));
    const int sig = a.opt.sig();
    if (a.opt.format == "json") {
        std::cout << "{\"det\":" << fmt(r.det_value, sig)
                  << ",\"min_eigen_ratio\":" << fmt(r.min_eigen_ratio, sig)
                  << ",\"is_zero_divisor\":" << (r.is_zero_divisor ? "true" : "false") << "}\n";
    } else {
        std::cout << "det=" << fmt(r.det_value, sig)
                  << " min_eigen_ratio=" << fmt(r.min_eigen_ratio, sig)
                  << " zero_divisor=" << (r.is_zero_divisor ? "true" : "false") << "\n";
    }
    return 0;
}

int run_zdiv_plane4(const CliArgs& a) {
    const Algebra ctx = make_context(4);
    const PlaneBranch branch = (a.plane_branch == "II") ? PlaneBranch::II : PlaneBranch::I;
    if (a.plane_branch != "I" && a.plane_branch != "II")
        throw CLI::ValidationError("branch", "expected I or II");
    print_element(a.opt, r4_zero_divisor_point(ctx, a.plane_s, a.plane_t, branch));
    return 0;
}

int run_zdiv_measure(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const double fraction = estimate_zero_divisor_measure(ctx, a.samples, a.eps, a.seed);
    const int sig = a.opt.sig();
    if (a.opt.format == "json") {
        std::cout << "{\"fraction\":" << fmt(fraction, sig) << ",\"eps\":" << fmt(a.eps, sig)
                  << ",\"samples\":" << a.samples << ",\"seed\":" << a.seed << "}\n";
    } else {
        std::cout << "fraction=" << fmt(fraction, sig) << " eps=" << fmt(a.eps, sig)
                  << " samples=" << a.samples << " seed=" << a.seed << "\n";
    }
    return 0;
}

int run_haar_box(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const RegionBox box = parse_box(ctx, a.lower, a.upper);
    const HaarEstimate est = haar_measure_mc(ctx, box, a.samples, a.seed);
    if (a.opt.format == "json")
        std::cout << "{" << fmt_estimate_fields(est, 17, true) << ",\"seed\":" << a.seed << "}\n";
    else
        std::cout << fmt_estimate_fields(est, a.opt.sig(), false) << " seed=" << a.seed << "\n";
    return 0;
}

int run_haar_invariance(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const RegionBox box = parse_box(ctx, a.lower, a.upper);
    const Element t = parse_element(ctx, a.translate);
    const HaarEstimate direct = haar_measure_mc(ctx, box, a.samples, a.seed);
    const HaarEstimate moved = translate_region(t, box, a.samples, a.seed + 1);
    const double delta = std::abs(direct.value - moved.value);
    const double sigma = std::hypot(direct.std_error, moved.std_error);
    const bool ok = delta <= 3.0 * sigma;
    const int sig = a.opt.sig();
    if (a.opt.format == "json") {
        std::cout << "{\"direct\":{" << fmt_estimate_fields(direct, 17, true) << "},"
                  << "\"translated\":{" << fmt_estimate_fields(moved, 17, true) << "},"
                  << "\"delta\":" << fmt(delta, 17) << ",\"sigma\":" << fmt(sigma, 17)
                  << ",\"within_3_sigma\":" << (ok ? "true" : "false") << ",\"seed\":" << a.seed
                  << "}\n";
    } else {
        std::cout << "direct: " << fmt_estimate_fields(direct, sig, false) << "\n";
        std::cout << "translated: " << fmt_estimate_fields(moved, sig, false) << "\n";
        std::cout << "delta=" << fmt(delta, sig) << " sigma=" << fmt(sigma, sig)
                  << " within_3_sigma=" << (ok ? "true" : "false") << " seed=" << a.seed << "\n";
    }
    return 0;
}

VectorField make_field(const Algebra& ctx, const CliArgs& a) {
    VectorField f = make_named_field(ctx, a.field);
    f.fd_step = a.fd_step;
    return f;
}

int run_analytic_cr(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    print_scalar(a.opt, "residual",
                 cauchy_riemann_residual(make_field(ctx, a), parse_at(ctx, a.at)));
    return 0;
}

int run_analytic_diff(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const DifferentiabilityProbe p =
        differentiability_probe(make_field(ctx, a), parse_at(ctx, a.at), a.probes, a.seed);
    const int sig = a.opt.sig();
    if (a.opt.format == "json") {
        std::cout << "{\"axis_residual\":" << fmt(p.axis_residual, sig)
                  << ",\"directional_residual\":" << fmt(p.directional_residual, sig)
                  << ",\"probes\":" << a.probes << ",\"seed\":" << a.seed << "}\n";
    } else {
        std::cout << "axis_residual=" << fmt(p.axis_residual, sig)
                  << " directional_residual=" << fmt(p.directional_residual, sig)
                  << " probes=" << a.probes << " seed=" << a.seed << "\n";
    }
    return 0;
}

int run_analytic_laplacian(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const std::vector<double> lap = laplacian(make_field(ctx, a), parse_at(ctx, a.at));
    const int sig = a.opt.sig();
    std::string exact;
    if (a.field == "square" && ctx.dim() % 2 == 1) {
        std::vector<double> values;
        for (int m = 1; m <= ctx.dim(); ++m) values.push_back(square_laplacian_exact(ctx.dim(), m));
        exact = fmt_list(values, sig);
    }
    if (a.opt.format == "json") {
        std::cout << "{\"laplacian\":" << fmt_list(lap, sig);
        if (!exact.empty()) std::cout << ",\"exact\":" << exact;
        std::cout << "}\n";
    } else {
        std::cout << fmt_list(lap, sig) << "\n";
        if (!exact.empty()) std::cout << "exact=" << exact << "\n";
    }
    return 0;
}

int run_analytic_meanvalue(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const VectorField f = make_field(ctx, a);
    const Element at = parse_at(ctx, a.at);
    const SphereMean m = sphere_mean(f, at, a.radius, a.samples, a.seed);
    const Element reference = eval_field(f, at);
    bool ok = true;
    for (int d = 0; d < ctx.dim(); ++d) {
        const std::size_t i = static_cast<std::size_t>(d);
        if (std::abs(m.mean[i] - reference[i]) > 3.0 * m.std_error[i] + 1e-12) ok = false;
    }
    const int sig = a.opt.sig();
    if (a.opt.format == "json") {
        std::cout << "{\"mean\":" << fmt_list(m.mean.coeffs(), sig)
                  << ",\"reference\":" << fmt_list(reference.coeffs(), sig)
                  << ",\"std_error\":" << fmt_list(m.std_error, sig)
                  << ",\"within_3_sigma\":" << (ok ? "true" : "false") << ",\"points\":" << m.points
                  << ",\"seed\":" << a.seed << "}\n";
    } else {
        std::cout << "mean=" << fmt_list(m.mean.coeffs(), sig) << "\n";
        std::cout << "reference=" << fmt_list(reference.coeffs(), sig) << "\n";
        std::cout << "std_error=" << fmt_list(m.std_error, sig) << "\n";
        std::cout << "within_3_sigma=" << (ok ? "true" : "false") << " points=" << m.points
                  << " seed=" << a.seed << "\n";
    }
    return 0;
}

int run_analytic_liouville(const CliArgs& a) {
    const Algebra ctx = make_context(a.n);
    const std::vector<double> radii = parse_radii(a.radii_csv);
    const std::vector<double> peaks =
        liouville_probe(make_field(ctx, a), ctx, radii, a.samples, a.seed);
    const int sig = a.opt.sig();
    if (a.opt.format == "json") {
        std::cout << "{\"radii\":" << fmt_list(radii, sig) << ",\"max_abs\":" << fmt_list(peaks, sig)
                  << ",\"points\":" << a.samples << ",\"seed\":" << a.seed << "}\n";
    } else {
        std::cout << "radii=" << fmt_list(radii, sig) << " max_abs=" << fmt_list(peaks, sig)
                  << " points=" << a.samples << " seed=" << a.seed << "\n";
    }
    return 0;
}

int run_roots4(const CliArgs& a) {
    const Algebra ctx = make_context(4);
    const int sign = parse_sign(a.sign_text);
    const std::vector<Element> roots = square_roots_of_pm1(ctx, sign);
    const int sig = a.opt.sig();
    if (a.opt.format == "json") {
        std::cout << "{\"sign\":" << sign << ",\"roots\":[";
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << fmt_list(roots[i].coeffs(), sig);
        }
        std::cout << "]}\n";
    } else {
        for (const Element& r : roots) std::cout << fmt_list(r.coeffs(), sig) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic and analysis in the negacyclic algebra R[x]/(x^n + 1)"};
    app.require_subcommand(1);

    CliArgs a;
    app.add_option("--format", a.opt.format, "output format")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();

    auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("-n,--dim", a.n, "algebra dimension")->required()->check(CLI::Range(2, 1 << 20));
    };
    auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", a.seed, "random seed"); };
    auto add_samples = [&](CLI::App* cmd) {
        cmd->add_option("--samples", a.samples, "sample count")->check(CLI::PositiveNumber);
    };

    CLI::App* mul = app.add_subcommand("mul", "product of two elements");
    add_n(mul);
    mul->add_option("a", a.elem_a, "left element (JSON array)")->required();
    mul->add_option("b", a.elem_b, "right element (JSON array)")->required();
    CLI::Option* naive_flag = mul->add_flag("--naive", a.use_naive, "direct convolution path");
    mul->add_flag("--fast", a.use_fast, "spectral path")->excludes(naive_flag);

    CLI::App* pow_cmd = app.add_subcommand("pow", "integer power");
    add_n(pow_cmd);
    pow_cmd->add_option("a", a.elem_a, "element (JSON array)")->required();
    pow_cmd->add_option("m", a.exponent, "exponent (>= 0)")->required();

    CLI::App* inv = app.add_subcommand("inv", "multiplicative inverse");
    add_n(inv);
    inv->add_option("a", a.elem_a, "element (JSON array)")->required();
    inv->add_flag("--spectral,--fast", a.use_spectral, "invert through the spectrum");

    CLI::App* norm = app.add_subcommand("norm", "|det| of the matrix representation");
    add_n(norm);
    norm->add_option("a", a.elem_a, "element (JSON array)")->required();

    CLI::App* det = app.add_subcommand("det", "determinant of the matrix representation");
    add_n(det);
    det->add_option("a", a.elem_a, "element (JSON array)")->required();

    CLI::App* spec_cmd = app.add_subcommand("spectrum", "eigenvalues of the matrix representation");
    add_n(spec_cmd);
    spec_cmd->add_option("a", a.elem_a, "element (JSON array)")->required();

    CLI::App* zdiv = app.add_subcommand("zdiv", "zero-divisor structure");
    zdiv->require_subcommand(1);
    CLI::App* zcheck = zdiv->add_subcommand("check", "classify one element");
    add_n(zcheck);
    zcheck->add_option("a", a.elem_a, "element (JSON array)")->required();
    CLI::App* zplane = zdiv->add_subcommand("plane4", "dimension-4 zero-divisor plane point");
    zplane->add_option("s", a.plane_s, "first parameter")->required();
    zplane->add_option("t", a.plane_t, "second parameter")->required();
    zplane->add_option("branch", a.plane_branch, "plane branch: I or II")->required();
    CLI::App* zmeasure = zdiv->add_subcommand("measure", "unit-ball fraction with |det| < eps");
    add_n(zmeasure);
    zmeasure->add_option("--eps", a.eps, "determinant threshold")->capture_default_str();
    add_samples(zmeasure);
    add_seed(zmeasure);

    CLI::App* haar = app.add_subcommand("haar", "invariant measure estimators");
    haar->require_subcommand(1);
    CLI::App* hbox = haar->add_subcommand("box", "measure of an axis-aligned box");
    add_n(hbox);
    hbox->add_option("--lower", a.lower, "lower corner (JSON array)")->required();
    hbox->add_option("--upper", a.upper, "upper corner (JSON array)")->required();
    add_samples(hbox);
    add_seed(hbox);
    CLI::App* hinv = haar->add_subcommand("invariance", "compare a box against its translate");
    add_n(hinv);
    hinv->add_option("--a", a.translate, "translation element (JSON array)")->required();
    hinv->add_option("--lower", a.lower, "lower corner (JSON array)")->required();
    hinv->add_option("--upper", a.upper, "upper corner (JSON array)")->required();
    add_samples(hinv);
    add_seed(hinv);

    CLI::App* analytic = app.add_subcommand("analytic", "finite-difference function probes");
    analytic->require_subcommand(1);
    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", a.field, "identity|square|cube|conjugate2d|poly:<json>")
            ->capture_default_str();
        add_n(cmd);
        cmd->add_option("--at", a.at, "probe point (JSON array; default origin)");
        cmd->add_option("--step", a.fd_step, "finite-difference step")->capture_default_str();
    };
    CLI::App* acr = analytic->add_subcommand("cr", "paired first-order system residual");
    add_field(acr);
    CLI::App* adiff = analytic->add_subcommand("diff", "axis-derivative disagreement");
    add_field(adiff);
    adiff->add_option("--probes", a.probes, "random increment probes")->capture_default_str();
    add_seed(adiff);
    CLI::App* alap = analytic->add_subcommand("laplacian", "per-component laplacian");
    add_field(alap);
    CLI::App* amean = analytic->add_subcommand("meanvalue", "sphere average against center value");
    add_field(amean);
    amean->add_option("--r", a.radius, "sphere radius")->capture_default_str();
    add_samples(amean);
    add_seed(amean);
    CLI::App* aliou = analytic->add_subcommand("liouville", "growth of max |f| with radius");
    add_field(aliou);
    aliou->add_option("--radii", a.radii_csv, "comma-separated radii")->capture_default_str();
    add_samples(aliou);
    add_seed(aliou);

    CLI::App* roots = app.add_subcommand("roots4", "square roots of +-1 in dimension 4");
    roots->add_option("--sign", a.sign_text, "+1 or -1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(mul)) return run_mul(a);
        if (app.got_subcommand(pow_cmd)) return run_pow(a);
        if (app.got_subcommand(inv)) return run_inv(a);
        if (app.got_subcommand(norm)) return run_norm(a);
        if (app.got_subcommand(det)) return run_det(a);
        if (app.got_subcommand(spec_cmd)) return run_spectrum(a);
        if (app.got_subcommand(zdiv)) {
            if (zdiv->got_subcommand(zcheck)) return run_zdiv_check(a);
            if (zdiv->got_subcommand(zplane)) return run_zdiv_plane4(a);
            return run_zdiv_measure(a);
        }
        if (app.got_subcommand(haar))
            return haar->got_subcommand(hbox) ? run_haar_box(a) : run_haar_invariance(a);
        if (app.got_subcommand(analytic)) {
            if (analytic->got_subcommand(acr)) return run_analytic_cr(a);
            if (analytic->got_subcommand(adiff)) return run_analytic_diff(a);
            if (analytic->got_subcommand(alap)) return run_analytic_laplacian(a);
            if (analytic->got_subcommand(amean)) return run_analytic_meanvalue(a);
            return run_analytic_liouville(a);
        }
        if (app.got_subcommand(roots)) return run_roots4(a);
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const ZeroDivisorError& e) {
        std::cerr << "zero divisor: " << e.what() << "\n";
        return 3;
    } catch (const DimensionMismatch& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    }
}
