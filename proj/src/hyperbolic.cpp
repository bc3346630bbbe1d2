#include "bohrlab/hyperbolic.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/modular.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bohrlab {

namespace {

DistanceInterval exact(double d) { return {d, d}; }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Distance to a sampled boundary curve theta -> b(theta), with a ternary
// refinement pass around the best sample.  The interval accounts for the
// local mesh on the refined bracket.
std::function<DistanceInterval(cplx)> sampled_boundary_distance(
    std::function<cplx(double)> boundary, std::size_t samples) {
    return [boundary = std::move(boundary), samples](cplx w) {
        const double two_pi = 2.0 * std::numbers::pi;
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < samples; ++j) {
            const double d = std::abs(boundary(two_pi * static_cast<double>(j) / static_cast<double>(samples)) - w);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        double lo = two_pi * (static_cast<double>(best_j) - 1.0) / static_cast<double>(samples);
        double hi = two_pi * (static_cast<double>(best_j) + 1.0) / static_cast<double>(samples);
        for (int it = 0; it < 60; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (std::abs(boundary(m1) - w) < std::abs(boundary(m2) - w))
                hi = m2;
            else
                lo = m1;
        }
        const double refined = std::abs(boundary(0.5 * (lo + hi)) - w);
        best = std::min(best, refined);
        // Mesh bound: boundary speed estimated from the original sampling.
        const double step = two_pi / static_cast<double>(samples);
        const double speed =
            std::abs(boundary(two_pi * static_cast<double>(best_j) / static_cast<double>(samples) + step) -
                     boundary(two_pi * static_cast<double>(best_j) / static_cast<double>(samples))) /
            step;
        return DistanceInterval{std::max(0.0, best - 2.0 * speed * (hi - lo)), best};
    };
}

DomainSpec unit_disk_domain() {
    DomainSpec d;
    d.kind = DomainKind::unit_disk;
    d.label = "unit_disk";
    d.simply_connected = true;
    d.omitted_points = {cplx{1.0, 0.0}, cplx{-1.0, 0.0}};
    d.distance_fn = [](cplx w) { return exact(1.0 - std::abs(w)); };
    d.density_fn = [](cplx w) { return density_unit_disk(w); };
    return d;
}

} // namespace

double density_unit_disk(cplx z) {
    const double m2 = std::norm(z);
    if (m2 >= 1.0) throw DomainError("density_unit_disk requires |z| < 1");
    return 1.0 / (1.0 - m2);
}

double pushforward_density(const CoveringMap& cover, cplx z) {
    if (std::norm(z) >= 1.0) throw DomainError("pushforward requires |z| < 1");
    const cplx dF = cover.derivative(z);
    if (std::abs(dF) == 0.0) throw ZeroDerivative("cover has vanishing derivative at sample");
    return 1.0 / (std::abs(dF) * (1.0 - std::norm(z)));
}

VerificationRecord check_distance_density(const DomainSpec& domain, cplx w,
                                          std::optional<double> density_override) {
    double lambda = 0.0;
    if (density_override)
        lambda = *density_override;
    else if (domain.density_fn)
        lambda = domain.density_fn(w);
    else
        throw MissingData("domain has no density and no override was supplied");
    const DistanceInterval d = domain.distance_fn(w);
    const double p_hi = d.upper * lambda;
    const double p_lo = d.lower * lambda;
    auto rec = make_record("distance_density/" + domain.label, p_hi, 1.0, 1e-9);
    rec.metadata["product_lower"] = fmt(p_lo);
    rec.metadata["density"] = fmt(lambda);
    rec.extra_ok = p_hi > 0.0;
    if (domain.simply_connected) {
        const bool lower_ok = p_lo >= 0.25 - 1e-9;
        rec.metadata["quarter_bound_ok"] = lower_ok ? "true" : "false";
        rec.extra_ok = rec.extra_ok && lower_ok;
    }
    rec.passed = rec.passed && rec.extra_ok;
    return rec;
}

VerificationRecord check_koebe_bounds(const CoveringMap& cover, cplx z) {
    if (std::norm(z) >= 1.0) throw DomainError("sample must lie in the unit disk");
    const cplx w = cover.evaluator(z);
    const DistanceInterval d = cover.target.distance_fn(w);
    const double bound = std::abs(cover.derivative(z)) * (1.0 - std::norm(z));
    auto rec = make_record("koebe_bounds/" + cover.label, d.upper, bound, 1e-9);
    if (cover.univalent) {
        rec.extra_ok = d.lower >= 0.25 * bound - 1e-9;
        rec.metadata["quarter_bound_margin"] = fmt(d.lower - 0.25 * bound);
        rec.passed = rec.passed && rec.extra_ok;
    }
    return rec;
}

CoveringMap cover_identity() {
    CoveringMap f;
    f.label = "identity";
    f.evaluator = [](cplx z) { return z; };
    f.derivative = [](cplx) { return cplx{1.0, 0.0}; };
    f.target = unit_disk_domain();
    f.univalent = true;
    return f;
}

CoveringMap cover_disk_automorphism(cplx c) {
    CoveringMap f;
    {
        std::ostringstream os;
        os << "disk_automorphism_" << c.real() << "_" << c.imag();
        f.label = os.str();
    }
    const cplx cc = std::conj(c);
    f.evaluator = [c, cc](cplx z) { return (z + c) / (1.0 + cc * z); };
    f.derivative = [c, cc](cplx z) {
        const cplx den = 1.0 + cc * z;
        return (1.0 - std::norm(c)) / (den * den);
    };
    f.target = unit_disk_domain();
    f.univalent = true;
    return f;
}

CoveringMap cover_cayley() {
    CoveringMap f;
    f.label = "cayley_half_plane";
    f.evaluator = [](cplx z) { return (1.0 + z) / (1.0 - z); };
    f.derivative = [](cplx z) {
        const cplx den = 1.0 - z;
        return 2.0 / (den * den);
    };
    DomainSpec d;
    d.kind = DomainKind::half_plane;
    d.label = "half_plane";
    d.simply_connected = true;
    d.omitted_points = {cplx{0.0, 0.0}, cplx{-1.0, 0.0}};
    d.distance_fn = [](cplx w) { return exact(w.real()); };
    d.density_fn = [](cplx w) { return 1.0 / (2.0 * w.real()); };
    f.target = d;
    f.univalent = true;
    return f;
}

CoveringMap cover_koebe() {
    CoveringMap f;
    f.label = "koebe";
    f.evaluator = [](cplx z) {
        const cplx den = 1.0 - z;
        return z / (den * den);
    };
    f.derivative = [](cplx z) {
        const cplx den = 1.0 - z;
        return (1.0 + z) / (den * den * den);
    };
    DomainSpec d;
    d.kind = DomainKind::slit_plane;
    d.label = "slit_plane";
    d.simply_connected = true;
    d.omitted_points = {cplx{-0.25, 0.0}, cplx{-1.0, 0.0}};
    d.distance_fn = [](cplx w) {
        if (w.real() >= -0.25) return exact(std::abs(w + 0.25));
        return exact(std::abs(w.imag()));
    };
    d.density_fn = [](cplx w) {
        if (std::abs(w) == 0.0) return 1.0;
        // invert w = z/(1-z)^2 on the slit plane (principal square root)
        const cplx z = (2.0 * w + 1.0 - std::sqrt(4.0 * w + 1.0)) / (2.0 * w);
        const cplx den = 1.0 - z;
        const cplx kprime = (1.0 + z) / (den * den * den);
        return 1.0 / (std::abs(kprime) * (1.0 - std::norm(z)));
    };
    f.target = d;
    f.univalent = true;
    return f;
}

CoveringMap cover_strip_log() {
    CoveringMap f;
    f.label = "strip_log";
    f.evaluator = [](cplx z) { return std::log((1.0 + z) / (1.0 - z)); };
    f.derivative = [](cplx z) { return 2.0 / (1.0 - z * z); };
    DomainSpec d;
    d.kind = DomainKind::strip;
    d.label = "strip";
    d.simply_connected = true;
    const double half = std::numbers::pi / 2.0;
    d.omitted_points = {cplx{0.0, half}, cplx{0.0, -half}};
    d.distance_fn = [half](cplx w) { return exact(half - std::abs(w.imag())); };
    d.density_fn = [](cplx w) { return 1.0 / (2.0 * std::cos(w.imag())); };
    f.target = d;
    f.univalent = true;
    return f;
}

CoveringMap cover_punctured_disk() {
    CoveringMap f;
    f.label = "punctured_disk_exp";
    f.evaluator = [](cplx z) { return std::exp((z + 1.0) / (z - 1.0)); };
    f.derivative = [](cplx z) {
        const cplx den = z - 1.0;
        return std::exp((z + 1.0) / den) * (-2.0) / (den * den);
    };
    DomainSpec d;
    d.kind = DomainKind::punctured_disk;
    d.label = "punctured_disk";
    d.simply_connected = false;
    d.omitted_points = {cplx{0.0, 0.0}, cplx{1.0, 0.0}};
    d.distance_fn = [](cplx w) { return exact(std::min(std::abs(w), 1.0 - std::abs(w))); };
    d.density_fn = [](cplx w) {
        const double m = std::abs(w);
        return 1.0 / (2.0 * m * std::log(1.0 / m));
    };
    f.target = d;
    f.univalent = false;
    return f;
}

CoveringMap cover_twice_punctured_plane(cplx a, cplx b) {
    if (std::abs(a - b) < 1e-12) throw DegenerateOmittedPoints("punctures must be distinct");
    CoveringMap f;
    f.label = "twice_punctured_plane";
    auto q = [](cplx z) { return std::exp(-std::numbers::pi * (1.0 + z) / (1.0 - z)); };
    f.evaluator = [a, b, q](cplx z) { return a + (b - a) * eval_j(q(z)); };
    f.derivative = [a, b, q](cplx z) {
        const cplx den = 1.0 - z;
        const cplx qz = q(z);
        const cplx dq = qz * (-2.0 * std::numbers::pi) / (den * den);
        return (b - a) * eval_j_derivative(qz) * dq;
    };
    DomainSpec d;
    d.kind = DomainKind::twice_punctured_plane;
    d.label = "twice_punctured_plane";
    d.simply_connected = false;
    d.omitted_points = {a, b};
    d.distance_fn = [a, b](cplx w) { return exact(std::min(std::abs(w - a), std::abs(w - b))); };
    f.target = d;
    f.univalent = false;
    return f;
}

CoveringMap cover_exp_image() {
    CoveringMap f;
    f.label = "exp_image";
    f.evaluator = [](cplx z) { return std::exp(z); };
    f.derivative = [](cplx z) { return std::exp(z); };
    DomainSpec d;
    d.kind = DomainKind::sampled_image;
    d.label = "exp_image";
    d.simply_connected = true;
    d.omitted_points = {cplx{0.0, 0.0}, cplx{-1.0, 0.0}};
    d.distance_fn = sampled_boundary_distance(
        [](double th) { return std::exp(std::polar(1.0, th)); }, 4096);
    f.target = d;
    f.univalent = true;
    return f;
}

std::vector<CoveringMap> canonical_covers() {
    return {cover_identity(),
            cover_disk_automorphism(cplx{0.5, 0.0}),
            cover_disk_automorphism(cplx{0.0, 0.3}),
            cover_disk_automorphism(cplx{-0.4, 0.2}),
            cover_cayley(),
            cover_koebe(),
            cover_strip_log(),
            cover_punctured_disk(),
            cover_twice_punctured_plane(cplx{0.0, 0.0}, cplx{1.0, 0.0}),
            cover_exp_image()};
}

} // namespace bohrlab
