#include "bohrlab/corpus.hpp"
#include "bohrlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bohrlab {

namespace {

double factorial_cap(std::size_t order, double scale) {
    // |scale^n / n!| for n > order is dominated by the first omitted term.
    double v = 1.0;
    for (std::size_t n = 1; n <= order + 1; ++n) v *= scale / static_cast<double>(n);
    return v;
}

DomainSpec sampled_image_domain(const std::string& label, cplx base, cplx omitted_a,
                                cplx omitted_b, const ComplementDistance& cd) {
    DomainSpec d;
    d.kind = DomainKind::sampled_image;
    d.label = label;
    d.simply_connected = false;
    d.omitted_points = {omitted_a, omitted_b};
    d.distance_fn = [base, cd](cplx w) {
        // Only exact at the base point; corpus consumers query there.
        const double shift = std::abs(w - base);
        return DistanceInterval{std::max(0.0, cd.lower - shift), cd.upper + shift};
    };
    return d;
}

} // namespace

TruncatedSeries koebe_series(std::size_t order) {
    // z/(1-z)^2 = sum n z^n; |a_n| <= cap / 0.95^n past the truncation.
    double cap = 0.0;
    for (std::size_t n = order + 1; n <= order + 400; ++n)
        cap = std::max(cap, static_cast<double>(n) * std::pow(0.95, static_cast<double>(n)));
    return TruncatedSeries::from_rule(
        order, [](std::size_t n) { return cplx{static_cast<double>(n), 0.0}; }, 0.95, cap);
}

TruncatedSeries strip_series(std::size_t order) {
    return TruncatedSeries::from_rule(
        order,
        [](std::size_t n) {
            if (n == 0 || n % 2 == 0) return cplx{};
            return cplx{2.0 / static_cast<double>(n), 0.0};
        },
        1.0, 2.0 / static_cast<double>(order + 1));
}

TruncatedSeries disk_automorphism_series(cplx c, std::size_t order) {
    const double m = std::abs(c);
    const double cap = (1.0 - m * m) * std::pow(m, static_cast<double>(order));
    return TruncatedSeries::from_rule(
        order,
        [c](std::size_t n) {
            if (n == 0) return c;
            return (1.0 - std::norm(c)) * std::pow(-std::conj(c), static_cast<double>(n - 1));
        },
        1.0, cap);
}

CorpusEntry make_modular_entry(double r, double amp, std::size_t order,
                               const ModularExpansion& expansion) {
    CorpusEntry e;
    e.name = "modular_r" + std::to_string(r) + "_a" + std::to_string(amp);
    const double cap_j = 1.001 * std::abs(eval_j(cplx{-0.8, 0.0}));
    e.f = TruncatedSeries::from_rule(
        order,
        [&expansion, r, amp](std::size_t n) {
            if (n == 0) return cplx{};
            const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
            return cplx{amp * sign * expansion.at(n - 1) * std::pow(r, static_cast<double>(n)), 0.0};
        },
        std::min(1.0, 0.8 / r), amp * cap_j);
    e.eval = [r, amp](cplx z) { return amp * eval_j(r * z); };
    auto cd = distance_to_complement(e.eval, cplx{}, 0.999, 2048);
    // Analytic guards: the image contains amp*J of the univalence disk (so
    // the complement stays outside a ball of radius ~0.8315*amp) and omits
    // the value amp*1, which caps the distance at amp.
    const double floor_guard = 0.83 * amp;
    const double cap_guard = amp;
    cd.lower = std::clamp(cd.lower, floor_guard, cap_guard);
    cd.upper = std::clamp(cd.upper, floor_guard, cap_guard);
    // Exactly omitted points: J never takes the value 1, and nothing in the
    // image leaves the max-modulus circle.  When the image hugs amp*1 closer
    // than binary64 can resolve (large r near the boundary), the
    // factorization anchors on the far point instead.
    const cplx near_omitted{amp, 0.0};
    const cplx far_omitted{-1.2 * amp * std::abs(eval_j(cplx{-0.999 * r, 0.0})), 0.0};
    const double gap = std::abs(1.0 - eval_j(cplx{0.999 * r, 0.0}));
    if (gap > 1e-12) {
        e.omitted_a = near_omitted;
        e.omitted_b = far_omitted;
    } else {
        e.omitted_a = far_omitted;
        e.omitted_b = near_omitted;
    }
    e.domain = sampled_image_domain(e.name, cplx{}, e.omitted_a, e.omitted_b, cd);
    e.dist_lower = cd.lower;
    e.dist_upper = cd.upper;
    e.dist_exact = false;
    e.univalent = false;
    e.von_neumann_eligible = cd.upper < 1.0;
    return e;
}

std::vector<CorpusEntry> build_corpus(std::size_t order) {
    std::vector<CorpusEntry> corpus;
    const auto expansion = modular_coefficients(order);

    {
        CorpusEntry e;
        e.name = "identity";
        e.f = TruncatedSeries::identity(std::max<std::size_t>(order, 1));
        e.eval = [](cplx z) { return z; };
        e.domain = cover_identity().target;
        e.omitted_a = cplx{1.0, 0.0};
        e.omitted_b = cplx{-1.0, 0.0};
        e.dist_lower = e.dist_upper = 1.0;
        e.dist_exact = true;
        e.univalent = true;
        corpus.push_back(std::move(e));
    }

    for (const cplx c : {cplx{0.5, 0.0}, cplx{0.0, 0.3}, cplx{-0.4, 0.2}}) {
        CorpusEntry e;
        e.name = "disk_automorphism_" + std::to_string(c.real()) + "_" + std::to_string(c.imag());
        e.f = disk_automorphism_series(c, order);
        const cplx cc = std::conj(c);
        e.eval = [c, cc](cplx z) { return (z + c) / (1.0 + cc * z); };
        e.domain = cover_disk_automorphism(c).target;
        e.omitted_a = c / std::abs(c); // nearest boundary point to f(0) = c
        e.omitted_b = -c / std::abs(c);
        e.dist_lower = e.dist_upper = 1.0 - std::abs(c);
        e.dist_exact = true;
        e.univalent = true;
        e.von_neumann_eligible = true;
        corpus.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "koebe";
        e.f = koebe_series(order);
        e.eval = [](cplx z) {
            const cplx den = 1.0 - z;
            return z / (den * den);
        };
        e.domain = cover_koebe().target;
        e.omitted_a = cplx{-0.25, 0.0};
        e.omitted_b = cplx{-1.0, 0.0};
        e.dist_lower = e.dist_upper = 0.25;
        e.dist_exact = true;
        e.univalent = true;
        e.von_neumann_eligible = true;
        corpus.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "strip";
        e.f = strip_series(order);
        e.eval = [](cplx z) { return std::log((1.0 + z) / (1.0 - z)); };
        e.domain = cover_strip_log().target;
        e.omitted_a = cplx{0.0, std::numbers::pi / 2.0};
        e.omitted_b = cplx{0.0, -std::numbers::pi / 2.0};
        e.dist_lower = e.dist_upper = std::numbers::pi / 2.0;
        e.dist_exact = true;
        e.univalent = true;
        corpus.push_back(std::move(e));
    }

    // Scaled modular maps A*J(r z): coefficients come from the expansion of
    // J, the image geometry from boundary sampling with winding numbers.
    corpus.push_back(make_modular_entry(0.5, 0.25, order, expansion));
    corpus.push_back(make_modular_entry(0.9, 0.05, order, expansion));

    // Exponential maps recentred to 0: exp(s z) - 1 omits e^{-s} - 1 (the
    // nearest boundary point) and -1.
    for (const double s : {1.0, 2.0}) {
        CorpusEntry e;
        e.name = "exp_scale" + std::to_string(static_cast<int>(s));
        e.f = TruncatedSeries::from_rule(
            order,
            [s](std::size_t n) {
                if (n == 0) return cplx{};
                double v = 1.0;
                for (std::size_t k = 1; k <= n; ++k) v *= s / static_cast<double>(k);
                return cplx{v, 0.0};
            },
            1.0, factorial_cap(order, s));
        e.eval = [s](cplx z) { return std::exp(s * z) - 1.0; };
        DomainSpec d;
        d.kind = DomainKind::sampled_image;
        d.label = e.name;
        d.simply_connected = true;
        const double dist = 1.0 - std::exp(-s);
        e.omitted_a = cplx{std::exp(-s) - 1.0, 0.0};
        e.omitted_b = cplx{-1.0, 0.0};
        d.omitted_points = {e.omitted_a, e.omitted_b};
        d.distance_fn = [s](cplx w) {
            // distance from w to the curve exp(s e^{i t}) - 1, sampled
            double best = std::numeric_limits<double>::infinity();
            for (int j = 0; j < 2048; ++j) {
                const double th = 2.0 * std::numbers::pi * j / 2048.0;
                best = std::min(best, std::abs(std::exp(s * std::polar(1.0, th)) - 1.0 - w));
            }
            return DistanceInterval{std::max(0.0, best * (1.0 - 1e-3)), best};
        };
        e.domain = d;
        e.dist_lower = e.dist_upper = dist;
        e.dist_exact = true; // the boundary minimum sits at z = -1 (checked in tests)
        e.univalent = true;  // s <= 2 keeps the diameter below 2*pi
        e.von_neumann_eligible = true;
        corpus.push_back(std::move(e));
    }

    return corpus;
}

std::vector<std::pair<std::string, TruncatedSeries>> classical_bohr_family(std::size_t order) {
    std::vector<std::pair<std::string, TruncatedSeries>> out;
    out.emplace_back("identity", TruncatedSeries::identity(std::max<std::size_t>(order, 1)));
    out.emplace_back("constant_0.99",
                     TruncatedSeries(std::vector<cplx>{cplx{0.99, 0.0}}));
    for (const cplx c : {cplx{0.5, 0.0}, cplx{0.0, 0.3}, cplx{-0.4, 0.2}}) {
        auto t = disk_automorphism_series(c, order);
        out.emplace_back("automorphism_" + std::to_string(c.real()) + "_" + std::to_string(c.imag()), t);
        out.emplace_back("automorphism_sq_" + std::to_string(c.real()) + "_" + std::to_string(c.imag()),
                         mul(t, t));
    }
    return out;
}

} // namespace bohrlab
