#include "bohrlab/bohr_lab.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace bohrlab {

namespace {

const double kWorkRadius = std::exp(-std::numbers::pi);

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// h(z)/z for a series with vanishing constant term.
TruncatedSeries shift_down(const TruncatedSeries& s) {
    std::vector<cplx> c(std::max<std::size_t>(s.order(), 1), cplx{});
    for (std::size_t n = 1; n <= s.order(); ++n) c[n - 1] = s.coeffs[n];
    return TruncatedSeries(std::move(c), s.sample_radius, s.tail_bound / s.sample_radius);
}

cplx eval_poly(const std::vector<cplx>& p, cplx w) {
    cplx acc{};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * w + *it;
    return acc;
}

} // namespace

HFactorization h_factorize(const TruncatedSeries& f, cplx a, cplx b,
                           const std::function<cplx(cplx)>& evaluator) {
    if (std::abs(a - b) < 1e-12)
        throw DegenerateOmittedPoints("omitted points must be distinct");
    HFactorization fact;
    fact.a = a;
    fact.b = b;
    fact.f0 = f.at(0);
    const cplx ba = b - a;

    std::vector<cplx> c(f.order() + 2, cplx{});
    c[1] = (f.at(0) - a) / ba;
    for (std::size_t n = 2; n <= f.order() + 1; ++n) c[n] = f.at(n - 1) / ba;
    fact.h = TruncatedSeries(std::move(c), f.sample_radius,
                             f.tail_bound * f.sample_radius / std::abs(ba));

    const double q = kWorkRadius;
    std::vector<cplx> c1(fact.h.order() + 1, cplx{});
    for (std::size_t n = 1; n <= fact.h.order(); ++n)
        c1[n] = fact.h.coeffs[n] * std::pow(q, static_cast<double>(n));
    const double ratio = q / fact.h.sample_radius;
    fact.h1 = TruncatedSeries(std::move(c1), 1.0,
                              fact.h.tail_bound * std::pow(ratio, static_cast<double>(fact.h.order() + 1)));
    fact.h1_prime_at_0 = fact.h.at(1) * q;

    auto h_eval = [&f, evaluator, a, ba](cplx z) {
        const cplx fz = evaluator ? evaluator(z) : f.eval(z);
        return z * (fz - a) / ba;
    };

    // Without an exact evaluator the image sampling must stay where the
    // truncated polynomial is certified accurate, or spurious near-boundary
    // roots of the truncation would masquerade as zeros of h.
    double image_radius = 0.999;
    if (!evaluator) {
        while (image_radius > 0.4 && f.tail_at(image_radius) > 1e-8) image_radius -= 0.05;
    }

    // h vanishes only at the origin.  Count the zeros by the argument
    // principle: the winding of h over the sampling circle must be the simple
    // zero at 0 and nothing else.  A grid sample below 1e-10 alone is not
    // conclusive (legitimate corpus maps approach their omitted value
    // doubly-exponentially near the boundary), so it only corroborates.
    bool near_zero_seen = false;
    for (int i = 0; i < 40 && !near_zero_seen; ++i) {
        const double r = image_radius * (0.05 + 0.95 * static_cast<double>(i) / 39.0);
        for (int k = 0; k < 256; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / 256.0;
            if (std::abs(h_eval(std::polar(r, th))) < 1e-10) {
                near_zero_seen = true;
                break;
            }
        }
    }
    if (min_on_circle(h_eval, cplx{}, image_radius, 2048).winding_around_center != 1)
        throw ZeroDetected(near_zero_seen
                               ? "factorized map vanishes away from the origin"
                               : "factorized map has extra zeros inside the disk");

    const auto cd = distance_to_complement(h_eval, cplx{}, image_radius, 2048);
    // Schwarz floor: h/delta lifts through the large Koebe map, whose
    // derivative at 0 is 16, so the image of h always covers |w| < |c_1|/16.
    const double schwarz_floor = std::abs(fact.h.at(1)) / 16.0;
    fact.delta = std::max(cd.lower, schwarz_floor);
    fact.delta_upper = std::max(cd.upper, fact.delta);

    const auto mc = min_on_circle(h_eval, cplx{}, q, 2048);
    fact.delta1 = mc.lower;
    fact.delta1_upper = mc.value;
    fact.inner_winding = mc.winding_around_center;
    return fact;
}

std::vector<VerificationRecord> trace_factorization_chain(const std::string& name,
                                                          const HFactorization& fact,
                                                          const TruncatedSeries& f,
                                                          const ModularExpansion& expansion) {
    std::vector<VerificationRecord> out;
    const double r = kWorkRadius;
    const std::string prefix = "trace/" + name + "/";
    const double dist_a = std::abs(fact.a - fact.f0);
    const double mod_ba = std::abs(fact.b - fact.a);

    {
        const double lhs = bohr_majorant(f, r, 1).upper;
        const double rhs = mod_ba * bohr_majorant(shift_down(fact.h), r, 0).value + dist_a;
        out.push_back(make_record(prefix + "series_split", lhs, rhs, 1e-12));
    }
    {
        double worst = 0.0;
        std::size_t worst_n = 0;
        const std::size_t nmax = std::min(fact.h.order(), expansion.order());
        for (std::size_t n = 1; n <= nmax; ++n) {
            const double ratio = std::abs(fact.h.at(n)) / expansion.at(n);
            if (ratio > worst) {
                worst = ratio;
                worst_n = n;
            }
        }
        auto rec = make_record(prefix + "coefficient_majorant", worst, fact.delta, 0.0);
        rec.metadata["worst_index"] = std::to_string(worst_n);
        out.push_back(std::move(rec));
    }
    {
        const double mj = (-eval_j(cplx{-r, 0.0})).real();
        const double lhs = bohr_majorant(fact.h1, r, 1).upper;
        auto rec = make_record(prefix + "scaled_image_bound", lhs,
                               fact.delta1 * std::min(1.0, mj), 1e-12);
        rec.metadata["majorant_at_unit_radius"] = fmt(bohr_majorant(fact.h, r, 1).value);
        rec.metadata["minus_j_minus_at_work_radius"] = fmt(mj);
        out.push_back(std::move(rec));
    }
    {
        const double lhs = r * bohr_majorant(f, r, 0).upper;
        const double rhs = fact.delta1 * mod_ba + std::abs(fact.a) * r;
        out.push_back(make_record(prefix + "arc_sum_bound", lhs, rhs, 1e-12));
    }
    {
        const double lhs = bohr_majorant(f, r, 1).upper;
        const double rhs = dist_a * (fact.delta1 / std::abs(fact.h1_prime_at_0) + 1.0);
        out.push_back(make_record(prefix + "distance_ratio_bound", lhs, rhs, 1e-12));
    }
    {
        auto rec = make_record(prefix + "derivative_distance", fact.delta1_upper,
                               std::abs(fact.h1_prime_at_0), 1e-9);
        rec.metadata["inner_winding"] = std::to_string(fact.inner_winding);
        rec.metadata["quarter_floor"] = fmt(0.25 * std::abs(fact.h1_prime_at_0));
        out.push_back(std::move(rec));
    }
    return out;
}

VerificationRecord verify_majorant_bound(const std::string& name, const TruncatedSeries& f,
                                         double dist_lower) {
    const double lhs = bohr_majorant(f, kWorkRadius, 1).upper;
    auto rec = make_record("theorem/" + name, lhs, 2.0 * dist_lower, 1e-12);
    rec.metadata["ratio_over_distance"] = fmt(lhs / dist_lower);
    return rec;
}

VerificationRecord verify_classical_bohr(const std::string& name, const TruncatedSeries& f) {
    const double lhs = bohr_majorant(f, 1.0 / 3.0, 0).upper;
    return make_record("classical/" + name, lhs, 1.0, 1e-12);
}

VerificationRecord verify_von_neumann(const std::string& name, const TruncatedSeries& f,
                                      double dist, const std::vector<cplx>& poly) {
    if (!(dist < 1.0)) throw std::invalid_argument("von Neumann check needs d < 1");
    if (poly.size() > 17) throw std::invalid_argument("polynomial degree must be <= 16");
    const double grid_radius = kWorkRadius / 3.0;
    double lhs = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double r = grid_radius * static_cast<double>(i) / 10.0;
        for (int k = 0; k < 10; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / 10.0;
            lhs = std::max(lhs, std::abs(eval_poly(poly, f.eval(std::polar(r, th)))));
        }
    }
    double rhs = 0.0;
    for (int k = 0; k < 4096; ++k) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / 4096.0;
        rhs = std::max(rhs, std::abs(eval_poly(poly, std::polar(1.0, th))));
    }
    auto rec = make_record("von_neumann/" + name, lhs, rhs, 1e-9);
    rec.metadata["grid_radius"] = fmt(grid_radius);
    return rec;
}

HarmonicPair make_harmonic_pair(std::string name, const TruncatedSeries& h,
                                const TruncatedSeries& mu, double dist) {
    if (std::abs(mu.at(0)) > 1e-12) throw NonSchwarzInner("dilatation must vanish at 0");
    HarmonicPair pair;
    pair.name = std::move(name);
    pair.h_series = h;
    pair.mu = mu;
    pair.g_series = integrate(mul(mu, differentiate(h)));
    pair.dist = dist;
    return pair;
}

std::vector<HarmonicPair> harmonic_pairs(std::size_t order) {
    std::vector<HarmonicPair> out;
    const auto koebe = koebe_series(order);
    const auto strip = strip_series(order);
    out.push_back(make_harmonic_pair("mu_zero_koebe", koebe, TruncatedSeries::zero(1), 0.25));
    out.push_back(make_harmonic_pair("mu_z_koebe", koebe, TruncatedSeries::identity(1), 0.25));
    TruncatedSeries z2 = TruncatedSeries::zero(2);
    z2.coeffs[2] = 1.0;
    out.push_back(make_harmonic_pair("mu_z2_strip", strip, z2, std::numbers::pi / 2.0));
    return out;
}

VerificationRecord verify_harmonic(const HarmonicPair& pair) {
    const double r = kWorkRadius / 3.0;
    const cplx a0 = pair.h_series.at(0);
    const double lhs = bohr_majorant(pair.h_series, r, 1).upper + bohr_majorant(pair.g_series, r, 0).upper;
    auto rec = make_record("harmonic/" + pair.name, lhs, 4.0 * pair.dist, 1e-12);

    double min_margin = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 12; ++i) {
        const double rr = (1.0 / 3.0) * static_cast<double>(i) / 12.0;
        const double mg = bohr_majorant(pair.g_series, rr, 0).upper;
        const double mh = bohr_majorant(pair.h_series, rr, 1).value;
        min_margin = std::min(min_margin, mh - mg);
    }
    const double mg_work = bohr_majorant(pair.g_series, kWorkRadius, 0).upper;
    rec.metadata["mg_le_mh_min_margin"] = fmt(min_margin);
    rec.metadata["mg_at_work_radius"] = fmt(mg_work);
    rec.metadata["a0"] = fmt(std::abs(a0));
    rec.extra_ok = min_margin >= -1e-12 && mg_work < 2.0 * pair.dist;
    rec.passed = rec.passed && rec.extra_ok;
    return rec;
}

RadiusScanResult bohr_radius_scan(const std::vector<std::pair<TruncatedSeries, double>>& family) {
    if (family.empty()) throw std::invalid_argument("radius scan needs a nonempty family");
    RadiusScanResult out;
    for (int j = 1; j <= 188; ++j) {
        const double r = 0.005 * static_cast<double>(j);
        bool all_ok = true;
        for (const auto& [f, dist] : family) {
            if (bohr_majorant(f, r, 1).upper > 2.0 * dist) {
                all_ok = false;
                break;
            }
        }
        if (!all_ok) break;
        out.r_star = r;
    }
    out.reaches_threshold = out.r_star >= kWorkRadius - 1e-15;
    return out;
}

} // namespace bohrlab
