#include "bohrlab/series.hpp"
#include "bohrlab/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bohrlab {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> c, double radius, double cap)
    : coeffs(std::move(c)), sample_radius(radius), tail_bound(cap) {
    if (coeffs.empty()) coeffs.assign(1, cplx{});
    if (!(sample_radius > 0.0) || sample_radius > 1.0)
        throw InvalidRadius("tail certificate radius must lie in (0,1]");
    if (!(tail_bound >= 0.0) || !std::isfinite(tail_bound))
        throw std::invalid_argument("tail_bound must be finite and nonnegative");
}

double TruncatedSeries::tail_at(double r) const {
    if (tail_bound == 0.0) return 0.0;
    const double q = r / sample_radius;
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    return tail_bound * std::pow(q, static_cast<double>(order() + 1)) / (1.0 - q);
}

cplx TruncatedSeries::eval(cplx z) const {
    cplx acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<cplx>(order + 1, cplx{}));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    std::vector<cplx> c(order + 1, cplx{});
    c[0] = 1.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    std::vector<cplx> c(std::max<std::size_t>(order, 1) + 1, cplx{});
    c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::from_rule(std::size_t order,
                                           const std::function<cplx(std::size_t)>& rule,
                                           double radius, double cap) {
    std::vector<cplx> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = rule(n);
    return TruncatedSeries(std::move(c), radius, cap);
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
    const std::size_t n = std::max(s.order(), t.order());
    std::vector<cplx> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = s.at(k) + t.at(k);
    // Caps add once both are read against the smaller certificate radius.
    const double radius = std::min(s.sample_radius, t.sample_radius);
    return TruncatedSeries(std::move(c), radius, s.tail_bound + t.tail_bound);
}

TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t) {
    return add(s, scale(t, cplx{-1.0, 0.0}));
}

TruncatedSeries scale(const TruncatedSeries& s, cplx factor) {
    std::vector<cplx> c(s.coeffs);
    for (auto& v : c) v *= factor;
    return TruncatedSeries(std::move(c), s.sample_radius, std::abs(factor) * s.tail_bound);
}

namespace {

// Bohr upper value at radius rho including the tail certificate; used to cap
// coefficients of products and compositions past the truncation order.
double bohr_upper_at(const TruncatedSeries& s, double rho) {
    double v = 0.0;
    double p = 1.0;
    for (std::size_t n = 0; n <= s.order(); ++n, p *= rho) v += std::abs(s.coeffs[n]) * p;
    return v + s.tail_at(rho);
}

} // namespace

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    const std::size_t n = std::max(s.order(), t.order());
    std::vector<cplx> c(n + 1, cplx{});
    for (std::size_t i = 0; i <= std::min(s.order(), n); ++i) {
        if (s.coeffs[i] == cplx{}) continue;
        const std::size_t jmax = std::min(t.order(), n - i);
        for (std::size_t j = 0; j <= jmax; ++j) c[i + j] += s.coeffs[i] * t.coeffs[j];
    }
    // Coefficient cap for the product tail: |c_m| <= S(rho) T(rho) / rho^m
    // where S, T are Bohr upper values on a circle strictly inside both
    // certificate radii.
    double radius = 0.9 * std::min(s.sample_radius, t.sample_radius);
    double cap = 0.0;
    if (s.tail_bound != 0.0 || t.tail_bound != 0.0 || s.order() + t.order() > n) {
        cap = bohr_upper_at(s, radius) * bohr_upper_at(t, radius);
        if (!std::isfinite(cap)) { cap = 0.0; radius = std::min(s.sample_radius, t.sample_radius); }
    } else {
        radius = std::min(s.sample_radius, t.sample_radius);
    }
    return TruncatedSeries(std::move(c), radius, cap);
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (std::abs(inner.at(0)) > 1e-12)
        throw NonSchwarzInner("inner series must vanish at 0");
    const std::size_t n = std::max(outer.order(), inner.order());
    TruncatedSeries in = inner;
    in.coeffs.resize(n + 1, cplx{});
    in.coeffs[0] = cplx{}; // drop the sub-1e-12 residue so powers stay triangular
    TruncatedSeries acc = TruncatedSeries::zero(n);
    for (std::size_t k = outer.order() + 1; k-- > 0;) {
        acc = mul(acc, in);
        acc.coeffs[0] += outer.coeffs[k];
    }
    // Tail cap: with u = Bohr upper of inner at rho, the composite is bounded
    // by the outer Bohr upper at u whenever u stays inside the outer
    // certificate.  Shrink rho until it does (or give up on a certificate).
    double rho = 0.9 * in.sample_radius;
    double cap = 0.0;
    bool certified = false;
    if (outer.tail_bound == 0.0 && inner.tail_bound == 0.0 && outer.order() * inner.order() <= n) {
        certified = true; // exact polynomial composition, nothing truncated
        rho = std::min(outer.sample_radius, inner.sample_radius);
    } else {
        for (int tries = 0; tries < 60 && rho > 1e-8; ++tries, rho *= 0.7) {
            const double u = bohr_upper_at(in, rho);
            if (u < 0.95 * outer.sample_radius) {
                cap = bohr_upper_at(outer, u);
                certified = std::isfinite(cap);
                break;
            }
        }
    }
    if (!certified) { rho = 1e-8; cap = 0.0; } // no usable certificate; polynomial part only
    acc.sample_radius = rho;
    acc.tail_bound = cap;
    return acc;
}

TruncatedSeries differentiate(const TruncatedSeries& s) {
    std::vector<cplx> c(std::max<std::size_t>(s.order(), 1), cplx{});
    for (std::size_t n = 1; n <= s.order(); ++n) c[n - 1] = static_cast<double>(n) * s.coeffs[n];
    // The shifted coefficient (n+1) a_{n+1} obeys
    // |(n+1) a_{n+1}| <= cap (n+1) / R^{n+1} <= cap' / R'^n
    // with R' = 0.9 R and cap' = (cap/R) max_{n >= N} (n+1) 0.9^n.
    double cap = 0.0;
    double radius = s.sample_radius;
    if (s.tail_bound != 0.0) {
        radius = 0.9 * s.sample_radius;
        double peak = 0.0;
        for (std::size_t n = s.order(); n <= s.order() + 400; ++n)
            peak = std::max(peak, static_cast<double>(n + 1) * std::pow(0.9, static_cast<double>(n)));
        cap = s.tail_bound * peak / s.sample_radius;
    }
    return TruncatedSeries(std::move(c), radius, cap);
}

TruncatedSeries integrate(const TruncatedSeries& s) {
    std::vector<cplx> c(s.order() + 2, cplx{});
    for (std::size_t n = 0; n <= s.order(); ++n) c[n + 1] = s.coeffs[n] / static_cast<double>(n + 1);
    return TruncatedSeries(std::move(c), s.sample_radius, s.tail_bound);
}

BohrValue bohr_majorant(const TruncatedSeries& s, double r, std::size_t from_index) {
    if (!(r >= 0.0) || r >= 1.0) throw InvalidRadius("majorant radius must lie in [0,1)");
    if (from_index > s.order() + 1)
        throw std::invalid_argument("from_index exceeds series order");
    BohrValue out;
    out.radius = r;
    double p = std::pow(r, static_cast<double>(from_index));
    for (std::size_t n = from_index; n <= s.order(); ++n, p *= r)
        out.value += std::abs(s.coeffs[n]) * p;
    out.upper = out.value + s.tail_at(r);
    return out;
}

TruncatedSeries extract_coefficients(const std::function<cplx(cplx)>& evaluator,
                                     double radius, std::size_t order) {
    if (!(radius > 0.0) || radius >= 1.0) throw InvalidRadius("sampling radius must lie in (0,1)");
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const std::size_t k_nodes = 4 * order;
    std::vector<cplx> samples(k_nodes);
    double max_mod = 0.0;
    for (std::size_t k = 0; k < k_nodes; ++k) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(k_nodes);
        const cplx z = std::polar(radius, th);
        samples[k] = evaluator(z);
        if (!finite(samples[k]))
            throw EvaluationFailure("evaluator returned a non-finite value on the sampling circle");
        max_mod = std::max(max_mod, std::abs(samples[k]));
    }
    std::vector<cplx> roots(k_nodes);
    for (std::size_t j = 0; j < k_nodes; ++j)
        roots[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k_nodes));
    std::vector<cplx> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        cplx acc{};
        for (std::size_t k = 0; k < k_nodes; ++k) acc += samples[k] * roots[(k * n) % k_nodes];
        c[n] = acc / (static_cast<double>(k_nodes) * std::pow(radius, static_cast<double>(n)));
    }
    // 10% headroom over the sampled max covers mesh error and DFT aliasing.
    return TruncatedSeries(std::move(c), radius, 1.1 * max_mod + 1e-15);
}

std::string to_json(const TruncatedSeries& s) {
    nlohmann::json j;
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const auto& a : s.coeffs) arr.push_back({a.real(), a.imag()});
    j["order"] = s.order();
    j["tail_bound"] = s.tail_bound;
    j["sample_radius"] = s.sample_radius;
    return j.dump();
}

} // namespace bohrlab
