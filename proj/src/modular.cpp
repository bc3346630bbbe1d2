#include "bohrlab/modular.hpp"
#include "bohrlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace bohrlab {

namespace {

constexpr double kProductCutoff = 1e-18;

// Number of product factors needed so that |z|^{2n-1} < cutoff.
std::size_t factors_needed(double mod) {
    if (mod <= 0.0) return 1;
    const double k = (std::log(kProductCutoff) / std::log(mod) + 1.0) / 2.0;
    return static_cast<std::size_t>(std::max(1.0, std::ceil(k))) + 1;
}

std::int64_t binom8(std::size_t k) {
    static constexpr std::int64_t row[9] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
    return row[k];
}

// C(k+7, 7), exact in 64-bit integers for the orders used here.
std::int64_t neg_binom8(std::size_t k) {
    std::int64_t num = 1;
    for (std::size_t j = 1; j <= 7; ++j) num *= static_cast<std::int64_t>(k + j);
    return num / 5040;
}

// result *= factor, truncated at `order`.
void mul_inplace(std::vector<double>& result, const std::vector<double>& factor, std::size_t order) {
    std::vector<double> out(order + 1, 0.0);
    for (std::size_t i = 0; i <= order; ++i) {
        if (result[i] == 0.0) continue;
        for (std::size_t j = 0; i + j <= order && j < factor.size(); ++j)
            out[i + j] += result[i] * factor[j];
    }
    result = std::move(out);
}

} // namespace

cplx eval_j(cplx z) {
    const double mod = std::abs(z);
    if (mod >= 1.0) throw DomainError("eval_j requires |z| < 1");
    if (mod == 0.0) return cplx{};
    cplx prod{1.0, 0.0};
    const std::size_t nmax = factors_needed(mod);
    cplx z_pow = z; // z^{2n-1} running power
    for (std::size_t n = 1; n <= nmax; ++n) {
        const cplx odd = z_pow;        // z^{2n-1}
        const cplx even = z_pow * z;   // z^{2n}
        const cplx denom = 1.0 + odd;
        if (std::abs(denom) < 1e-12) throw PoleProximity("product denominator nearly vanishes");
        cplx ratio = (1.0 + even) / denom;
        cplx r2 = ratio * ratio;
        cplx r4 = r2 * r2;
        prod *= r4 * r4;
        z_pow *= z * z;
        if (std::abs(odd) < kProductCutoff) break;
    }
    return 16.0 * z * prod;
}

cplx eval_j_derivative(cplx z) {
    const double mod = std::abs(z);
    if (mod >= 1.0) throw DomainError("eval_j_derivative requires |z| < 1");
    if (mod == 0.0) return cplx{16.0, 0.0};
    // J'/J = 1/z + 8 sum_n [ 2n z^{2n-1}/(1+z^{2n}) - (2n-1) z^{2n-2}/(1+z^{2n-1}) ]
    cplx logderiv = 1.0 / z;
    const std::size_t nmax = factors_needed(mod);
    cplx z_pow = z;
    for (std::size_t n = 1; n <= nmax; ++n) {
        const cplx odd = z_pow;
        const cplx even = z_pow * z;
        const cplx denom = 1.0 + odd;
        if (std::abs(denom) < 1e-12) throw PoleProximity("product denominator nearly vanishes");
        const double dn = static_cast<double>(n);
        logderiv += 8.0 * (2.0 * dn * even / z / (1.0 + even) - (2.0 * dn - 1.0) * odd / z / denom);
        z_pow *= z * z;
        if (std::abs(odd) < kProductCutoff) break;
    }
    return eval_j(z) * logderiv;
}

ModularExpansion modular_coefficients(std::size_t order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    // -J(-z)/(16z) = prod_{n>=1} (1+z^{2n})^8 (1-z^{2n-1})^{-8}; every factor
    // has nonnegative integer coefficients, so positivity survives rounding.
    std::vector<double> acc(order + 1, 0.0);
    acc[0] = 1.0;
    for (std::size_t n = 1; 2 * n - 1 <= order; ++n) {
        const std::size_t even_m = 2 * n;
        const std::size_t odd_m = 2 * n - 1;
        if (even_m <= order) {
            std::vector<double> f(order + 1, 0.0);
            for (std::size_t k = 0; k <= 8 && k * even_m <= order; ++k)
                f[k * even_m] = static_cast<double>(binom8(k));
            mul_inplace(acc, f, order);
        }
        {
            std::vector<double> f(order + 1, 0.0);
            for (std::size_t k = 0; k * odd_m <= order; ++k)
                f[k * odd_m] = static_cast<double>(neg_binom8(k));
            mul_inplace(acc, f, order);
        }
    }
    ModularExpansion out;
    out.m_coeffs.resize(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out.m_coeffs[n] = 16.0 * acc[n];
    return out;
}

TruncatedSeries ModularExpansion::minus_j_minus_series() const {
    std::vector<cplx> c(order() + 2, cplx{});
    for (std::size_t n = 0; n <= order(); ++n) c[n + 1] = m_coeffs[n];
    const double cap = 1.001 * std::abs(eval_j(cplx{-0.8, 0.0}));
    return TruncatedSeries(std::move(c), 0.8, cap);
}

TruncatedSeries ModularExpansion::j_series() const {
    std::vector<cplx> c(order() + 2, cplx{});
    for (std::size_t n = 0; n <= order(); ++n)
        c[n + 1] = (n % 2 == 0 ? m_coeffs[n] : -m_coeffs[n]);
    const double cap = 1.001 * std::abs(eval_j(cplx{-0.8, 0.0}));
    return TruncatedSeries(std::move(c), 0.8, cap);
}

CircleMaxResult max_modulus_on_circle(double r, std::size_t samples) {
    if (!(r > 0.0) || r > 0.3) throw InvalidRadius("circle radius must lie in (0, 0.3]");
    if (samples < 360) throw std::invalid_argument("need at least 360 samples");
    CircleMaxResult out;
    out.grid_step = 2.0 * std::numbers::pi / static_cast<double>(samples);
    double best = -1.0;
    double best_theta = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double th = out.grid_step * static_cast<double>(k);
        const cplx z = std::polar(r, th);
        const double v = std::abs(eval_j(z));
        if (v > best) {
            best = v;
            best_theta = th;
            out.argmax = z;
        }
    }
    out.max_value = best;
    out.value_at_minus_r = std::abs(eval_j(cplx{-r, 0.0}));
    double dth = std::abs(best_theta - std::numbers::pi);
    out.argmax_at_minus_r = dth <= out.grid_step * (1.0 + 1e-9);
    out.residual = std::abs(out.max_value - out.value_at_minus_r);
    return out;
}

UnivalenceScanResult univalence_scan(double radius, std::size_t grid_density) {
    if (!(radius > 0.0) || radius >= 1.0) throw InvalidRadius("scan radius must lie in (0,1)");
    if (grid_density < 50) throw std::invalid_argument("grid_density must be >= 50");
    UnivalenceScanResult out;
    out.radius_tested = radius;

    struct Node {
        cplx value;
        cplx z;
    };
    std::vector<Node> nodes;
    const auto n_rings = static_cast<std::size_t>(
        std::max(3.0, std::ceil(static_cast<double>(grid_density) * radius)));
    for (std::size_t i = 1; i <= n_rings; ++i) {
        const double ri = radius * static_cast<double>(i) / static_cast<double>(n_rings);
        const auto n_theta = static_cast<std::size_t>(std::max(
            8.0, std::ceil(static_cast<double>(grid_density) * 2.0 * std::numbers::pi * ri)));
        for (std::size_t k = 0; k < n_theta; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_theta);
            const cplx z = std::polar(ri, th);
            nodes.push_back({eval_j(z), z});
        }
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const Node& a, const Node& b) { return a.value.real() < b.value.real(); });

    const double h = 1.0 / static_cast<double>(grid_density);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size() && j < i + 64; ++j) {
            const cplx z1 = nodes[i].z;
            const cplx z2 = nodes[j].z;
            if (std::abs(z1 - z2) < 3.0 * h) continue;
            const double speed =
                std::max({std::abs(eval_j_derivative(z1)), std::abs(eval_j_derivative(z2)), 0.05});
            if (std::abs(nodes[i].value - nodes[j].value) > 2.0 * h * speed) continue;
            // Newton-refine z2 toward an exact collision with J(z1).
            cplx w = z2;
            const cplx target = nodes[i].value;
            bool ok = false;
            for (int it = 0; it < 40; ++it) {
                const cplx fw = eval_j(w) - target;
                if (std::abs(fw) < 1e-13 * (1.0 + std::abs(target))) {
                    ok = true;
                    break;
                }
                const cplx dw = eval_j_derivative(w);
                if (std::abs(dw) < 1e-14) break;
                w -= fw / dw;
                if (std::abs(w) >= radius * (1.0 + 1e-9)) break;
            }
            if (!ok) continue;
            if (std::abs(w) > radius || std::abs(w - z1) <= 1e-6) continue;
            const double tol = 1e-9 * (1.0 + std::abs(eval_j_derivative(z1)));
            if (std::abs(eval_j(w) - eval_j(z1)) >= tol) continue;
            out.injective = false;
            out.witness_pair = std::make_pair(z1, w);
            return out;
        }
    }
    return out;
}

double univalence_radius(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const double s = 1.0 + alpha;
    return 1.0 / (s + std::sqrt(s * s - 1.0)); // = s - sqrt(s^2-1), cancellation-free
}

double univalence_radius_alpha_for(double target) {
    if (!(target > 0.0) || target >= 1.0)
        throw std::invalid_argument("target radius must lie in (0,1)");
    double lo = 1e-9, hi = 1e9;
    for (int it = 0; it < 240; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (univalence_radius(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SubordinationCheck subordination_coefficient_check(const TruncatedSeries& h, cplx a,
                                                   const ModularExpansion& expansion) {
    if (std::abs(a) <= 0.0) throw std::invalid_argument("omitted value a must be nonzero");
    SubordinationCheck out;
    const std::size_t kmax = std::min(h.order(), expansion.order());
    for (std::size_t k = 1; k <= kmax; ++k) {
        const double ratio = std::abs(h.at(k)) / (16.0 * std::abs(a) * expansion.at(k));
        if (ratio > out.worst_ratio) {
            out.worst_ratio = ratio;
            out.worst_index = k;
        }
    }
    out.passed = out.worst_ratio <= 1.0;
    return out;
}

} // namespace bohrlab
