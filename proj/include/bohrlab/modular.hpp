#pragma once

#include "bohrlab/series.hpp"

#include <optional>
#include <utility>

namespace bohrlab {

/// Coefficients M_0..M_N of -J(-z) = z * sum_n M_n z^n, all strictly positive.
struct ModularExpansion {
    std::vector<double> m_coeffs;

    std::size_t order() const { return m_coeffs.size() - 1; }
    double at(std::size_t n) const { return m_coeffs[n]; }

    /// -J(-z) as a TruncatedSeries in z (coefficient of z^{n+1} is M_n),
    /// with a Cauchy tail certificate taken on |z| = 0.8.
    TruncatedSeries minus_j_minus_series() const;

    /// J itself: coefficient of z^{n+1} is (-1)^n M_n.
    TruncatedSeries j_series() const;
};

struct UnivalenceScanResult {
    double radius_tested = 0.0;
    bool injective = true;
    std::optional<std::pair<cplx, cplx>> witness_pair; // present iff !injective
};

struct CircleMaxResult {
    cplx argmax;
    double max_value = 0.0;
    double grid_step = 0.0;        // angular spacing of the scan
    double value_at_minus_r = 0.0; // |J(-r)|
    bool argmax_at_minus_r = false;
    double residual = 0.0;         // |max_value - |J(-r)||
};

/// The modular function J(z) = 16 z prod_n ((1+z^{2n})/(1+z^{2n-1}))^8,
/// truncating the product once |z|^{2n-1} < 1e-18.  Throws DomainError for
/// |z| >= 1 and PoleProximity if a denominator factor nearly vanishes.
cplx eval_j(cplx z);

/// d/dz of the product above, via the logarithmic derivative.
cplx eval_j_derivative(cplx z);

/// Expand -J(-z) = 16 z prod_n ((1+z^{2n})/(1-z^{2n-1}))^8 by multiplying the
/// binomial / negative-binomial expansions of each factor.  Factor
/// coefficients are exact integer binomials before conversion to double, so
/// positivity of every M_n is exact.
ModularExpansion modular_coefficients(std::size_t order);

/// Locate max |J| on |z| = r from equispaced samples.  The maximum of |J| on
/// a circle sits at the negative real point because -J(-z) has positive
/// coefficients; the result records how well the scan reproduces that.
CircleMaxResult max_modulus_on_circle(double r, std::size_t samples = 720);

/// Pairwise collision search for J over a polar grid of |z| <= radius.
/// injective = true means no collision was found (a non-refutation
/// certificate, not a proof).  A reported witness pair is refined by Newton
/// iteration and separated by more than 1e-6.
UnivalenceScanResult univalence_scan(double radius, std::size_t grid_density = 80);

/// rho(alpha) = 1 + alpha - sqrt((1+alpha)^2 - 1): the univalence radius for
/// a bounded map vanishing only at 0 with (h(z)/z)(0) = e^{-alpha}.
/// Strictly decreasing; throws DomainError for alpha <= 0.
double univalence_radius(double alpha);

/// Bisect for the alpha at which univalence_radius(alpha) = target.
double univalence_radius_alpha_for(double target);

/// Worst ratio |h_k| / (16 |a| M_k) over computed k >= 1; the classical
/// coefficient bound for maps vanishing only at 0 that omit the value a.
struct SubordinationCheck {
    double worst_ratio = 0.0;
    std::size_t worst_index = 0;
    bool passed = true; // worst_ratio <= 1
};

SubordinationCheck subordination_coefficient_check(const TruncatedSeries& h, cplx a,
                                                   const ModularExpansion& expansion);

} // namespace bohrlab
