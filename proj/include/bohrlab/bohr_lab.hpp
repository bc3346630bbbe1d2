#pragma once

#include "bohrlab/corpus.hpp"
#include "bohrlab/modular.hpp"
#include "bohrlab/record.hpp"
#include "bohrlab/series.hpp"

#include <functional>
#include <vector>

namespace bohrlab {

/// The factorization h(z) = z (f(z) - a) / (b - a) of a map omitting a and b,
/// together with the image distances of h and of h1(z) = h(e^{-pi} z) that
/// drive the majorant bound.  h vanishes only at the origin; the
/// factorization certifies that on a dense grid.
struct HFactorization {
    TruncatedSeries h;  // coefficients c_1, c_2, ... (constant term 0)
    TruncatedSeries h1; // c_n e^{-n pi}
    cplx a{};
    cplx b{};
    cplx f0{};                 // a_0
    double delta = 0.0;        // d(0, complement of h(U)), certified-lower
    double delta_upper = 0.0;
    double delta1 = 0.0;       // d(0, complement of h1(U)), certified-lower
    double delta1_upper = 0.0; // sample value (overestimates the minimum)
    cplx h1_prime_at_0{};      // c_1 e^{-pi}
    int inner_winding = 0;     // winding of h(e^{-pi} circle) around 0; 1 for univalent h1
};

/// Dilatation pair for the harmonic bound: g' = mu h', g(0) = 0.
struct HarmonicPair {
    std::string name;
    TruncatedSeries h_series;
    TruncatedSeries mu; // Schwarz dilatation, mu(0) = 0
    TruncatedSeries g_series;
    double dist = 0.0; // d(h(0), boundary of h(U))
};

HarmonicPair make_harmonic_pair(std::string name, const TruncatedSeries& h,
                                const TruncatedSeries& mu, double dist);

/// Standard harmonic pairs: mu in {0, z, z^2} over the Koebe and strip maps.
std::vector<HarmonicPair> harmonic_pairs(std::size_t order = 64);

/// Factorize f against omitted points a, b.  The optional evaluator is used
/// for image sampling (falls back to the truncated series).  Throws
/// DegenerateOmittedPoints when |a-b| < 1e-12 and ZeroDetected when h nearly
/// vanishes away from the origin.
HFactorization h_factorize(const TruncatedSeries& f, cplx a, cplx b,
                           const std::function<cplx(cplx)>& evaluator = {});

/// Majorant bound sum_{n>=1} |a_n| e^{-n pi} <= 2 d at the working radius
/// e^{-pi}; the record keeps the ratio lhs/d to probe sharpness.
VerificationRecord verify_majorant_bound(const std::string& name, const TruncatedSeries& f,
                                         double dist_lower);

/// Step-by-step inequalities behind the majorant bound, one record each:
///   series_split            M(f - a_0)        <= |b-a| M(h/z) + |a - a_0|
///   coefficient_majorant    |c_n|             <  delta M_n   for all n
///   scaled_image_bound      M(h1) at e^{-pi}  <= delta1 * (-J(-e^{-pi}))
///   arc_sum_bound           M(z f) at e^{-pi} <= delta1 |b-a| + |a| e^{-pi}
///   distance_ratio_bound    M(f - a_0)        <= |a-a_0| (delta1/|h1'(0)| + 1)
///   derivative_distance     delta1            <= |h1'(0)|
std::vector<VerificationRecord> trace_factorization_chain(const std::string& name,
                                                          const HFactorization& fact,
                                                          const TruncatedSeries& f,
                                                          const ModularExpansion& expansion);

/// M(f) <= 1 at r = 1/3 for self-maps of the disk.
VerificationRecord verify_classical_bohr(const std::string& name, const TruncatedSeries& f);

/// |p(f(z))| <= sup |p| on the closed unit disk, over a grid of
/// |z| <= e^{-pi}/3; requires d(f(0), boundary) < 1.
VerificationRecord verify_von_neumann(const std::string& name, const TruncatedSeries& f,
                                      double dist, const std::vector<cplx>& poly);

/// Harmonic majorant bound M(f - a_0) <= 4d at r = e^{-pi}/3, including the
/// intermediate checks M(g) <= M(h - a_0) for sampled r <= 1/3 and
/// M(g) < 2d at e^{-pi}.
VerificationRecord verify_harmonic(const HarmonicPair& pair);

struct RadiusScanResult {
    double r_star = 0.0;
    bool reaches_threshold = false; // r_star >= e^{-pi}
};

/// Largest grid radius at which every family member keeps
/// sum_{n>=1} |a_n| r^n <= 2 d_member.
RadiusScanResult bohr_radius_scan(const std::vector<std::pair<TruncatedSeries, double>>& family);

inline double working_radius() { return std::exp(-std::acos(-1.0)); } // e^{-pi}

} // namespace bohrlab
