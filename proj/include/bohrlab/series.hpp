#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bohrlab {

using cplx = std::complex<double>;

/// Truncated Taylor series a_0..a_N with a certified tail model.
///
/// The tail model is geometric: |a_n| <= tail_bound / sample_radius^n for
/// every n > order, so the absolute tail at radius r < sample_radius is
///
///   sum_{n>N} |a_n| r^n  <=  tail_bound * (r/R)^{N+1} / (1 - r/R),
///
/// with R = sample_radius.  tail_bound = 0 means the series is exactly a
/// polynomial.  For series produced by Cauchy-integral extraction the pair
/// (tail_bound, sample_radius) is the max-modulus Cauchy estimate on the
/// sampling circle.
struct TruncatedSeries {
    std::vector<cplx> coeffs;   // coeffs[n] multiplies z^n; size = order+1
    double sample_radius = 1.0; // base radius of the tail certificate, in (0,1]
    double tail_bound = 0.0;    // coefficient cap of the tail model, >= 0

    TruncatedSeries() : coeffs(1, cplx{0.0, 0.0}) {}
    explicit TruncatedSeries(std::vector<cplx> c, double radius = 1.0, double cap = 0.0);

    std::size_t order() const { return coeffs.size() - 1; }
    cplx at(std::size_t n) const { return n < coeffs.size() ? coeffs[n] : cplx{}; }

    /// Certified bound on sum_{n>order} |a_n| r^n; +inf when r >= sample_radius
    /// and the tail is not exactly zero.
    double tail_at(double r) const;

    /// Horner evaluation of the truncated polynomial part.
    cplx eval(cplx z) const;

    static TruncatedSeries zero(std::size_t order = 0);
    static TruncatedSeries one(std::size_t order = 0);
    static TruncatedSeries identity(std::size_t order = 1);

    /// Build from a coefficient rule n -> a_n.
    static TruncatedSeries from_rule(std::size_t order, const std::function<cplx(std::size_t)>& rule,
                                     double radius = 1.0, double cap = 0.0);
};

/// One evaluation of the majorant sum  sum_{n>=from} |a_n| r^n.
struct BohrValue {
    double value = 0.0;  // truncated sum
    double radius = 0.0;
    double upper = 0.0;  // value + certified tail at this radius
};

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries scale(const TruncatedSeries& s, cplx factor);

/// Cauchy product truncated at max(order_s, order_t).
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// Taylor coefficients of outer(inner(z)) up to max of the two orders.
/// Requires inner(0) = 0 (within 1e-12); throws NonSchwarzInner otherwise.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

TruncatedSeries differentiate(const TruncatedSeries& s);

/// Termwise antiderivative with constant term 0.
TruncatedSeries integrate(const TruncatedSeries& s);

/// Majorant sum at radius r starting at coefficient index from_index.
/// Throws InvalidRadius unless 0 <= r < 1.
BohrValue bohr_majorant(const TruncatedSeries& s, double r, std::size_t from_index = 0);

/// Recover Taylor coefficients of a black-box analytic evaluator by a
/// discretized Cauchy integral over K = 4*order equispaced points on
/// |z| = radius.  The tail certificate is the max-modulus estimate on the
/// sampling circle.  Throws EvaluationFailure on non-finite samples and
/// InvalidRadius unless radius is in (0,1).
TruncatedSeries extract_coefficients(const std::function<cplx(cplx)>& evaluator,
                                     double radius, std::size_t order);

/// JSON text: {"coeffs":[[re,im],...],"order":N,"tail_bound":t,"sample_radius":r}
std::string to_json(const TruncatedSeries& s);

} // namespace bohrlab
