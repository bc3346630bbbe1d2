#pragma once

#include "bohrlab/series.hpp"

#include <functional>

namespace bohrlab {

/// Winding number of the closed polyline pts[0..K-1] (wrapping) around p.
int winding_number(const std::vector<cplx>& pts, cplx p);

double min_distance_to_polyline(const std::vector<cplx>& pts, cplx p);

/// Distance from `center` to the complement of f({|z| < circle_radius}),
/// read off the sampled image curve f(circle): a point off the curve is
/// covered iff its winding number is positive, and the nearest point of the
/// complement lies on a stretch of curve adjacent to a non-covered side.
struct ComplementDistance {
    double lower = 0.0;     // certified up to mesh resolution
    double upper = 0.0;
    cplx nearest_boundary{};
    cplx outside_probe{};   // winding <= 0 point near the minimum
    bool probe_valid = false;
};

ComplementDistance distance_to_complement(const std::function<cplx(cplx)>& f, cplx center,
                                          double circle_radius = 0.999,
                                          std::size_t samples = 2048);

/// Min of |f(z) - center| over |z| = r, with the sample mesh recorded so
/// callers can take the certified side they need.
struct CircleMin {
    double value = 0.0;  // overestimates the true minimum
    double lower = 0.0;  // value minus the mesh correction
    cplx argmin{};
    double mesh = 0.0;   // max adjacent image-sample gap
    int winding_around_center = 0;
};

CircleMin min_on_circle(const std::function<cplx(cplx)>& f, cplx center, double r,
                        std::size_t samples = 2048);

} // namespace bohrlab
