#include "bohrlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bohrlab {

int winding_number(const std::vector<cplx>& pts, cplx p) {
    double total = 0.0;
    const std::size_t k = pts.size();
    for (std::size_t j = 0; j < k; ++j) {
        const cplx a = pts[j] - p;
        const cplx b = pts[(j + 1) % k] - p;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

double min_distance_to_polyline(const std::vector<cplx>& pts, cplx p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t k = pts.size();
    for (std::size_t j = 0; j < k; ++j) {
        const cplx a = pts[j];
        const cplx b = pts[(j + 1) % k];
        const cplx ab = b - a;
        const double len2 = std::norm(ab);
        double t = len2 > 0.0 ? std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::abs(p - (a + t * ab)));
    }
    return best;
}

ComplementDistance distance_to_complement(const std::function<cplx(cplx)>& f, cplx center,
                                          double circle_radius, std::size_t samples) {
    std::vector<cplx> pts(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
        pts[j] = f(std::polar(circle_radius, th));
    }
    ComplementDistance out;

    // The image sits inside the max-modulus circle, so anything beyond it is
    // a guaranteed complement point; that seeds the upper bound and a
    // fallback probe.
    double far = 0.0;
    std::size_t far_j = 0;
    for (std::size_t j = 0; j < samples; ++j) {
        const double d = std::abs(pts[j] - center);
        if (d > far) {
            far = d;
            far_j = j;
        }
    }
    out.upper = far * (1.0 + 1e-9) + 1e-300;
    out.nearest_boundary = pts[far_j];
    out.outside_probe = center + (pts[far_j] - center) * (1.0 + 1e-6);
    out.probe_valid = true;

    // Certified outside probes: points straddling the curve whose winding
    // stays non-positive under widening, so cusp artifacts do not qualify.
    for (std::size_t j = 0; j < samples; ++j) {
        const cplx prev = pts[(j + samples - 1) % samples];
        const cplx next = pts[(j + 1) % samples];
        const double guard = std::max(std::abs(pts[j] - prev), std::abs(next - pts[j]));
        if (std::abs(pts[j] - center) - 2.0 * guard >= out.upper) continue;
        const cplx tangent = next - prev;
        const double tlen = std::abs(tangent);
        if (tlen == 0.0) continue;
        const cplx normal = cplx{0.0, 1.0} * tangent / tlen;
        for (const double side : {1.0, -1.0}) {
            bool stable = true;
            cplx probe{};
            for (double eps = 2.0 * guard + 1e-12; eps <= 8.0 * guard + 1e-11; eps *= 2.0) {
                probe = pts[j] + side * eps * normal;
                if (min_distance_to_polyline(pts, probe) < 0.45 * eps ||
                    winding_number(pts, probe) > 0) {
                    stable = false;
                    break;
                }
            }
            if (!stable) continue;
            const double d = std::abs(probe - center);
            if (d < out.upper) {
                out.upper = d;
                out.nearest_boundary = pts[j];
                out.outside_probe = probe;
                out.probe_valid = true;
            }
        }
    }

    // Lower bound by radial coverage: walk concentric circles outward and
    // stop once a point fails to be strictly inside the sampled image.
    const int n_radii = 48;
    const int n_angles = 96;
    const double step = out.upper / static_cast<double>(n_radii);
    double covered = 0.0;
    for (int i = 1; i <= n_radii; ++i) {
        const double rho = step * static_cast<double>(i);
        bool circle_ok = true;
        for (int k = 0; k < n_angles && circle_ok; ++k) {
            const double th = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) /
                              static_cast<double>(n_angles);
            const cplx p = center + std::polar(rho, th);
            if (min_distance_to_polyline(pts, p) <= 0.0 || winding_number(pts, p) < 1)
                circle_ok = false;
        }
        if (!circle_ok) break;
        covered = rho;
    }
    out.lower = std::max(0.0, covered - step);
    out.lower = std::min(out.lower, out.upper);
    return out;
}

CircleMin min_on_circle(const std::function<cplx(cplx)>& f, cplx center, double r,
                        std::size_t samples) {
    CircleMin out;
    out.value = std::numeric_limits<double>::infinity();
    std::vector<cplx> pts(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
        const cplx z = std::polar(r, th);
        pts[j] = f(z);
        const double d = std::abs(pts[j] - center);
        if (d < out.value) {
            out.value = d;
            out.argmin = z;
        }
    }
    for (std::size_t j = 0; j < samples; ++j)
        out.mesh = std::max(out.mesh, std::abs(pts[(j + 1) % samples] - pts[j]));
    out.lower = std::max(0.0, out.value - 0.75 * out.mesh);
    out.winding_around_center = winding_number(pts, center);
    return out;
}

} // namespace bohrlab
