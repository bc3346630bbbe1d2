#pragma once

#include "bohrlab/record.hpp"
#include "bohrlab/series.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace bohrlab {

enum class DomainKind {
    unit_disk,
    half_plane,
    strip,
    slit_plane,
    disk_with_center_radius,
    twice_punctured_plane,
    punctured_disk,
    sampled_image,
};

struct DistanceInterval {
    double lower = 0.0;
    double upper = 0.0;
};

/// A hyperbolic image domain: two omitted points where known, a distance to
/// the boundary (exact for the canonical kinds, an interval from boundary
/// samples otherwise) and the exact metric density where a closed form
/// exists.
struct DomainSpec {
    DomainKind kind = DomainKind::unit_disk;
    std::string label;
    bool simply_connected = false;
    std::optional<std::pair<cplx, cplx>> omitted_points;
    std::function<DistanceInterval(cplx)> distance_fn;
    std::function<double(cplx)> density_fn; // empty when only reachable via a cover
};

struct CoveringMap {
    std::string label;
    std::function<cplx(cplx)> evaluator;
    std::function<cplx(cplx)> derivative;
    DomainSpec target;
    bool univalent = false;
};

/// 1 / (1 - |z|^2); throws DomainError for |z| >= 1.
double density_unit_disk(cplx z);

/// Density of the covered domain at F(z): 1 / (|F'(z)| (1 - |z|^2)).
/// Throws ZeroDerivative when F'(z) vanishes.
double pushforward_density(const CoveringMap& cover, cplx z);

/// d(w, boundary) * density(w) <= 1, and >= 1/4 when simply connected.
VerificationRecord check_distance_density(const DomainSpec& domain, cplx w,
                                          std::optional<double> density_override = std::nullopt);

/// d(F(z), boundary) <= |F'(z)|(1-|z|^2); the quarter lower bound is added
/// when the cover is univalent.
VerificationRecord check_koebe_bounds(const CoveringMap& cover, cplx z);

// Canonical covers; each carries its target DomainSpec.
CoveringMap cover_identity();
CoveringMap cover_disk_automorphism(cplx c);
CoveringMap cover_cayley();
CoveringMap cover_koebe();
CoveringMap cover_strip_log();
CoveringMap cover_punctured_disk();                 // exp((z+1)/(z-1)), infinite deck group
CoveringMap cover_twice_punctured_plane(cplx a, cplx b);
CoveringMap cover_exp_image();                      // exp on U; sampled-boundary target

std::vector<CoveringMap> canonical_covers();

} // namespace bohrlab
