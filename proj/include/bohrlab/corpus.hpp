#pragma once

#include "bohrlab/hyperbolic.hpp"
#include "bohrlab/modular.hpp"
#include "bohrlab/series.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bohrlab {

/// A test function mapping the unit disk onto a domain omitting at least two
/// finite points, with its image geometry certified (exactly where the
/// geometry has a closed form, by boundary sampling otherwise).
struct CorpusEntry {
    std::string name;
    TruncatedSeries f;
    std::function<cplx(cplx)> eval; // exact evaluator, used for image sampling
    DomainSpec domain;
    cplx omitted_a{}; // nearest point of the complement to f(0)
    cplx omitted_b{};
    double dist_lower = 0.0; // d(f(0), boundary of the image)
    double dist_upper = 0.0;
    bool dist_exact = false;
    bool univalent = false;
    bool von_neumann_eligible = false; // dist < 1
};

/// The standard corpus at the given truncation order: identity, three disk
/// automorphisms, the Koebe map, the strip map, two scaled modular maps and
/// two exponential maps.
std::vector<CorpusEntry> build_corpus(std::size_t order = 64);

/// Self-maps of the disk with sup norm < 1 for the classical Bohr check:
/// the disk automorphisms, their squares, the identity and a constant.
std::vector<std::pair<std::string, TruncatedSeries>> classical_bohr_family(std::size_t order = 64);

TruncatedSeries koebe_series(std::size_t order);
TruncatedSeries strip_series(std::size_t order);
TruncatedSeries disk_automorphism_series(cplx c, std::size_t order);

/// amp * J(r z) with boundary-sampled image geometry; shared by the corpus
/// and by the radius-scan family with common omitted points.
CorpusEntry make_modular_entry(double r, double amp, std::size_t order,
                               const ModularExpansion& expansion);

} // namespace bohrlab
