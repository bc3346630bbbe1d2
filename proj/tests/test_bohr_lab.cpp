#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bohrlab/bohr_lab.hpp"
#include "bohrlab/corpus.hpp"
#include "bohrlab/errors.hpp"

#include <cmath>
#include <numbers>

using namespace bohrlab;

namespace {
const double kQ = std::exp(-std::numbers::pi);
}

TEST_CASE("factorization of the identity map against a = 1, b = -1") {
    const auto f = TruncatedSeries::identity(8);
    const auto fact = h_factorize(f, cplx{1.0, 0.0}, cplx{-1.0, 0.0});
    CHECK(std::abs(fact.h.at(1) - cplx{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(fact.h.at(2) - cplx{-0.5, 0.0}) < 1e-12);
    for (std::size_t n = 3; n <= fact.h.order(); ++n) CHECK(std::abs(fact.h.at(n)) < 1e-15);

    // h1 coefficients are c_n e^{-n pi}
    for (std::size_t n = 1; n <= fact.h.order(); ++n)
        CHECK(std::abs(fact.h1.at(n) - fact.h.at(n) * std::pow(kQ, static_cast<double>(n))) < 1e-12);

    // |h1'(0)| = |(a0 - a)/(a - b)| e^{-pi}
    CHECK(std::abs(std::abs(fact.h1_prime_at_0) - 0.5 * kQ) < 1e-14);

    // the image of the unit disk under z(z-1)/(-2) reaches in to |w| = 1/2
    CHECK(fact.delta > 0.4);
    CHECK(fact.delta <= 0.5 + 1e-6);
    CHECK(fact.delta_upper >= fact.delta);

    // image of the small disk: min |h| on |z| = e^{-pi} is q(1-q)/2
    const double exact_delta1 = kQ * (1.0 - kQ) / 2.0;
    CHECK(fact.delta1 <= exact_delta1 + 1e-12);
    CHECK(fact.delta1 > exact_delta1 - 1e-4);
    CHECK(fact.delta1_upper >= exact_delta1 - 1e-12);
    CHECK(fact.inner_winding == 1);

    // both sides of the distance/derivative comparison for the univalent h1
    CHECK(fact.delta1_upper >= 0.25 * std::abs(fact.h1_prime_at_0) - 1e-9);
    CHECK(fact.delta1 <= std::abs(fact.h1_prime_at_0) + 1e-9);
}

TEST_CASE("factorization of the Koebe map against a = -1/4, b = -1") {
    const auto f = koebe_series(32);
    const auto fact = h_factorize(f, cplx{-0.25, 0.0}, cplx{-1.0, 0.0});
    CHECK(std::abs(fact.h.at(1) - cplx{-1.0 / 3.0, 0.0}) < 1e-12);
    for (std::size_t n = 2; n <= 10; ++n)
        CHECK(std::abs(fact.h.at(n) - cplx{-4.0 * static_cast<double>(n - 1) / 3.0, 0.0}) < 1e-12);
    // min over |z| = q of |h| = (q/3)(1-q)^2/(1+q)^2
    const double exact_delta1 = kQ / 3.0 * std::pow((1.0 - kQ) / (1.0 + kQ), 2.0);
    CHECK(fact.delta1_upper >= exact_delta1 - 1e-12);
    CHECK(fact.delta1 > exact_delta1 - 1e-4);
}

TEST_CASE("the corpus carries certified image geometry") {
    const auto corpus = build_corpus(32);
    REQUIRE(corpus.size() >= 9);
    for (const auto& e : corpus) {
        INFO(e.name);
        CHECK(e.dist_lower > 0.0);
        CHECK(e.dist_lower <= e.dist_upper);
        CHECK(std::abs(e.omitted_a - e.omitted_b) > 1e-12);
        // both omitted points stay clear of the sampled image center distance
        CHECK(std::abs(e.omitted_a - e.f.at(0)) >= e.dist_lower - 1e-9);
    }
    auto find = [&](const std::string& name) {
        for (const auto& e : corpus)
            if (e.name.rfind(name, 0) == 0) return e;
        throw std::runtime_error("missing corpus entry " + name);
    };
    CHECK(find("identity").dist_lower == 1.0);
    CHECK(find("koebe").dist_lower == 0.25);
    CHECK(find("strip").dist_lower == doctest::Approx(std::numbers::pi / 2.0));
    const auto exp1 = find("exp_scale1");
    CHECK(exp1.dist_lower == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    // the sampled boundary of exp(U)-1 agrees with the closed form at the center
    const auto interval = exp1.domain.distance_fn(cplx{});
    CHECK(interval.lower <= 1.0 - std::exp(-1.0) + 1e-9);
    CHECK(interval.upper >= 1.0 - std::exp(-1.0) - 1e-6);
    const auto mod05 = find("modular_r0.5");
    CHECK(mod05.dist_lower >= 0.83 * 0.25 - 1e-12);
    CHECK(mod05.dist_upper <= 0.25 + 1e-12);
}

TEST_CASE("degenerate omitted points are rejected") {
    const auto f = TruncatedSeries::identity(4);
    CHECK_THROWS_AS(h_factorize(f, cplx{1.0, 0.0}, cplx{1.0, 0.0}), DegenerateOmittedPoints);
}

TEST_CASE("a zero away from the origin is detected") {
    // f = z^2 takes the value 0.25 at z = +-0.5, so h vanishes off the origin
    TruncatedSeries f = TruncatedSeries::zero(2);
    f.coeffs[2] = 1.0;
    CHECK_THROWS_AS(h_factorize(f, cplx{0.25, 0.0}, cplx{2.0, 0.0}), ZeroDetected);
}

TEST_CASE("majorant bound: closed-form entries") {
    SUBCASE("koebe") {
        const auto rec = verify_majorant_bound("koebe", koebe_series(64), 0.25);
        const double closed = kQ / std::pow(1.0 - kQ, 2.0);
        CHECK(rec.passed);
        CHECK(std::abs(rec.lhs - closed) < 1e-9);
        CHECK(rec.rhs == doctest::Approx(0.5));
        CHECK(std::stod(rec.metadata.at("ratio_over_distance")) ==
              doctest::Approx(closed / 0.25).epsilon(1e-7));
    }
    SUBCASE("identity") {
        const auto rec = verify_majorant_bound("identity", TruncatedSeries::identity(64), 1.0);
        CHECK(rec.passed);
        CHECK(std::abs(rec.lhs - kQ) < 1e-15);
        CHECK(rec.rhs == doctest::Approx(2.0));
    }
    SUBCASE("strip") {
        const auto rec =
            verify_majorant_bound("strip", strip_series(64), std::numbers::pi / 2.0);
        // odd-term closed form: 2 atanh(q)
        const double closed = std::log((1.0 + kQ) / (1.0 - kQ));
        CHECK(rec.passed);
        CHECK(std::abs(rec.lhs - closed) < 1e-9);
        CHECK(std::stod(rec.metadata.at("ratio_over_distance")) ==
              doctest::Approx(0.05504).epsilon(1e-3));
    }
}

TEST_CASE("proof-trace chain passes on the simplest entries with positive margins") {
    const auto expansion = modular_coefficients(32);
    SUBCASE("identity") {
        const auto f = TruncatedSeries::identity(16);
        const auto fact = h_factorize(f, cplx{1.0, 0.0}, cplx{-1.0, 0.0});
        const auto records = trace_factorization_chain("identity", fact, f, expansion);
        REQUIRE(records.size() == 6);
        for (const auto& rec : records) {
            INFO(rec.name, " lhs=", rec.lhs, " rhs=", rec.rhs);
            CHECK(rec.passed);
            CHECK(rec.margin() > 0.0);
        }
    }
    SUBCASE("koebe") {
        const auto f = koebe_series(32);
        const auto fact = h_factorize(f, cplx{-0.25, 0.0}, cplx{-1.0, 0.0});
        for (const auto& rec : trace_factorization_chain("koebe", fact, f, expansion)) {
            INFO(rec.name, " lhs=", rec.lhs, " rhs=", rec.rhs);
            CHECK(rec.passed);
        }
    }
}

TEST_CASE("tampered coefficients break the trace") {
    const auto expansion = modular_coefficients(32);
    const auto f = TruncatedSeries::identity(16);
    auto fact = h_factorize(f, cplx{1.0, 0.0}, cplx{-1.0, 0.0});
    fact.h = scale(fact.h, cplx{1e3, 0.0});
    fact.h1 = scale(fact.h1, cplx{1e3, 0.0});
    std::size_t failures = 0;
    for (const auto& rec : trace_factorization_chain("tampered", fact, f, expansion))
        if (!rec.passed) ++failures;
    CHECK(failures >= 1);
}

TEST_CASE("classical Bohr bound at one third") {
    SUBCASE("disk automorphism 1/2 reproduces the closed form 0.8") {
        const auto rec =
            verify_classical_bohr("auto_half", disk_automorphism_series(cplx{0.5, 0.0}, 64));
        CHECK(rec.passed);
        CHECK(std::abs(rec.lhs - 0.8) < 1e-12);
    }
    SUBCASE("identity and constants") {
        auto rec = verify_classical_bohr("identity", TruncatedSeries::identity(8));
        CHECK(rec.passed);
        CHECK(rec.lhs == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        rec = verify_classical_bohr("constant",
                                    TruncatedSeries(std::vector<cplx>{cplx{0.99, 0.0}}));
        CHECK(rec.passed);
        CHECK(rec.lhs == doctest::Approx(0.99));
    }
    SUBCASE("the whole family stays below 1") {
        for (const auto& [name, f] : classical_bohr_family(64)) {
            const auto rec = verify_classical_bohr(name, f);
            INFO(name);
            CHECK(rec.passed);
        }
    }
}

TEST_CASE("von Neumann polynomial bound on the small disk") {
    SUBCASE("scaled identity against p(w) = w") {
        TruncatedSeries f = TruncatedSeries::zero(1);
        f.coeffs[1] = 0.9;
        const auto rec = verify_von_neumann("scaled_identity", f, 0.9, {cplx{}, cplx{1.0, 0.0}});
        CHECK(rec.passed);
        CHECK(rec.lhs == doctest::Approx(0.9 * kQ / 3.0).epsilon(1e-12));
        CHECK(rec.rhs == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("constant polynomial is an equality") {
        const auto rec = verify_von_neumann("const_poly", TruncatedSeries::identity(4), 0.5,
                                            {cplx{1.0, 0.0}});
        CHECK(rec.passed);
        CHECK(rec.lhs == doctest::Approx(1.0));
        CHECK(rec.rhs == doctest::Approx(1.0));
    }
    SUBCASE("quadratic against a disk automorphism") {
        const auto rec = verify_von_neumann(
            "auto_quadratic", disk_automorphism_series(cplx{0.5, 0.0}, 32), 0.5,
            {cplx{}, cplx{-1.0, 0.0}, cplx{1.0, 0.0}});
        CHECK(rec.passed);
        CHECK(rec.margin() > 0.0);
    }
    SUBCASE("the hypothesis d < 1 is enforced") {
        CHECK_THROWS_AS(
            verify_von_neumann("bad", TruncatedSeries::identity(4), 1.0, {cplx{1.0, 0.0}}),
            std::invalid_argument);
    }
}

TEST_CASE("harmonic pairs satisfy the four-distance bound") {
    const auto pairs = harmonic_pairs(64);
    REQUIRE(pairs.size() == 3);

    // g = integrate(mu * h') coefficient oracle for mu = z over the Koebe map:
    // [z^m] g = (m-1)^2 / m
    const auto& mu_z = pairs[1];
    for (std::size_t m = 2; m <= 12; ++m) {
        const double expect = std::pow(static_cast<double>(m - 1), 2.0) / static_cast<double>(m);
        CHECK(std::abs(mu_z.g_series.at(m) - cplx{expect, 0.0}) < 1e-12);
    }
    // mu = z^2 over the strip map: [z^m] g = h_{m-2} (m-2)/m, matching h_m for odd m
    const auto& mu_z2 = pairs[2];
    for (std::size_t m = 3; m <= 13; m += 2)
        CHECK(std::abs(mu_z2.g_series.at(m) - cplx{2.0 / static_cast<double>(m), 0.0}) < 1e-12);

    for (const auto& pair : pairs) {
        const auto rec = verify_harmonic(pair);
        INFO(pair.name);
        CHECK(rec.passed);
        CHECK(std::stod(rec.metadata.at("mg_le_mh_min_margin")) >= -1e-12);
        CHECK(std::stod(rec.metadata.at("mg_at_work_radius")) < 2.0 * pair.dist);
    }

    SUBCASE("dilatation must vanish at the origin") {
        CHECK_THROWS_AS(
            make_harmonic_pair("bad", koebe_series(8), TruncatedSeries::one(1), 0.25),
            NonSchwarzInner);
    }
}

TEST_CASE("the zero-dilatation pair reduces to the analytic bound") {
    const auto pair = harmonic_pairs(32).front();
    CHECK(bohr_majorant(pair.g_series, 0.3, 0).upper == 0.0);
    const auto rec = verify_harmonic(pair);
    CHECK(rec.passed);
}

TEST_CASE("Bohr radius scan clears the universal threshold") {
    SUBCASE("identity alone scans far past the threshold") {
        const auto res = bohr_radius_scan({{TruncatedSeries::identity(32), 1.0}});
        CHECK(res.reaches_threshold);
        CHECK(res.r_star > 0.9);
    }
    SUBCASE("disk automorphisms stop near the closed-form cutoff 0.8") {
        std::vector<std::pair<TruncatedSeries, double>> family;
        for (const cplx c : {cplx{0.5, 0.0}, cplx{0.0, 0.3}, cplx{-0.4, 0.2}})
            family.emplace_back(disk_automorphism_series(c, 64), 1.0 - std::abs(c));
        const auto res = bohr_radius_scan(family);
        CHECK(res.reaches_threshold);
        CHECK(std::abs(res.r_star - 0.8) < 0.011);
    }
    SUBCASE("an empty family is rejected") {
        CHECK_THROWS_AS(bohr_radius_scan({}), std::invalid_argument);
    }
}
