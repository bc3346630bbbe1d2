// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned here.
#include "bohrlab/bohr_lab.hpp"
#include "bohrlab/corpus.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/hyperbolic.hpp"
#include "bohrlab/modular.hpp"
#include "bohrlab/report.hpp"
#include "bohrlab/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace bohrlab;

const double kQ = std::exp(-std::numbers::pi);
int g_failures = 0;

void report(int index, const std::string& title, bool ok, const std::string& detail = "") {
    std::printf("[%s] A%02d %s%s%s\n", ok ? "PASS" : "FAIL", index, title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void a01_modular_constants() {
    const auto t0 = std::chrono::steady_clock::now();
    const double r_half = std::abs(eval_j(cplx{kQ, 0.0}) - cplx{0.5, 0.0});
    const double r_one = std::abs(std::abs(eval_j(cplx{-kQ, 0.0})) - 1.0);
    const double elapsed = seconds_since(t0);
    report(1, "modular constants at e^{-pi}", r_half < 1e-10 && r_one < 1e-10 && elapsed < 1.0,
           "residuals " + std::to_string(r_half) + ", " + std::to_string(r_one) + "; " +
               std::to_string(elapsed) + " s");
}

void a02_expansion_positivity() {
    const auto expansion = modular_coefficients(64);
    bool ok = expansion.at(0) == 16.0;
    for (std::size_t n = 0; n <= 64; ++n) ok = ok && expansion.at(n) > 0.0;
    const auto extracted = extract_coefficients([](cplx w) { return -eval_j(-w); }, 0.3, 16);
    double worst_rel = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const double rel =
            std::abs(extracted.at(n + 1).real() - expansion.at(n)) / expansion.at(n);
        worst_rel = std::max(worst_rel, rel);
    }
    report(2, "expansion positive with oracle-matched head", ok && worst_rel < 1e-9,
           "worst relative " + std::to_string(worst_rel));
}

void a03_max_modulus() {
    bool ok = true;
    for (int i = 1; i <= 20; ++i) {
        const auto res = max_modulus_on_circle(kQ * static_cast<double>(i) / 20.0, 720);
        ok = ok && res.argmax_at_minus_r && res.residual < 1e-9;
    }
    const auto at_q = max_modulus_on_circle(kQ, 720);
    ok = ok && std::abs(at_q.max_value - 1.0) < 1e-9;
    report(3, "circle maxima at the negative real point", ok);
}

void a04_majorant_bound() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto corpus = build_corpus(64);
    bool ok = corpus.size() >= 9;
    double koebe_err = 1.0;
    for (const auto& e : corpus) {
        const auto rec = verify_majorant_bound(e.name, e.f, e.dist_lower);
        ok = ok && rec.passed;
        if (e.name == "koebe")
            koebe_err = std::abs(rec.lhs - kQ / std::pow(1.0 - kQ, 2.0));
    }
    const double elapsed = seconds_since(t0);
    ok = ok && koebe_err < 1e-9 && elapsed < 5.0;
    report(4, "majorant bound over the corpus", ok,
           "koebe closed-form error " + std::to_string(koebe_err) + "; " +
               std::to_string(elapsed) + " s");
}

void a05_proof_trace() {
    RunConfig config;
    config.suites = {"proof-trace"};
    const auto rep = run(config);
    bool ok = !rep.records.empty();
    bool selftest_seen = false;
    for (const auto& rec : rep.records) {
        ok = ok && rec.passed;
        if (rec.name == "trace/selftest/tamper_detected") selftest_seen = true;
    }
    report(5, "proof-trace inequalities and tamper self-test", ok && selftest_seen,
           std::to_string(rep.records.size()) + " records");
}

void a06_classical() {
    bool ok = true;
    double half_case = -1.0;
    for (const auto& [name, f] : classical_bohr_family(64)) {
        const auto rec = verify_classical_bohr(name, f);
        ok = ok && rec.passed;
        if (name.rfind("automorphism_0.5", 0) == 0) half_case = rec.lhs;
    }
    ok = ok && std::abs(half_case - 0.8) < 1e-12;
    report(6, "classical Bohr bound at one third", ok,
           "automorphism(1/2) majorant " + std::to_string(half_case));
}

void a07_von_neumann() {
    RunConfig config;
    config.suites = {"von-neumann"};
    const auto rep = run(config);
    bool ok = rep.records.size() >= 5 && rep.failed_count == 0;
    ok = ok && std::abs(kQ / 3.0 - 1.4405e-2) < 1e-6;
    report(7, "von Neumann bound on |z| <= e^{-pi}/3", ok,
           std::to_string(rep.records.size()) + " records, grid radius " +
               std::to_string(kQ / 3.0));
}

void a08_harmonic() {
    const auto pairs = harmonic_pairs(64);
    bool ok = pairs.size() == 3;
    for (const auto& pair : pairs) {
        const auto rec = verify_harmonic(pair);
        ok = ok && rec.passed && rec.extra_ok;
    }
    report(8, "harmonic majorant bound with intermediates", ok);
}

void a09_hyperbolic() {
    const auto records = hyperbolic_battery(42, 50);
    bool ok = !records.empty();
    for (const auto& rec : records) ok = ok && rec.passed;
    const auto tight = check_koebe_bounds(cover_koebe(), cplx{});
    ok = ok && std::abs(tight.lhs - 0.25) < 1e-12 && std::abs(tight.rhs - 1.0) < 1e-12 &&
         tight.passed;
    report(9, "distance-density battery with Koebe tightness", ok,
           std::to_string(records.size()) + " records");
}

void a10_univalence_radius() {
    const double at_pi = univalence_radius(std::numbers::pi);
    const double direct = 1.0 + std::numbers::pi -
                          std::sqrt(std::pow(1.0 + std::numbers::pi, 2.0) - 1.0);
    bool ok = std::abs(at_pi - direct) < 1e-9 && at_pi > kQ;
    double prev = univalence_radius(0.05);
    for (int i = 1; i <= 100; ++i) {
        const double rho = univalence_radius(0.05 + 9.95 * static_cast<double>(i) / 100.0);
        ok = ok && rho < prev;
        prev = rho;
    }
    const double threshold = univalence_radius_alpha_for(0.26);
    const double closed = (1.0 + 0.26 * 0.26) / (2.0 * 0.26) - 1.0;
    ok = ok && std::abs(threshold - closed) < 1e-7;
    report(10, "univalence radius formula and 0.26 threshold", ok,
           "rho(pi) = " + std::to_string(at_pi) + ", threshold alpha = " +
               std::to_string(threshold));
}

void a11_determinism() {
    RunConfig config;
    config.suites = {"all"};
    config.seed = 42;
    const auto first = report_to_json(run(config));
    const auto second = report_to_json(run(config));
    report(11, "seeded runs serialize to identical bytes", !first.empty() && first == second,
           std::to_string(first.size()) + " bytes");
}

} // namespace

int main() {
    a01_modular_constants();
    a02_expansion_positivity();
    a03_max_modulus();
    a04_majorant_bound();
    a05_proof_trace();
    a06_classical();
    a07_von_neumann();
    a08_harmonic();
    a09_hyperbolic();
    a10_univalence_radius();
    a11_determinism();
    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
