#include "bohrlab/bohr_lab.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/modular.hpp"
#include "bohrlab/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

namespace {

using bohrlab::cplx;
using json = nlohmann::json;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bohrlab::IoFailure("cannot open " + path);
    out << text;
    if (!out) throw bohrlab::IoFailure("failed writing " + path);
}

int run_verify(const bohrlab::RunConfig& config) {
    const auto report = bohrlab::run(config);
    if (!config.output_path.empty()) {
        bohrlab::write_report(report, config.output_path);
        if (config.output_format != "csv") // keep the margin table next to the JSON report
            write_text(config.output_path + ".margins.csv", bohrlab::report_to_csv(report));
        std::cout << "passed " << report.passed_count << " failed " << report.failed_count << "\n";
    } else {
        std::cout << (config.output_format == "csv" ? bohrlab::report_to_csv(report)
                                                    : bohrlab::report_to_json(report));
    }
    return report.all_passed() ? 0 : 1;
}

int run_modular(std::size_t order, std::size_t count, const std::string& out_path) {
    json j;
    const auto expansion = bohrlab::modular_coefficients(order);
    auto& coeffs = j["m_coeffs"] = json::array();
    for (std::size_t n = 0; n <= std::min(count, expansion.order()); ++n)
        coeffs.push_back(expansion.at(n));
    j["series"] = json::parse(bohrlab::to_json(expansion.minus_j_minus_series()));

    const double q = bohrlab::working_radius();
    const cplx at_q = bohrlab::eval_j(cplx{q, 0.0});
    const cplx at_minus_q = bohrlab::eval_j(cplx{-q, 0.0});
    j["constants"]["j_at_work_radius"] = {at_q.real(), at_q.imag()};
    j["constants"]["residual_vs_half"] = std::abs(at_q - cplx{0.5, 0.0});
    j["constants"]["abs_j_at_minus_work_radius"] = std::abs(at_minus_q);
    j["constants"]["residual_vs_one"] = std::abs(std::abs(at_minus_q) - 1.0);
    j["constants"]["univalence_radius_alpha_at_0.26"] = bohrlab::univalence_radius_alpha_for(0.26);

    auto& scan = j["max_modulus_scan"] = json::array();
    for (int i = 1; i <= 20; ++i) {
        const double r = q * static_cast<double>(i) / 20.0;
        const auto res = bohrlab::max_modulus_on_circle(r, 720);
        scan.push_back({{"r", r},
                        {"max", res.max_value},
                        {"argmax_at_minus_r", res.argmax_at_minus_r},
                        {"residual", res.residual}});
    }
    const std::string text = j.dump(2) + "\n";
    if (!out_path.empty())
        write_text(out_path, text);
    else
        std::cout << text;
    return 0;
}

int run_hyperbolic(std::uint64_t seed, std::size_t points, const std::string& format,
                   const std::string& out_path) {
    bohrlab::VerificationReport report;
    report.config.seed = seed;
    report.config.output_format = format;
    report.records = bohrlab::hyperbolic_battery(seed, points);
    for (const auto& r : report.records) (r.passed ? report.passed_count : report.failed_count)++;
    const std::string text =
        format == "csv" ? bohrlab::report_to_csv(report) : bohrlab::report_to_json(report);
    if (!out_path.empty()) {
        write_text(out_path, text);
        std::cout << "passed " << report.passed_count << " failed " << report.failed_count << "\n";
    } else {
        std::cout << text;
    }
    return report.failed_count == 0 ? 0 : 1;
}

int run_plot(const bohrlab::RunConfig& config, const std::string& kind, const std::string& out_path) {
    const auto report = bohrlab::run(config);
    const std::string table = bohrlab::emit_plot_data(report, bohrlab::plot_kind_from_string(kind));
    if (!out_path.empty())
        write_text(out_path, table);
    else
        std::cout << table;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bohrlab: numerical certification of majorant-series, modular-function and "
                 "hyperbolic-metric inequalities"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file with a [SUBCOMMAND] section; flags win");

    bohrlab::RunConfig config;
    std::vector<std::string> suites;
    std::vector<std::string> tolerances;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--order", config.order, "series truncation order (>= 8)")->capture_default_str();
        cmd->add_option("--seed", config.seed, "seed for randomized sampling")->capture_default_str();
    };

    auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
    add_common(verify);
    verify->add_option("--suite", suites,
                       "suite name (theorem21, proof-trace, classical, von-neumann, harmonic, "
                       "radius-scan, all); repeatable");
    verify->add_option("--format", config.output_format, "json or csv")->capture_default_str();
    verify->add_option("--out", config.output_path, "write the report to this path");
    verify->add_option("--tolerance", tolerances, "NAME=VALUE tolerance override; repeatable");

    std::size_t modular_count = 16;
    std::string modular_out;
    auto* modular = app.add_subcommand("modular", "modular function constants and coefficients");
    add_common(modular);
    modular->add_option("--count", modular_count, "how many coefficients to print")->capture_default_str();
    modular->add_option("--out", modular_out, "write JSON here instead of stdout");

    std::size_t hyp_points = 50;
    std::string hyp_format = "json";
    std::string hyp_out;
    auto* hyperbolic = app.add_subcommand("hyperbolic", "distance-density inequality battery");
    add_common(hyperbolic);
    hyperbolic->add_option("--points", hyp_points, "sample points per domain")->capture_default_str();
    hyperbolic->add_option("--format", hyp_format, "json or csv")->capture_default_str();
    hyperbolic->add_option("--out", hyp_out, "write the margin table here");

    std::string plot_kind;
    std::string plot_out;
    auto* plot = app.add_subcommand("plot", "emit plot-ready CSV tables");
    add_common(plot);
    plot->add_option("--kind", plot_kind,
                     "bohr-vs-radius, modular-coefficients or margin-histogram")->required();
    plot->add_option("--suite", suites, "suites feeding the report; defaults to all");
    plot->add_option("--out", plot_out, "write the table here");

    CLI11_PARSE(app, argc, argv);

    try {
        config.suites = suites.empty() ? std::vector<std::string>{"all"} : suites;
        for (const auto& t : tolerances) {
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("tolerance override must look like NAME=VALUE");
            config.tolerance_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
        }
        if (verify->parsed()) return run_verify(config);
        if (modular->parsed()) return run_modular(config.order, modular_count, modular_out);
        if (hyperbolic->parsed()) return run_hyperbolic(config.seed, hyp_points, hyp_format, hyp_out);
        if (plot->parsed()) return run_plot(config, plot_kind, plot_out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
