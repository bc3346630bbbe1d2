#pragma once

#include "bohrlab/record.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bohrlab {

struct RunConfig {
    std::size_t order = 64;
    std::uint64_t seed = 42;
    std::vector<std::string> suites;
    std::string output_format = "json"; // json | csv
    std::string output_path;            // empty: stdout only
    std::map<std::string, double> tolerance_overrides;
};

struct VerificationReport {
    RunConfig config;
    std::vector<VerificationRecord> records; // sorted by name
    std::size_t passed_count = 0;
    std::size_t failed_count = 0;
    bool all_passed() const { return failed_count == 0; }
};

/// Suite names accepted by run(): theorem21, proof-trace, classical,
/// von-neumann, harmonic, radius-scan, all.
const std::vector<std::string>& known_suites();

/// Execute the requested suites.  Deterministic under a fixed config: two
/// runs serialize to identical bytes.  Throws UnknownSuite for an
/// unrecognized suite name.
VerificationReport run(const RunConfig& config);

std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

/// Writes in the configured format; throws IoFailure when the file cannot
/// be written.
void write_report(const VerificationReport& report, const std::string& path);

enum class PlotKind { bohr_vs_radius, modular_coefficients, margin_histogram };

PlotKind plot_kind_from_string(const std::string& name);

/// CSV tables for plotting; throws MissingData when the report lacks the
/// records the table needs.
std::string emit_plot_data(const VerificationReport& report, PlotKind kind);

/// The distance-density battery over the canonical domains (also reachable
/// through the `hyperbolic` CLI subcommand).
std::vector<VerificationRecord> hyperbolic_battery(std::uint64_t seed, std::size_t points_per_domain = 50);

} // namespace bohrlab
