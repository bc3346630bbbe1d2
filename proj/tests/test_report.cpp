#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bohrlab/errors.hpp"
#include "bohrlab/report.hpp"

#include <sstream>
#include <string>

using namespace bohrlab;

namespace {
RunConfig config_for(std::vector<std::string> suites) {
    RunConfig c;
    c.suites = std::move(suites);
    return c;
}
} // namespace

TEST_CASE("classical suite emits a passing report") {
    const auto report = run(config_for({"classical"}));
    CHECK(report.records.size() >= 3);
    CHECK(report.failed_count == 0);
    CHECK(report.all_passed());
    for (const auto& rec : report.records) CHECK(rec.name.rfind("classical/", 0) == 0);
}

TEST_CASE("unknown and empty suite lists are rejected") {
    CHECK_THROWS_AS(run(config_for({"bogus"})), UnknownSuite);
    CHECK_THROWS_AS(run(config_for({})), UnknownSuite);
    auto c = config_for({"classical"});
    c.order = 4;
    CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("fixed seed reports are byte-identical") {
    auto c = config_for({"classical", "harmonic", "radius-scan"});
    c.seed = 42;
    const auto a = report_to_json(run(c));
    const auto b = report_to_json(run(c));
    CHECK(a == b);
}

TEST_CASE("tolerance overrides rewire the pass verdict") {
    auto c = config_for({"classical"});
    c.tolerance_overrides["classical/identity"] = -1.0; // force lhs <= rhs - 1
    const auto report = run(c);
    bool found = false;
    for (const auto& rec : report.records) {
        if (rec.name == "classical/identity") {
            found = true;
            CHECK_FALSE(rec.passed);
            CHECK(rec.tolerance == -1.0);
        }
    }
    CHECK(found);
    CHECK(report.failed_count == 1);
}

TEST_CASE("records arrive sorted with the schema fields populated") {
    const auto report = run(config_for({"classical", "harmonic"}));
    for (std::size_t i = 1; i < report.records.size(); ++i)
        CHECK(report.records[i - 1].name < report.records[i].name);
    const auto text = report_to_json(report);
    for (const char* key : {"\"name\"", "\"lhs\"", "\"rhs\"", "\"margin\"", "\"passed\"",
                            "\"summary\"", "\"records\"", "\"config\""})
        CHECK(text.find(key) != std::string::npos);
    const auto csv = report_to_csv(report);
    CHECK(csv.rfind("name,lhs,rhs,margin,passed\n", 0) == 0);
}

TEST_CASE("plot tables") {
    const auto report = run(config_for({"classical"}));
    SUBCASE("modular coefficients start at 16") {
        const auto table = emit_plot_data(report, PlotKind::modular_coefficients);
        CHECK(table.rfind("n,M_n\n0,16\n", 0) == 0);
    }
    SUBCASE("identity majorant equals the radius") {
        const auto table = emit_plot_data(report, PlotKind::bohr_vs_radius);
        std::istringstream in(table);
        std::string line;
        std::getline(in, line);
        CHECK(line == "function,r,majorant");
        bool any = false;
        while (std::getline(in, line)) {
            if (line.rfind("identity,", 0) != 0) continue;
            any = true;
            const auto c1 = line.find(',');
            const auto c2 = line.find(',', c1 + 1);
            CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) ==
                  doctest::Approx(std::stod(line.substr(c2 + 1))).epsilon(1e-14));
        }
        CHECK(any);
    }
    SUBCASE("margin histogram covers every record") {
        const auto table = emit_plot_data(report, PlotKind::margin_histogram);
        std::istringstream in(table);
        std::string line;
        std::getline(in, line);
        CHECK(line == "bin_lo,bin_hi,count");
        std::size_t total = 0;
        while (std::getline(in, line)) {
            const auto last = line.rfind(',');
            total += std::stoul(line.substr(last + 1));
        }
        CHECK(total == report.records.size());
    }
    SUBCASE("an empty report has nothing to plot") {
        VerificationReport empty;
        CHECK_THROWS_AS(emit_plot_data(empty, PlotKind::modular_coefficients), MissingData);
    }
    SUBCASE("plot kinds parse by name") {
        CHECK(plot_kind_from_string("bohr-vs-radius") == PlotKind::bohr_vs_radius);
        CHECK_THROWS_AS(plot_kind_from_string("nope"), std::invalid_argument);
    }
}

TEST_CASE("report files hit the disk or fail loudly") {
    const auto report = run(config_for({"classical"}));
    CHECK_THROWS_AS(write_report(report, "/nonexistent-dir/report.json"), IoFailure);
}
