#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sderiv/catalog.hpp"
#include "sderiv/harness.hpp"
#include "sderiv/power_series.hpp"
#include "sderiv/report.hpp"

namespace {

std::string series_stem(const std::string& path) {
    std::size_t start = path.find_last_of("/\\");
    start = (start == std::string::npos) ? 0 : start + 1;
    std::size_t end = path.rfind('.');
    if (end == std::string::npos || end <= start) end = path.size();
    return path.substr(start, end - start);
}

std::vector<sderiv::CatalogEntry> select_catalog(const std::vector<std::string>& names,
                                                 std::uint64_t seed) {
    std::vector<sderiv::CatalogEntry> builtin = sderiv::builtin_catalog(seed);
    if (names.empty()) return builtin;

    std::vector<sderiv::CatalogEntry> selected;
    for (const std::string& name : names) {
        if (name.rfind("series:", 0) == 0) {
            const std::string path = name.substr(7);
            sderiv::PowerSeries series = sderiv::PowerSeries::load_file(path);
            const std::string entry_name = series_stem(path);
            selected.push_back({entry_name, series.as_qfunction(entry_name),
                                sderiv::Expectation::SDerivable, std::nullopt, std::move(series),
                                "series loaded from " + path});
            continue;
        }
        bool found = false;
        for (const sderiv::CatalogEntry& e : builtin) {
            if (e.name == name) {
                selected.push_back(e);
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("unknown function: " + name);
    }
    return selected;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for quaternionic slice derivatives"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run the verification suite over a function catalog");
    std::vector<std::string> functions;
    std::string grid_text;
    std::string report_path;
    std::string csv_path;
    sderiv::RunConfig cfg;

    check->add_option("--function", functions,
                      "builtin function name or series:<path>; repeatable (default: all builtin)");
    check->add_option("--grid", grid_text,
                      "grid spec, e.g. box=-1.5:1.5:5,axis=25,random=100,rradius=2,rband=1e-6");
    check->add_option("--step", cfg.step, "finite-difference step")->check(CLI::PositiveNumber);
    check->add_option("--tol", cfg.fd_tol, "residual tolerance for finite-difference checks")
        ->check(CLI::PositiveNumber);
    check->add_option("--seed", cfg.seed, "seed for grids, probe directions and catalog coefficients");
    check->add_option("--report", report_path, "write the JSON report to this path");
    check->add_option("--csv", csv_path, "write the flat CSV row export to this path");
    check->add_flag("--trace", cfg.include_traces, "include convergence traces in report notes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!grid_text.empty()) cfg.grid = sderiv::parse_grid_spec(grid_text);
        const std::vector<sderiv::CatalogEntry> catalog = select_catalog(functions, cfg.seed);

        const sderiv::Report report = sderiv::run(catalog, cfg);

        std::printf("%-10s %-16s %6s %6s %6s %6s  %s\n", "function", "expectation", "rows",
                    "fail", "skip", "met", "detail");
        for (const sderiv::FunctionSummary& s : report.functions) {
            std::printf("%-10s %-16s %6zu %6zu %6zu %6s  %s\n", s.name.c_str(),
                        s.expectation.c_str(), s.rows, s.failed, s.skipped,
                        s.expectation_met ? "yes" : "NO", s.detail.c_str());
        }
        std::printf("expectation violations: %zu\n", report.violations);

        if (!report_path.empty()) write_file(report_path, sderiv::to_json(report));
        if (!csv_path.empty()) write_file(csv_path, sderiv::to_csv(report));

        return report.ok() ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
