#include <doctest.h>

#include <map>
#include <set>

#include <json.hpp>

#include "sderiv/harness.hpp"
#include "sderiv/report.hpp"

using namespace sderiv;

namespace {

RunConfig reduced_config() {
    RunConfig cfg;
    cfg.seed = 42;
    cfg.grid = parse_grid_spec("box=-1:1:3,axis=5,random=12");
    return cfg;
}

} // namespace

TEST_CASE("an empty catalog yields an empty, successful report") {
    const Report report = run({}, reduced_config());
    CHECK(report.rows.empty());
    CHECK(report.skips.empty());
    CHECK(report.functions.empty());
    CHECK(report.violations == 0);
    CHECK(report.ok());
}

TEST_CASE("builtin catalog meets every expectation on a reduced grid") {
    const RunConfig cfg = reduced_config();
    const Report report = run(builtin_catalog(cfg.seed), cfg);

    for (const FunctionSummary& s : report.functions) {
        INFO(s.name, ": ", s.detail);
        CHECK(s.expectation_met);
    }
    CHECK(report.violations == 0);
    CHECK(report.ok());
}

TEST_CASE("two identical runs serialize byte for byte") {
    const RunConfig cfg = reduced_config();
    const auto catalog = builtin_catalog(cfg.seed);
    const std::string a = to_json(run(catalog, cfg));
    const std::string b = to_json(run(builtin_catalog(cfg.seed), cfg));
    CHECK(a == b);

    RunConfig other = cfg;
    other.seed = 43;
    const std::string c = to_json(run(builtin_catalog(other.seed), other));
    CHECK(a != c);
}

TEST_CASE("every grid point becomes a row or a skip, per check family") {
    const RunConfig cfg = reduced_config();
    const auto catalog = builtin_catalog(cfg.seed);
    const Report report = run(catalog, cfg);
    const std::size_t grid_size = generate_grid(cfg.grid, cfg.seed).size();

    // check family -> skip record check name
    const std::map<std::string, std::string> families{
        {"characteristic", "characteristic"},
        {"parallel-agreement", "sufficiency"},
        {"fueter-decomposition", "fueter-decomposition"},
    };

    for (const CatalogEntry& entry : catalog) {
        for (const auto& [row_check, skip_check] : families) {
            std::size_t rows = 0, skips = 0;
            for (const ReportRow& r : report.rows) {
                if (r.function == entry.name && r.check == row_check) ++rows;
            }
            for (const SkipRecord& s : report.skips) {
                if (s.function == entry.name && s.check == skip_check) ++skips;
            }
            INFO(entry.name, " / ", row_check);
            CHECK(rows + skips == grid_size);
        }
    }

    // series-backed entries get one slice-criterion row triple per covered point
    for (const CatalogEntry& entry : catalog) {
        if (!entry.series) continue;
        std::size_t angle = 0, skips = 0;
        for (const ReportRow& r : report.rows) {
            if (r.function == entry.name && r.check == "slice-criterion-angle") ++angle;
        }
        for (const SkipRecord& s : report.skips) {
            if (s.function == entry.name && s.check == "slice-criterion") ++skips;
        }
        CHECK(angle + skips == grid_size);
    }
}

TEST_CASE("the slice direction entry skips the real axis with a reason") {
    const RunConfig cfg = reduced_config();
    const Report report = run(builtin_catalog(cfg.seed), cfg);
    std::size_t iota_axis_skips = 0;
    for (const SkipRecord& s : report.skips) {
        if (s.function == "iota" && s.point.vector_norm() == 0.0) {
            ++iota_axis_skips;
            CHECK_FALSE(s.reason.empty());
        }
    }
    // 5 axis points, at least {characteristic, sufficiency} families each
    CHECK(iota_axis_skips >= 10);
}

TEST_CASE("report JSON carries config echo and function summaries") {
    const RunConfig cfg = reduced_config();
    const Report report = run(builtin_catalog(cfg.seed), cfg);
    const nlohmann::json j = nlohmann::json::parse(to_json(report));

    CHECK(j["config"]["seed"] == 42);
    CHECK(j["config"]["grid"] == format_grid_spec(cfg.grid));
    CHECK(j["summary"]["ok"] == true);
    CHECK(j["summary"]["violations"] == 0);
    CHECK(j["functions"].size() == builtin_catalog(cfg.seed).size());
    CHECK(j["rows"].size() == report.rows.size());
    for (const auto& f : j["functions"]) {
        CHECK(f["expectation_met"] == true);
    }
}

TEST_CASE("CSV export is one line per row plus header") {
    const RunConfig cfg = reduced_config();
    Report report = run(builtin_catalog(cfg.seed), cfg);
    const std::string csv = to_csv(report);
    const std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == report.rows.size() + 1);
    CHECK(csv.rfind("function,point_index,point,check,residual,tolerance,pass,mandatory,note",
                    0) == 0);
}

TEST_CASE("convergence traces appear in notes when requested") {
    RunConfig cfg = reduced_config();
    cfg.grid = parse_grid_spec("box=-1:1:2,axis=2,random=2");
    cfg.include_traces = true;
    const Report with = run({builtin_catalog(cfg.seed)[3]}, cfg);
    bool any_trace = false;
    for (const ReportRow& r : with.rows) {
        if (r.check == "convergence" && r.note.rfind("trace", 0) == 0) any_trace = true;
    }
    CHECK(any_trace);
}

TEST_CASE("points beyond a series radius are skipped with a reason") {
    RunConfig cfg;
    cfg.seed = 42;
    // random points in a ball of radius 5 can land outside the exponential
    // entry's ball of radius 4
    cfg.grid = parse_grid_spec("box=-1:1:2,axis=3,random=40,rradius=5");

    auto catalog = builtin_catalog(cfg.seed);
    std::vector<CatalogEntry> exp_only;
    for (auto& e : catalog) {
        if (e.name == "exp") exp_only.push_back(std::move(e));
    }
    REQUIRE(exp_only.size() == 1);

    const Report report = run(exp_only, cfg);
    bool any_outside_skip = false;
    for (const SkipRecord& s : report.skips) {
        if (s.point.norm() >= 4.0) {
            any_outside_skip = true;
            CHECK(s.reason.find("radius") != std::string::npos);
        }
    }
    CHECK(any_outside_skip);
    // outside points never become rows
    for (const ReportRow& r : report.rows) CHECK(r.point.norm() < 4.0);
    CHECK(report.functions.front().expectation_met);
}

TEST_CASE("a wrong expectation is reported as a violation") {
    const RunConfig cfg = reduced_config();
    auto catalog = builtin_catalog(cfg.seed);
    CatalogEntry wrong = catalog.front(); // pow0 is regular everywhere
    wrong.name = "pow0-mislabeled";
    wrong.expectation = Expectation::NotSDerivable;
    const Report report = run({wrong}, cfg);
    CHECK(report.violations == 1);
    CHECK_FALSE(report.ok());
    REQUIRE(report.functions.size() == 1);
    CHECK_FALSE(report.functions.front().expectation_met);
}
