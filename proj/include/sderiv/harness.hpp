#pragma once

#include <cstdint>
#include <vector>

#include "sderiv/catalog.hpp"
#include "sderiv/grid.hpp"
#include "sderiv/report.hpp"

namespace sderiv {

struct RunConfig {
    std::uint64_t seed = 42;
    double step = 1e-5;
    double fd_tol = 1e-6;
    double exact_tol = 1e-10;
    double r_band = 1e-6;
    std::vector<double> schedule = {1e-2, 1e-3, 1e-4, 1e-5};
    GridSpec grid;
    bool include_traces = false;
};

/// Runs every check over every catalog entry on the configured grid and
/// assembles the report. Rows are emitted in (function, grid index, check)
/// order; domain errors become skipped-with-reason records; the run is a
/// pure function of (catalog, config).
Report run(const std::vector<CatalogEntry>& catalog, const RunConfig& cfg);

} // namespace sderiv
