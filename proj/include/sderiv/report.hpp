#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sderiv/quaternion.hpp"

namespace sderiv {

struct ReportRow {
    std::string function;
    std::size_t point_index = 0;
    Quaternion point;
    std::string check;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool mandatory = true;
    std::string note;
};

struct SkipRecord {
    std::string function;
    std::size_t point_index = 0;
    Quaternion point;
    std::string check;
    std::string reason;
};

struct FunctionSummary {
    std::string name;
    std::string expectation;
    std::size_t rows = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t mandatory_failures = 0;
    bool expectation_met = false;
    std::optional<double> lipschitz_estimate; ///< informational
    std::optional<double> axis_gap;           ///< coefficient gap at r -> 0, informational
    std::string detail;
};

struct Report {
    std::uint64_t seed = 0;
    double step = 0.0;
    double fd_tol = 0.0;
    double exact_tol = 0.0;
    std::string grid_spec;
    bool include_traces = false;

    std::vector<ReportRow> rows;
    std::vector<SkipRecord> skips;
    std::vector<FunctionSummary> functions;

    std::size_t violations = 0;
    bool ok() const { return violations == 0; }
};

/// Stable-field-order JSON document (keys are emitted sorted, numbers in
/// shortest round-trip form), so identical runs serialize byte for byte.
std::string to_json(const Report& report, bool include_rows = true);

/// Flat CSV of the row table.
std::string to_csv(const Report& report);

} // namespace sderiv
