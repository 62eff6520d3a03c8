#include "sderiv/report.hpp"

#include <sstream>

#include <json.hpp>

namespace sderiv {

namespace {

using json = nlohmann::json;

json row_to_json(const ReportRow& row) {
    json j;
    j["function"] = row.function;
    j["point_index"] = row.point_index;
    j["point"] = to_string(row.point);
    j["check"] = row.check;
    j["residual"] = row.residual;
    j["tolerance"] = row.tolerance;
    j["pass"] = row.pass;
    j["mandatory"] = row.mandatory;
    if (!row.note.empty()) j["note"] = row.note;
    return j;
}

json skip_to_json(const SkipRecord& s) {
    json j;
    j["function"] = s.function;
    j["point_index"] = s.point_index;
    j["point"] = to_string(s.point);
    j["check"] = s.check;
    j["reason"] = s.reason;
    return j;
}

json summary_to_json(const FunctionSummary& s) {
    json j;
    j["name"] = s.name;
    j["expectation"] = s.expectation;
    j["rows"] = s.rows;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["skipped"] = s.skipped;
    j["mandatory_failures"] = s.mandatory_failures;
    j["expectation_met"] = s.expectation_met;
    if (s.lipschitz_estimate) j["lipschitz_estimate"] = *s.lipschitz_estimate;
    if (s.axis_gap) j["axis_gap"] = *s.axis_gap;
    if (!s.detail.empty()) j["detail"] = s.detail;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_json(const Report& report, bool include_rows) {
    json j;
    j["config"]["seed"] = report.seed;
    j["config"]["step"] = report.step;
    j["config"]["fd_tol"] = report.fd_tol;
    j["config"]["exact_tol"] = report.exact_tol;
    j["config"]["grid"] = report.grid_spec;
    j["config"]["traces"] = report.include_traces;

    j["functions"] = json::array();
    for (const auto& s : report.functions) j["functions"].push_back(summary_to_json(s));

    if (include_rows) {
        j["rows"] = json::array();
        for (const auto& r : report.rows) j["rows"].push_back(row_to_json(r));
        j["skips"] = json::array();
        for (const auto& s : report.skips) j["skips"].push_back(skip_to_json(s));
    }

    j["summary"]["total_rows"] = report.rows.size();
    j["summary"]["total_skips"] = report.skips.size();
    j["summary"]["violations"] = report.violations;
    j["summary"]["ok"] = report.ok();
    return j.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
    std::ostringstream out;
    out << "function,point_index,point,check,residual,tolerance,pass,mandatory,note\n";
    char buf[64];
    for (const auto& r : report.rows) {
        out << csv_escape(r.function) << ',' << r.point_index << ',' << to_string(r.point) << ','
            << csv_escape(r.check) << ',';
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,", r.residual, r.tolerance);
        out << buf << (r.pass ? "true" : "false") << ',' << (r.mandatory ? "true" : "false")
            << ',' << csv_escape(r.note) << '\n';
    }
    return out.str();
}

} // namespace sderiv
