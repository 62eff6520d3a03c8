#include "sderiv/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <utility>

#include "sderiv/errors.hpp"
#include "sderiv/random.hpp"
#include "sderiv/s_derivative.hpp"

namespace sderiv {

namespace {

struct EntryRun {
    const CatalogEntry& entry;
    const RunConfig& cfg;
    const std::vector<GridPoint>& grid;
    EstimateOptions est_opts;
    Report& report;
    FunctionSummary summary;
    std::size_t on_slice_failures = 0;
    std::size_t off_slice_failures = 0;

    bool on_slice(const Quaternion& q) const {
        if (!entry.slice) return false;
        const double r = q.vector_norm();
        if (r <= cfg.r_band) return false;
        const Quaternion dir = q.vector_part() / r;
        return std::abs(dot(dir, entry.slice->axis)) >= 1.0 - 1e-9;
    }

    void add_row(ReportRow row) {
        ++summary.rows;
        if (row.pass) {
            ++summary.passed;
        } else {
            ++summary.failed;
            if (row.mandatory) {
                ++summary.mandatory_failures;
                if (on_slice(row.point)) ++on_slice_failures;
                else ++off_slice_failures;
            }
        }
        report.rows.push_back(std::move(row));
    }

    void add_skip(std::size_t index, const Quaternion& q, std::string check, std::string reason) {
        ++summary.skipped;
        report.skips.push_back({entry.name, index, q, std::move(check), std::move(reason)});
    }

    std::string trace_note(const ConvergenceTrace& trace) const {
        if (!cfg.include_traces) return {};
        std::string note = "trace";
        char buf[64];
        for (const auto& e : trace.entries) {
            std::snprintf(buf, sizeof(buf), " %.3e:%.3e", e.step, e.residual);
            note += buf;
        }
        return note;
    }

    void characteristic_check(const GridPoint& p) {
        const QFunction& f = entry.function;
        try {
            const ResidualVector rv = characteristic_residuals(f, p.q, cfg.step, cfg.r_band);
            const double tol = f.has_exact_partials() ? cfg.exact_tol : cfg.fd_tol;
            const double res = rv.max_residual();
            add_row({entry.name, p.index, p.q, "characteristic", res, tol, res <= tol, true, {}});
        } catch (const NumericDomainError& e) {
            add_skip(p.index, p.q, "characteristic", e.what());
        }
    }

    void sufficiency_check(const GridPoint& p) {
        const QFunction& f = entry.function;
        try {
            if (!f.has_exact_partials()) {
                throw DomainExit("no exact partials; closed form unavailable");
            }
            const SDerivative cf = closed_form(f, p.q, cfg.r_band);
            const auto [est, trace] = estimate(f, p.q, est_opts);

            const double par_gap = (est.parallel - cf.parallel).norm();
            const double par_tol = std::max(10.0 * cfg.fd_tol, 1e-6 * cf.parallel.norm());
            add_row({entry.name, p.index, p.q, "parallel-agreement", par_gap, par_tol,
                     par_gap <= par_tol, true, {}});

            if (est.perp && cf.perp) {
                const double gap = (*est.perp - *cf.perp).norm();
                const double tol = std::max(10.0 * cfg.fd_tol, 1e-6 * cf.perp->norm());
                add_row({entry.name, p.index, p.q, "perp-agreement", gap, tol, gap <= tol, true,
                         {}});
            }
            if (cf.perp && cf.perp_quotient) {
                const double gap = (*cf.perp_quotient - *cf.perp).norm();
                const double tol = std::max(1e-10, 1e-9 * cf.perp->norm());
                add_row({entry.name, p.index, p.q, "quotient-agreement", gap, tol, gap <= tol,
                         true, {}});
            }

            const double last = trace.entries.empty() ? 0.0 : trace.entries.back().residual;
            add_row({entry.name, p.index, p.q, "convergence", last, 0.0, trace.converged, true,
                     trace_note(trace)});
        } catch (const NumericDomainError& e) {
            add_skip(p.index, p.q, "sufficiency", e.what());
        }
    }

    // Operator-identity diagnostic: the spherical decomposition of the
    // Fueter operator holds for any C^1 map, so this row carries no
    // expectation weight; it watches finite-difference health instead.
    void decomposition_check(const GridPoint& p) {
        try {
            const double res = fueter_decomposition_residual(entry.function, p.q, cfg.step);
            add_row({entry.name, p.index, p.q, "fueter-decomposition", res, cfg.fd_tol,
                     res <= cfg.fd_tol, false, {}});
        } catch (const NumericDomainError& e) {
            add_skip(p.index, p.q, "fueter-decomposition", e.what());
        }
    }

    void slice_criterion_checks() {
        if (!entry.series) return;
        std::vector<std::pair<double, double>> pairs;
        pairs.reserve(grid.size());
        for (const GridPoint& p : grid) pairs.emplace_back(p.q.t, p.q.vector_norm());

        SliceCriterionOptions opts;
        opts.step = cfg.step;
        opts.tol_angle = 1e-10;
        opts.tol_cr = cfg.fd_tol;
        opts.tol_routes = 10.0 * cfg.fd_tol;
        opts.seed = Rng(cfg.seed).derive(0x7103).next_u64();

        const auto rows = slice_criterion_check(*entry.series, pairs, opts);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SliceCriterionRow& crit = rows[i];
            const GridPoint& p = grid[i];
            if (crit.skipped) {
                add_skip(p.index, p.q, "slice-criterion", crit.reason);
                continue;
            }
            add_row({entry.name, p.index, p.q, "slice-criterion-angle", crit.angle_dev,
                     opts.tol_angle, crit.angle_dev <= opts.tol_angle, true, {}});
            add_row({entry.name, p.index, p.q, "slice-criterion-cr", crit.cr_residual,
                     opts.tol_cr, crit.cr_residual <= opts.tol_cr, true, {}});
            add_row({entry.name, p.index, p.q, "slice-criterion-routes", crit.route_gap,
                     opts.tol_routes, crit.route_gap <= opts.tol_routes, true, {}});
        }
    }

    /// Measures how far the off-axis coefficients sit from the real-axis
    /// coefficient as r -> 0. Reported, never asserted.
    void axis_gap() {
        const QFunction& f = entry.function;
        if (!f.has_exact_partials()) return;
        try {
            const double t0 = 0.5;
            const double r = 10.0 * cfg.r_band; // just off the axis band
            const SDerivative at_axis = closed_form(f, Quaternion(t0), cfg.r_band);
            const SDerivative near = closed_form(f, Quaternion(t0, r), cfg.r_band);
            double gap = (near.parallel - at_axis.parallel).norm();
            if (near.perp) gap = std::max(gap, (*near.perp - at_axis.parallel).norm());
            summary.axis_gap = gap;
        } catch (const NumericDomainError&) {
            // Functions undefined on the real axis have no gap to measure.
        }
    }

    void lipschitz_estimate() {
        const QFunction& f = entry.function;
        if (!f.has_exact_partials()) return;
        SDerivative prev;
        bool has_prev = false;
        double worst = 0.0;
        bool any = false;
        for (const GridPoint& p : grid) {
            if (p.kind != GridPoint::Kind::Random) continue;
            try {
                SDerivative cur = closed_form(f, p.q, cfg.r_band);
                if (has_prev && prev.kind == cur.kind) {
                    const double dq = (cur.point - prev.point).norm();
                    if (dq > 1e-9) {
                        double dv = (cur.parallel - prev.parallel).norm();
                        if (cur.perp && prev.perp) {
                            dv = std::max(dv, (*cur.perp - *prev.perp).norm());
                        }
                        worst = std::max(worst, dv / dq);
                        any = true;
                    }
                }
                prev = std::move(cur);
                has_prev = true;
            } catch (const NumericDomainError&) {
                has_prev = false;
            }
        }
        if (any) summary.lipschitz_estimate = worst;
    }

    void finish() {
        switch (entry.expectation) {
            case Expectation::SDerivable:
                summary.expectation_met = summary.mandatory_failures == 0;
                summary.detail = summary.expectation_met
                                     ? "all mandatory checks passed"
                                     : "mandatory check failed on a grid point";
                break;
            case Expectation::NotSDerivable:
                summary.expectation_met = summary.mandatory_failures > 0;
                summary.detail = summary.expectation_met
                                     ? "rejected as expected"
                                     : "no check detected the defect";
                break;
            case Expectation::SliceOnly:
                summary.expectation_met = on_slice_failures == 0 && off_slice_failures > 0;
                if (summary.expectation_met) {
                    summary.detail = "regular on the distinguished slice, rejected elsewhere";
                } else if (on_slice_failures > 0) {
                    summary.detail = "failed on the distinguished slice";
                } else {
                    summary.detail = "no off-slice point was rejected";
                }
                break;
        }
    }
};

} // namespace

Report run(const std::vector<CatalogEntry>& catalog, const RunConfig& cfg) {
    Report report;
    report.seed = cfg.seed;
    report.step = cfg.step;
    report.fd_tol = cfg.fd_tol;
    report.exact_tol = cfg.exact_tol;
    report.grid_spec = format_grid_spec(cfg.grid);
    report.include_traces = cfg.include_traces;

    const std::vector<GridPoint> grid = generate_grid(cfg.grid, cfg.seed);

    EstimateOptions est_opts;
    est_opts.steps = cfg.schedule;
    est_opts.probe_seed = Rng(cfg.seed).derive(0xd12ec7).next_u64();
    est_opts.r_band = cfg.r_band;

    for (const CatalogEntry& entry : catalog) {
        FunctionSummary summary;
        summary.name = entry.name;
        summary.expectation = expectation_name(entry.expectation);
        EntryRun runner{entry, cfg, grid, est_opts, report, std::move(summary)};
        for (const GridPoint& p : grid) {
            runner.characteristic_check(p);
            runner.sufficiency_check(p);
            runner.decomposition_check(p);
        }
        runner.slice_criterion_checks();
        runner.axis_gap();
        runner.lipschitz_estimate();
        runner.finish();
        if (!runner.summary.expectation_met) ++report.violations;
        report.functions.push_back(std::move(runner.summary));
    }
    return report;
}

} // namespace sderiv
