#include "sderiv/s_derivative.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sderiv/errors.hpp"
#include "sderiv/random.hpp"

namespace sderiv {

namespace {

void validate_steps(const std::vector<double>& steps) {
    if (steps.empty()) throw std::invalid_argument("step schedule must not be empty");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!(steps[i] > 0.0)) throw std::invalid_argument("steps must be positive");
        if (i > 0 && !(steps[i] < steps[i - 1])) {
            throw std::invalid_argument("steps must be strictly decreasing");
        }
    }
}

Quaternion secant(const QFunction& f, const Quaternion& q, const Quaternion& dir, double step) {
    const Quaternion hi = q + dir * step;
    const Quaternion lo = q - dir * step;
    if (!f.domain().contains(hi) || !f.domain().contains(lo)) {
        throw DomainExit("secant probe left the domain of " + f.name());
    }
    return inverse(dir * (2.0 * step)) * (f(hi) - f(lo));
}

/// Residuals decay at least like step^0.6 between consecutive entries;
/// entries at the per-step roundoff floor carry no information and are
/// forgiven.
bool trace_converged(const ConvergenceTrace& trace, double f_scale) {
    if (trace.entries.empty()) return false;
    const auto& last = trace.entries.back();
    if (last.residual <= trace_residual_floor(f_scale, last.step)) return true;
    for (std::size_t i = 0; i + 1 < trace.entries.size(); ++i) {
        const auto& a = trace.entries[i];
        const auto& b = trace.entries[i + 1];
        if (a.residual <= trace_residual_floor(f_scale, a.step)) continue;
        if (b.residual <= trace_residual_floor(f_scale, b.step)) continue;
        if (b.residual > a.residual * std::pow(b.step / a.step, 0.6)) return false;
    }
    return true;
}

} // namespace

std::pair<SDerivative, ConvergenceTrace> estimate(const QFunction& f, const Quaternion& q,
                                                  const EstimateOptions& opts) {
    validate_steps(opts.steps);
    const double scale = std::max(1.0, q.norm());
    const double s0 = opts.steps.back() * scale;

    SDerivative result;
    result.point = q;
    const double r = q.vector_norm();

    std::optional<SliceForm> sf;
    if (r > opts.r_band) {
        sf = slice_form(q);
        result.kind = PointKind::NonReal;
        result.parallel = secant(f, q, Quaternion::one(), s0);
        result.perp = secant(f, q, perp_direction(sf->iota).axis, s0);
    } else {
        result.kind = PointKind::Real;
        result.parallel = secant(f, q, Quaternion::one(), s0);
    }

    // Probe directions are a function of the seed only, so every point of a
    // run is tested against the same generic set.
    Rng rng(opts.probe_seed);
    std::vector<Quaternion> dirs;
    dirs.reserve(static_cast<std::size_t>(opts.probe_directions));
    for (int i = 0; i < opts.probe_directions; ++i) dirs.push_back(rng.unit_quaternion());

    const Quaternion f_q = f(q);
    ConvergenceTrace trace;
    trace.entries.reserve(opts.steps.size());
    for (double s : opts.steps) {
        const double s_eff = s * scale;
        double worst = 0.0;
        for (const Quaternion& d : dirs) {
            const Quaternion h = d * s_eff;
            const Quaternion probe = q + h;
            if (!f.domain().contains(probe)) {
                throw DomainExit("trace probe left the domain of " + f.name());
            }
            Quaternion model;
            if (result.kind == PointKind::NonReal) {
                const IncrementSplit parts = split_increment(h, sf->iota);
                model = parts.parallel * result.parallel + parts.perp * *result.perp;
            } else {
                model = h * result.parallel;
            }
            const double res = (inverse(h) * (f(probe) - f_q - model)).norm();
            worst = std::max(worst, res);
        }
        trace.entries.push_back({s_eff, worst});
    }
    trace.converged = trace_converged(trace, std::max(1.0, f_q.norm()));
    return {result, trace};
}

SDerivative closed_form(const QFunction& f, const Quaternion& q, double r_band) {
    if (!f.has_exact_partials()) {
        throw std::invalid_argument("closed_form requires a function with exact partials");
    }
    const PartialDerivatives p = f.exact_partials(q);

    SDerivative result;
    result.point = q;
    result.parallel = p.d_t;
    if (q.vector_norm() <= r_band) {
        result.kind = PointKind::Real;
        return result;
    }
    result.kind = PointKind::NonReal;
    result.perp = fueter_apply(p) * -0.5;
    if (f.slice_preserving()) {
        const Quaternion qbar = q.conj();
        result.perp_quotient = inverse(q - qbar) * (f(q) - f(qbar));
    }
    return result;
}

std::vector<SufficiencyRow> verify_sufficiency(const QFunction& f,
                                               std::span<const Quaternion> grid,
                                               const SufficiencyOptions& opts) {
    std::vector<SufficiencyRow> rows;
    rows.reserve(grid.size());
    for (const Quaternion& q : grid) {
        SufficiencyRow row;
        row.point = q;
        try {
            const ResidualVector rv =
                characteristic_residuals(f, q, opts.step, opts.r_band);
            const SDerivative cf = closed_form(f, q, opts.r_band);
            const auto [est, trace] = estimate(f, q, opts.estimate);

            row.char_residual = rv.max_residual();
            row.parallel_gap = (est.parallel - cf.parallel).norm();
            if (est.perp && cf.perp) row.perp_gap = (*est.perp - *cf.perp).norm();
            row.converged = trace.converged;

            const double char_tol = f.has_exact_partials() ? opts.exact_tol : opts.fd_tol;
            const double par_tol = std::max(10.0 * opts.fd_tol, 1e-6 * cf.parallel.norm());
            const double perp_tol =
                cf.perp ? std::max(10.0 * opts.fd_tol, 1e-6 * cf.perp->norm()) : 0.0;

            row.pass = row.char_residual <= char_tol && row.parallel_gap <= par_tol &&
                       row.perp_gap <= perp_tol && row.converged;
            if (!row.pass) {
                if (row.char_residual > char_tol) row.reason = "characteristic residual";
                else if (!row.converged) row.reason = "limit residual did not converge";
                else row.reason = "estimate disagrees with closed form";
            }
        } catch (const NumericDomainError& e) {
            row.skipped = true;
            row.reason = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace sderiv
