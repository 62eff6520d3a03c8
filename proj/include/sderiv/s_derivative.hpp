#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sderiv/differential.hpp"
#include "sderiv/qfunction.hpp"

namespace sderiv {

enum class PointKind { Real, NonReal };

/// Derivative coefficients at a point. On the real axis only `parallel`
/// exists (the classical one-sided coefficient); off it `parallel` is the
/// coefficient of slice-commuting increments and `perp` the coefficient of
/// slice-anticommuting ones.
struct SDerivative {
    PointKind kind = PointKind::Real;
    Quaternion point;
    Quaternion parallel;
    std::optional<Quaternion> perp;
    /// Quotient route (q - conj q)^{-1}(f(q) - f(conj q)), filled by
    /// closed_form for slice-preserving functions off the real axis.
    std::optional<Quaternion> perp_quotient;
};

/// Residual of the defining limit at a schedule of decreasing steps.
struct ConvergenceTrace {
    struct Entry {
        double step;     ///< effective probe step
        double residual; ///< max over the generic probe directions
    };
    std::vector<Entry> entries;
    bool converged = false;
};

/// Roundoff floor of a defining-limit residual at a given step: evaluating
/// h^{-1}(f(q+h) - f(q) - ...) amplifies cancellation noise by 1/step, so
/// entries below kTraceRoundoffFactor * max(1, |f(q)|) / step carry no
/// convergence information.
inline constexpr double kTraceRoundoffFactor = 1e-13;

inline double trace_residual_floor(double f_scale, double step) {
    return kTraceRoundoffFactor * f_scale / step;
}

struct EstimateOptions {
    /// Base steps, strictly decreasing; scaled per point by max(1, |q|).
    std::vector<double> steps = {1e-2, 1e-3, 1e-4, 1e-5};
    std::uint64_t probe_seed = 0x5eedful;
    int probe_directions = 8;
    double r_band = 1e-6;
};

/// Estimates the derivative coefficients from symmetric secants: the
/// parallel coefficient along the real direction, the perpendicular one
/// along a fixed direction orthogonal to the slice. The trace records, per
/// schedule step, the worst defining-limit residual over a seeded set of
/// generic probe directions; `converged` is false when the residuals fail
/// to decay with the step.
std::pair<SDerivative, ConvergenceTrace> estimate(const QFunction& f, const Quaternion& q,
                                                  const EstimateOptions& opts = {});

/// Closed-form coefficients from exact partials: parallel = df/dt,
/// perp = -Df/2. For slice-preserving functions off the real axis the
/// quotient route is evaluated as well so callers can assert agreement.
/// Throws std::invalid_argument when f lacks exact partials.
SDerivative closed_form(const QFunction& f, const Quaternion& q, double r_band = 1e-6);

struct SufficiencyRow {
    Quaternion point;
    double char_residual = 0.0;
    double parallel_gap = 0.0;
    double perp_gap = 0.0;
    bool converged = false;
    bool pass = false;
    bool skipped = false;
    std::string reason;
};

struct SufficiencyOptions {
    double step = 1e-5;
    double fd_tol = 1e-6;
    double exact_tol = 1e-10;
    double r_band = 1e-6;
    EstimateOptions estimate;
};

/// Per-point check that the characteristic residuals vanish and that the
/// estimated coefficients match the closed forms. Failures and domain
/// errors become row data, never exceptions.
std::vector<SufficiencyRow> verify_sufficiency(const QFunction& f,
                                               std::span<const Quaternion> grid,
                                               const SufficiencyOptions& opts = {});

} // namespace sderiv
