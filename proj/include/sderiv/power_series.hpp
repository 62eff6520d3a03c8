#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sderiv/qfunction.hpp"
#include "sderiv/quaternion.hpp"
#include "sderiv/slice.hpp"

namespace sderiv {

/// Finite truncation of a unilateral power series sum_k q^k a_k with
/// right-side coefficients and a declared radius of convergence.
class PowerSeries {
public:
    /// coeffs holds a_0..a_N; radius must be positive.
    PowerSeries(std::vector<Quaternion> coeffs, double radius);

    /// Text format: header "R=<real> N=<int>", then N+1 lines of
    /// whitespace-separated "t x y z" components, line k holding a_k.
    static PowerSeries load(std::istream& in);
    static PowerSeries load_file(const std::string& path);
    void save(std::ostream& out) const;

    std::span<const Quaternion> coeffs() const { return coeffs_; }
    std::size_t order() const { return coeffs_.size() - 1; } ///< N
    double radius() const { return radius_; }

    /// Right-coefficient Horner evaluation a_0 + q(a_1 + q(a_2 + ...)).
    /// Throws OutsideRadius when |q| >= radius.
    Quaternion eval(const Quaternion& q) const;

    /// (u, v) with f(t + r iota) = u + iota v for every unit imaginary
    /// iota, via the real two-term recurrence for (t + r iota)^n.
    std::pair<Quaternion, Quaternion> slice_decompose(double t, double r) const;

    /// Max of |du/dt - dv/dr| and |du/dr + dv/dt| with central differences
    /// of step `step` on the slice components.
    double cr_residual(double t, double r, double step) const;

    /// Series of the termwise t-derivative: coefficients (k+1) a_{k+1},
    /// same radius. Off the real axis this evaluates the parallel
    /// coefficient of the derivative.
    PowerSeries termwise_derivative() const;

    /// (q - conj q)^{-1} (f(q) - f(conj q)); equals v/r for series. Throws
    /// DegenerateSlice at (numerically) real q.
    Quaternion perp_quotient(const Quaternion& q) const;

    /// Truncation to order m <= N.
    PowerSeries truncated(std::size_t m) const;

    /// sum_{k > m} rho^k |a_k| over the retained coefficients: bounds the
    /// evaluation gap between truncation orders m and N at |q| <= rho.
    double tail_bound(std::size_t m, double rho) const;

    /// Root-test estimate 1 / max_k |a_k|^(1/k) over the upper half of the
    /// coefficients. Diagnostic only; the declared radius stays in force.
    double root_test_radius() const;

    /// Exact coordinate partials, termwise. O(N) per axis.
    PartialDerivatives exact_partials(const Quaternion& q) const;

    /// Wraps the series as a named QFunction on ball(radius) with exact
    /// partials, marked slice-preserving.
    QFunction as_qfunction(std::string name) const;

private:
    std::vector<Quaternion> coeffs_;
    double radius_;
};

/// A map given directly by its slice components u, v as functions of
/// (t, r): f(t + r iota) = u(t,r) + iota v(t,r).
struct SliceFunction {
    std::function<Quaternion(double, double)> u;
    std::function<Quaternion(double, double)> v;

    Quaternion eval(double t, double r, const UnitImaginary& iota) const {
        return u(t, r) + iota.axis * v(t, r);
    }
};

struct SliceCriterionRow {
    double t = 0.0;
    double r = 0.0;
    double angle_dev = 0.0; ///< worst |f(t + r iota) - (u + iota v)| over sampled iota
    double cr_residual = 0.0;
    double route_gap = 0.0; ///< worst pairwise gap between the perpendicular routes
    bool pass = false;
    bool skipped = false;
    std::string reason;
};

struct SliceCriterionOptions {
    double step = 1e-5;
    double tol_angle = 1e-10;
    double tol_cr = 1e-6;
    double tol_routes = 1e-5;
    int iota_samples = 4;
    std::uint64_t seed = 0x7e03;
};

/// Per-point criterion check: (a) slice components are angle-independent,
/// (b) they satisfy the Cauchy-Riemann pair, (c) the perpendicular routes
/// v/r, -Df/2 and the conjugate quotient agree pairwise.
std::vector<SliceCriterionRow> slice_criterion_check(
    const PowerSeries& s, std::span<const std::pair<double, double>> grid,
    const SliceCriterionOptions& opts = {});

/// Same checks for a function given directly by slice components; Df is
/// taken by finite differences of the assembled map.
std::vector<SliceCriterionRow> slice_criterion_check(
    const SliceFunction& f, double radius, std::span<const std::pair<double, double>> grid,
    const SliceCriterionOptions& opts = {});

} // namespace sderiv
