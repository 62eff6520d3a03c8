#pragma once

#include <optional>

#include "sderiv/qfunction.hpp"
#include "sderiv/slice.hpp"

namespace sderiv {

enum class Axis { T, X, Y, Z };

constexpr Quaternion axis_unit(Axis a) {
    switch (a) {
        case Axis::T: return Quaternion::one();
        case Axis::X: return Quaternion::i();
        case Axis::Y: return Quaternion::j();
        case Axis::Z: return Quaternion::k();
    }
    return Quaternion::one();
}

/// Central difference (f(q + s e) - f(q - s e)) / (2 s) along a coordinate
/// axis; O(s^2) for C^3 functions. Throws DomainExit when a probe leaves
/// the function's domain.
Quaternion partial_fd(const QFunction& f, const Quaternion& q, Axis axis, double step);

/// Central difference along an arbitrary direction (not normalized).
Quaternion directional_fd(const QFunction& f, const Quaternion& q, const Quaternion& dir,
                          double step);

/// Exact coordinate partial of q^n by the noncommutative product rule:
/// sum_{m=0}^{n-1} q^m e q^{n-1-m} with e the axis unit; for the real axis
/// direction this collapses to n q^{n-1}.
Quaternion partial_exact_pow(unsigned n, const Quaternion& q, Axis axis);

/// All four coordinate partials; exact when the function provides them and
/// force_fd is false, central differences otherwise.
PartialDerivatives partials(const QFunction& f, const Quaternion& q, double step,
                            bool force_fd = false);

/// Left Fueter operator applied to assembled partials:
/// d_t + i d_x + j d_y + k d_z.
constexpr Quaternion fueter_apply(const PartialDerivatives& p) {
    return p.d_t + Quaternion::i() * p.d_x + Quaternion::j() * p.d_y + Quaternion::k() * p.d_z;
}

/// Real-linear Jacobian action on an increment h = h0 + h1 i + h2 j + h3 k:
/// d_t h0 + d_x h1 + d_y h2 + d_z h3.
constexpr Quaternion jacobian_apply(const PartialDerivatives& p, const Quaternion& h) {
    return p.d_t * h.t + p.d_x * h.x + p.d_y * h.y + p.d_z * h.z;
}

/// Norm of (df/dt + iota df/dr) at q, with both partials taken by central
/// differences (df/dr directionally along iota). Zero, up to method error,
/// exactly when f is slice-regular along the slice through q.
double cullen_residual(const QFunction& f, const Quaternion& q, double step);

/// Same residual assembled from precomputed partials (df/dr via the
/// Jacobian action on iota).
double cullen_residual(const PartialDerivatives& p, const Quaternion& q);

/// Angular derivative of f with respect to the slice direction:
/// (d iota/d alpha)^{-1} df/d alpha + (d iota/d beta)^{-1} df/d beta,
/// with analytic chart tangents and central differences of f along the
/// angular coordinates at fixed (t, r). Throws SingularSubplane near
/// beta = 0 or pi, DegenerateSlice at real q.
Quaternion partial_iota(const QFunction& f, const Quaternion& q, double step);

/// Norm of Df - (df/dt + iota df/dr - (1/r) df/d iota): checks the
/// spherical-coordinate decomposition of the Fueter operator. This is an
/// operator identity for any C^1 function, so the residual measures method
/// error only.
double fueter_decomposition_residual(const QFunction& f, const Quaternion& q, double step);

/// Per-equation residual norms at a point. eq1..eq3 are set at real points,
/// eq4..eq6 and cullen off the real axis.
struct ResidualVector {
    Quaternion point;
    std::optional<double> eq1, eq2, eq3;
    std::optional<double> eq4, eq5, eq6;
    std::optional<double> cullen;
    std::optional<double> fueter_consistency;

    double max_residual() const;
};

/// Residuals of the characteristic equations at q. At (numerically) real
/// points (vector norm <= r_band) the constant-coefficient equations
///   df/dx = i df/dt,  df/dy = j df/dt,  df/dz = k df/dt
/// are checked; elsewhere the variable-coefficient ones
///   df/de = ((e - iota e iota)/2) df/dt - ((e + iota e iota)/4) Df
/// for e in {i, j, k}, plus the Cullen residual. Partials are exact when
/// available unless force_fd is set.
ResidualVector characteristic_residuals(const QFunction& f, const Quaternion& q, double step,
                                        double r_band = 1e-6, bool force_fd = false);

} // namespace sderiv
