#pragma once

#include "sderiv/quaternion.hpp"

namespace sderiv {

/// r below this counts as "on the real axis": no slice direction exists.
inline constexpr double kRealSliceCutoff = 1e-12;

/// sin(beta) below this counts as "on the singular subplane" R + kR, where
/// the spherical chart of the imaginary sphere degenerates.
inline constexpr double kPoleCutoff = 1e-6;

/// A unit square root of -1: pure imaginary with unit norm.
struct UnitImaginary {
    Quaternion axis;

    constexpr Quaternion q() const { return axis; }
    constexpr UnitImaginary operator-() const { return {-axis}; }
};

/// Builds a unit imaginary from the vector part of v (the scalar part is
/// discarded). Throws DegenerateSlice when the vector part is numerically
/// zero.
UnitImaginary unit_imaginary(const Quaternion& v);

/// q = t + r*iota with t real, r >= 0 and iota a unit imaginary.
struct SliceForm {
    double t = 0.0;
    double r = 0.0;
    UnitImaginary iota;
};

/// Chart angles for iota(alpha, beta) =
///   cos(alpha) sin(beta) i + sin(alpha) sin(beta) j + cos(beta) k.
struct SphericalAngles {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Increment split relative to a slice direction: `parallel` commutes with
/// iota, `perp` anticommutes, and parallel + perp == h exactly.
struct IncrementSplit {
    Quaternion parallel;
    Quaternion perp;
};

/// Decomposes q into slice form. Throws DegenerateSlice when the vector
/// part has norm <= kRealSliceCutoff; callers at real points must branch
/// to the real-axis form of the derivative.
SliceForm slice_form(const Quaternion& q);

constexpr Quaternion recompose(const SliceForm& s) {
    return Quaternion(s.t) + s.iota.axis * s.r;
}

UnitImaginary iota_from_angles(const SphericalAngles& a);
SphericalAngles angles_from_iota(const UnitImaginary& iota);

/// True near the poles beta = 0 or pi (sin(beta) < kPoleCutoff), i.e. near
/// the singular subplane R + kR where angular derivatives are undefined.
bool near_pole(const UnitImaginary& iota);

/// h_parallel = (h - iota h iota)/2, h_perp = (h + iota h iota)/2.
IncrementSplit split_increment(const Quaternion& h, const UnitImaginary& iota);

/// Deterministic unit imaginary orthogonal to iota (so it anticommutes
/// with iota): Gram-Schmidt of the first of i, j, k not parallel to iota.
UnitImaginary perp_direction(const UnitImaginary& iota);

/// Analytic chart tangents d(iota)/d(alpha) and d(iota)/d(beta); both are
/// pure imaginary and anticommute with iota(a).
Quaternion alpha_tangent(const SphericalAngles& a);
Quaternion beta_tangent(const SphericalAngles& a);

} // namespace sderiv
