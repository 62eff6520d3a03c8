#include "sderiv/slice.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sderiv/errors.hpp"

namespace sderiv {

UnitImaginary unit_imaginary(const Quaternion& v) {
    const Quaternion vec = v.vector_part();
    const double r = vec.norm();
    if (r <= kRealSliceCutoff) {
        throw DegenerateSlice("unit imaginary undefined for (numerically) real input");
    }
    return {vec / r};
}

SliceForm slice_form(const Quaternion& q) {
    const Quaternion vec = q.vector_part();
    const double r = vec.norm();
    if (r <= kRealSliceCutoff) {
        throw DegenerateSlice("slice form undefined at a (numerically) real point");
    }
    return {q.t, r, UnitImaginary{vec / r}};
}

UnitImaginary iota_from_angles(const SphericalAngles& a) {
    const double sb = std::sin(a.beta);
    return {Quaternion(0.0, std::cos(a.alpha) * sb, std::sin(a.alpha) * sb, std::cos(a.beta))};
}

SphericalAngles angles_from_iota(const UnitImaginary& iota) {
    const Quaternion& v = iota.axis;
    return {std::atan2(v.y, v.x), std::acos(std::clamp(v.z, -1.0, 1.0))};
}

bool near_pole(const UnitImaginary& iota) {
    const Quaternion& v = iota.axis;
    return std::sqrt(v.x * v.x + v.y * v.y) < kPoleCutoff;
}

IncrementSplit split_increment(const Quaternion& h, const UnitImaginary& iota) {
    const Quaternion ihi = iota.axis * h * iota.axis;
    const Quaternion parallel = (h - ihi) * 0.5;
    return {parallel, h - parallel};
}

UnitImaginary perp_direction(const UnitImaginary& iota) {
    static constexpr std::array<Quaternion, 3> basis{Quaternion::i(), Quaternion::j(),
                                                     Quaternion::k()};
    for (const Quaternion& e : basis) {
        const Quaternion v = e - iota.axis * dot(e, iota.axis);
        const double n = v.norm();
        if (n > 1e-6) return {v / n};
    }
    // Unreachable: a unit vector cannot be parallel to i, j and k at once.
    throw DegenerateSlice("no direction orthogonal to iota found");
}

Quaternion alpha_tangent(const SphericalAngles& a) {
    const double sb = std::sin(a.beta);
    return {0.0, -std::sin(a.alpha) * sb, std::cos(a.alpha) * sb, 0.0};
}

Quaternion beta_tangent(const SphericalAngles& a) {
    const double cb = std::cos(a.beta);
    return {0.0, std::cos(a.alpha) * cb, std::sin(a.alpha) * cb, -std::sin(a.beta)};
}

} // namespace sderiv
