#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sderiv/errors.hpp"

namespace sderiv {

/// Absolute + relative tolerance pair for approximate comparisons.
struct Tolerance {
    double abs = 1e-12;
    double rel = 1e-9;
};

/// Quaternion q = t + x*i + y*j + z*k with double components.
///
/// i*j = k, j*k = i, k*i = j, i^2 = j^2 = k^2 = -1. Values are immutable in
/// spirit: every operation returns a new value, so instances can be shared
/// freely across threads.
struct Quaternion {
    double t = 0.0; ///< scalar (real) part
    double x = 0.0; ///< i component
    double y = 0.0; ///< j component
    double z = 0.0; ///< k component

    constexpr Quaternion() = default;
    constexpr Quaternion(double t_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : t(t_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-t, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        t += o.t; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        t -= o.t; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        t *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) { return *this *= 1.0 / s; }

    /// Hamilton product (noncommutative).
    constexpr Quaternion& operator*=(const Quaternion& o) {
        const Quaternion a = *this;
        t = a.t * o.t - a.x * o.x - a.y * o.y - a.z * o.z;
        x = a.t * o.x + a.x * o.t + a.y * o.z - a.z * o.y;
        y = a.t * o.y - a.x * o.z + a.y * o.t + a.z * o.x;
        z = a.t * o.z + a.x * o.y - a.y * o.x + a.z * o.t;
        return *this;
    }

    /// Conjugate: flips the sign of the vector part.
    [[nodiscard]] constexpr Quaternion conj() const { return {t, -x, -y, -z}; }

    [[nodiscard]] constexpr double norm_sq() const { return t * t + x * x + y * y + z * z; }
    [[nodiscard]] double norm() const { return std::sqrt(norm_sq()); }

    [[nodiscard]] constexpr double scalar_part() const { return t; }
    [[nodiscard]] constexpr Quaternion vector_part() const { return {0.0, x, y, z}; }
    [[nodiscard]] double vector_norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, const Quaternion& b) { return a *= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

/// 4D Euclidean inner product of the component vectors.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.t * b.t + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline constexpr double kZeroDivisorThreshold = 1e-300;

/// Multiplicative inverse conj(q)/|q|^2. Throws ZeroDivisor when |q|^2 is
/// below the underflow threshold, so Inf never propagates into residuals.
inline Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 < kZeroDivisorThreshold) {
        throw ZeroDivisor("inverse of (numerically) zero quaternion");
    }
    return q.conj() / n2;
}

/// |a - b| <= abs + rel * max(|a|, |b|).
inline bool approx_equal(const Quaternion& a, const Quaternion& b, Tolerance tol = {}) {
    const double d = (a - b).norm();
    return d <= tol.abs + tol.rel * std::max(a.norm(), b.norm());
}

/// Renders "a+bi+cj+dk" with all four components in fixed order, e.g.
/// "1-2i+0j+4k". Round-trips through parse_quaternion.
std::string to_string(const Quaternion& q);

/// Parses the to_string grammar; whitespace between tokens is ignored and
/// components may be omitted or reordered ("i-k", "2", "1 + 2 i").
/// Throws std::invalid_argument on malformed input.
Quaternion parse_quaternion(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace sderiv
