#pragma once

#include <cstdint>

#include "sderiv/quaternion.hpp"

namespace sderiv {

/// splitmix64-based generator. The samplers below use only integer
/// arithmetic, multiplication and IEEE sqrt, so a seed produces the same
/// stream on every platform; seeded reports are reproducible byte for byte.
class Rng {
public:
    explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next_u64() {
        std::uint64_t s = (state_ += 0x9e3779b97f4a7c15ULL);
        s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ULL;
        s = (s ^ (s >> 27)) * 0x94d049bb133111ebULL;
        return s ^ (s >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Independent substream derived from this generator's state and a tag.
    [[nodiscard]] constexpr Rng derive(std::uint64_t tag) const {
        std::uint64_t s = state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
        s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ULL;
        return Rng(s ^ (s >> 27));
    }

    /// Uniform on the unit 3-sphere of H (rejection in the cube, then
    /// normalize).
    Quaternion unit_quaternion() {
        for (;;) {
            Quaternion v(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0),
                         uniform(-1.0, 1.0));
            const double n2 = v.norm_sq();
            if (n2 > 1e-8 && n2 <= 1.0) return v / std::sqrt(n2);
        }
    }

    /// Uniform pure-imaginary unit (a point of the sphere of square roots
    /// of -1).
    Quaternion unit_imaginary() {
        for (;;) {
            Quaternion v(0.0, uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0));
            const double n2 = v.norm_sq();
            if (n2 > 1e-8 && n2 <= 1.0) return v / std::sqrt(n2);
        }
    }

    /// Uniform in the solid 4-ball of the given radius.
    Quaternion in_ball(double radius) {
        for (;;) {
            Quaternion v(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0),
                         uniform(-1.0, 1.0));
            if (v.norm_sq() <= 1.0) return v * radius;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace sderiv
