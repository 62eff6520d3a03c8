#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sderiv/quaternion.hpp"

namespace sderiv {

/// Sampling plan for a verification run: a structured lattice (box or
/// ball), pure real-axis samples for the constant-coefficient equations,
/// and seeded random points. Lattice and random points within r_band of
/// the real axis are excluded; the axis samples cover that regime.
struct GridSpec {
    enum class Region { Box, Ball };

    Region region = Region::Box;
    double box_lo = -1.5;
    double box_hi = 1.5;
    double lattice_radius = 2.0; ///< Region::Ball only
    int per_axis = 5;
    int axis_count = 25;
    int random_count = 100;
    double random_radius = 2.0;
    double r_band = 1e-6;
};

struct GridPoint {
    enum class Kind { Lattice, Axis, Random };

    Quaternion q;
    Kind kind = Kind::Lattice;
    std::size_t index = 0; ///< position in the generated sequence
};

/// Deterministic given (spec, seed); lattice points come first in
/// lexicographic (t, x, y, z) order, then axis points, then random points.
std::vector<GridPoint> generate_grid(const GridSpec& spec, std::uint64_t seed);

/// Parses a comma-separated spec string, e.g.
///   "box=-1.5:1.5:5,axis=25,random=100,rradius=2,rband=1e-6"
///   "ball=2:6,axis=10,random=50"
/// Unset keys keep their defaults. Throws std::invalid_argument on
/// malformed input.
GridSpec parse_grid_spec(std::string_view text);

/// Canonical text form of a spec (parse round-trips it).
std::string format_grid_spec(const GridSpec& spec);

} // namespace sderiv
