#include "sderiv/grid.hpp"

#include <cstdio>
#include <stdexcept>

#include "sderiv/random.hpp"

namespace sderiv {

namespace {

double lattice_coord(double lo, double hi, int count, int index) {
    if (count <= 1) return 0.5 * (lo + hi);
    return lo + (hi - lo) * static_cast<double>(index) / static_cast<double>(count - 1);
}

} // namespace

std::vector<GridPoint> generate_grid(const GridSpec& spec, std::uint64_t seed) {
    std::vector<GridPoint> points;
    const bool ball = spec.region == GridSpec::Region::Ball;
    const double lo = ball ? -spec.lattice_radius : spec.box_lo;
    const double hi = ball ? spec.lattice_radius : spec.box_hi;

    const int n = spec.per_axis;
    for (int it = 0; it < n; ++it) {
        for (int ix = 0; ix < n; ++ix) {
            for (int iy = 0; iy < n; ++iy) {
                for (int iz = 0; iz < n; ++iz) {
                    const Quaternion q(lattice_coord(lo, hi, n, it), lattice_coord(lo, hi, n, ix),
                                       lattice_coord(lo, hi, n, iy), lattice_coord(lo, hi, n, iz));
                    if (q.vector_norm() < spec.r_band) continue;
                    if (ball && q.norm() > spec.lattice_radius) continue;
                    points.push_back({q, GridPoint::Kind::Lattice, points.size()});
                }
            }
        }
    }

    for (int i = 0; i < spec.axis_count; ++i) {
        points.push_back({Quaternion(lattice_coord(lo, hi, spec.axis_count, i)),
                          GridPoint::Kind::Axis, points.size()});
    }

    Rng rng = Rng(seed).derive(0x6121D);
    for (int i = 0; i < spec.random_count; ++i) {
        Quaternion q;
        do {
            q = rng.in_ball(spec.random_radius);
        } while (q.vector_norm() < spec.r_band);
        points.push_back({q, GridPoint::Kind::Random, points.size()});
    }
    return points;
}

GridSpec parse_grid_spec(std::string_view text) {
    GridSpec spec;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;

        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("grid spec item without '=': " + std::string(item));
        }
        const std::string key(item.substr(0, eq));
        const std::string value(item.substr(eq + 1));

        const auto parse_int = [&](const std::string& v) {
            std::size_t used = 0;
            const int out = std::stoi(v, &used);
            if (used != v.size()) throw std::invalid_argument("bad integer in grid spec: " + v);
            return out;
        };
        const auto parse_real = [&](const std::string& v) {
            std::size_t used = 0;
            const double out = std::stod(v, &used);
            if (used != v.size()) throw std::invalid_argument("bad number in grid spec: " + v);
            return out;
        };

        if (key == "box") {
            double a = 0.0, b = 0.0;
            int c = 0;
            if (std::sscanf(value.c_str(), "%lf:%lf:%d", &a, &b, &c) != 3 || !(a < b) || c < 1) {
                throw std::invalid_argument("grid spec: box=<lo>:<hi>:<n>");
            }
            spec.region = GridSpec::Region::Box;
            spec.box_lo = a;
            spec.box_hi = b;
            spec.per_axis = c;
        } else if (key == "ball") {
            double radius = 0.0;
            int c = 0;
            if (std::sscanf(value.c_str(), "%lf:%d", &radius, &c) != 2 || !(radius > 0.0) ||
                c < 1) {
                throw std::invalid_argument("grid spec: ball=<radius>:<n>");
            }
            spec.region = GridSpec::Region::Ball;
            spec.lattice_radius = radius;
            spec.per_axis = c;
        } else if (key == "axis") {
            spec.axis_count = parse_int(value);
        } else if (key == "random") {
            spec.random_count = parse_int(value);
        } else if (key == "rradius") {
            spec.random_radius = parse_real(value);
        } else if (key == "rband") {
            spec.r_band = parse_real(value);
        } else {
            throw std::invalid_argument("unknown grid spec key: " + key);
        }
        if (spec.axis_count < 0 || spec.random_count < 0 || spec.random_radius <= 0.0 ||
            spec.r_band < 0.0) {
            throw std::invalid_argument("grid spec values out of range");
        }
    }
    return spec;
}

std::string format_grid_spec(const GridSpec& spec) {
    char buf[256];
    if (spec.region == GridSpec::Region::Ball) {
        std::snprintf(buf, sizeof(buf), "ball=%g:%d,axis=%d,random=%d,rradius=%g,rband=%g",
                      spec.lattice_radius, spec.per_axis, spec.axis_count, spec.random_count,
                      spec.random_radius, spec.r_band);
    } else {
        std::snprintf(buf, sizeof(buf), "box=%g:%g:%d,axis=%d,random=%d,rradius=%g,rband=%g",
                      spec.box_lo, spec.box_hi, spec.per_axis, spec.axis_count, spec.random_count,
                      spec.random_radius, spec.r_band);
    }
    return buf;
}

} // namespace sderiv
