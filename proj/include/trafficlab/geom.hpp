#pragma once
#include <cmath>
#include <optional>
#include <vector>

// Planar geometry on the ground plane. Coordinates are (x, z); headings are in
// degrees, clockwise from +z, so dir(0) = +z and dir(90) = +x.

namespace trafficlab {

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Normalize an angle in degrees to [0, 360).
inline double norm_deg(double d) {
    d = std::fmod(d, 360.0);
    if (d < 0.0) d += 360.0;
    return d;
}

struct Vec2 {
    double x = 0.0;
    double z = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, z + o.z}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, z - o.z}; }
    Vec2 operator*(double s) const { return {x * s, z * s}; }
    Vec2 operator-() const { return {-x, -z}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; z += o.z; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; z -= o.z; return *this; }
    bool operator==(const Vec2& o) const { return x == o.x && z == o.z; }

    double dot(const Vec2& o) const { return x * o.x + z * o.z; }
    double norm2() const { return x * x + z * z; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// Unit vector for a heading in degrees (clockwise from +z).
inline Vec2 heading_dir(double yaw_deg) {
    double r = deg2rad(yaw_deg);
    return {std::sin(r), std::cos(r)};
}

// Heading in degrees of a direction vector, in [0, 360).
inline double vec_heading(const Vec2& v) { return norm_deg(rad2deg(std::atan2(v.x, v.z))); }

// Rotate a world-frame vector into the frame of an entity with the given yaw:
// result.z is the forward component, result.x the rightward component.
inline Vec2 to_local(const Vec2& world, double yaw_deg) {
    double r = deg2rad(yaw_deg);
    double c = std::cos(r), s = std::sin(r);
    return {world.x * c - world.z * s, world.x * s + world.z * c};
}

// Oriented rectangle: center, half extents (hx across, hz along heading), yaw.
struct Obb {
    Vec2 center;
    double hx = 0.0;
    double hz = 0.0;
    double yaw = 0.0;

    Vec2 axis_forward() const { return heading_dir(yaw); }
    Vec2 axis_right() const {
        Vec2 f = axis_forward();
        return {f.z, -f.x};  // 90 deg clockwise of forward
    }
    // Corners in order (FR, FL, BL, BR).
    void corners(Vec2 out[4]) const {
        Vec2 f = axis_forward() * hz;
        Vec2 r = axis_right() * hx;
        out[0] = center + f + r;
        out[1] = center + f - r;
        out[2] = center - f - r;
        out[3] = center - f + r;
    }
};

// Separating-axis test result for a pair of oriented rectangles.
// separation < 0 means overlap of |separation| along the least-penetrating axis.
struct SatResult {
    double separation = 0.0;  // max over axes of (gap); negative = penetration depth
    Vec2 axis;                // world axis (unit) realizing it, oriented from a to b
};

SatResult sat_obb(const Obb& a, const Obb& b);

// Ray against oriented rectangle; returns entry distance in [0, max_len] or nothing.
std::optional<double> ray_obb(const Vec2& origin, const Vec2& dir_unit, double max_len,
                              const Obb& box);

// Axis-aligned bounds of a set of points, grown by pad.
// Distance from a point to the nearest point of a box (0 when inside or on
// the boundary).
inline double obb_point_distance(const Vec2& p, const Obb& box) {
    const Vec2 local = to_local(p - box.center, box.yaw);
    const double dx = std::max(std::abs(local.x) - box.hx, 0.0);
    const double dz = std::max(std::abs(local.z) - box.hz, 0.0);
    return std::sqrt(dx * dx + dz * dz);
}

struct Bounds {
    Vec2 lo{1e300, 1e300};
    Vec2 hi{-1e300, -1e300};
    void add(const Vec2& p) {
        lo.x = std::min(lo.x, p.x); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.z = std::max(hi.z, p.z);
    }
    void pad(double m) { lo.x -= m; lo.z -= m; hi.x += m; hi.z += m; }
    Vec2 center() const { return {(lo.x + hi.x) * 0.5, (lo.z + hi.z) * 0.5}; }
    Vec2 half_extent() const { return {(hi.x - lo.x) * 0.5, (hi.z - lo.z) * 0.5}; }
};

}  // namespace trafficlab
