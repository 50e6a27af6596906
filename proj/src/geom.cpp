#include "trafficlab/geom.hpp"

#include <algorithm>
#include <limits>

namespace trafficlab {

namespace {

// Project a rectangle onto a unit axis: returns [min, max] of corner projections.
void project(const Obb& box, const Vec2& axis, double& mn, double& mx) {
    Vec2 c[4];
    box.corners(c);
    mn = mx = c[0].dot(axis);
    for (int i = 1; i < 4; ++i) {
        double p = c[i].dot(axis);
        mn = std::min(mn, p);
        mx = std::max(mx, p);
    }
}

}  // namespace

SatResult sat_obb(const Obb& a, const Obb& b) {
    Vec2 axes[4] = {a.axis_forward(), a.axis_right(), b.axis_forward(), b.axis_right()};
    SatResult best;
    best.separation = -std::numeric_limits<double>::infinity();
    for (const Vec2& ax : axes) {
        double amn, amx, bmn, bmx;
        project(a, ax, amn, amx);
        project(b, ax, bmn, bmx);
        // gap along this axis (negative = overlap)
        double gap = std::max(bmn - amx, amn - bmx);
        if (gap > best.separation) {
            best.separation = gap;
            // orient the axis from a toward b
            double ca = a.center.dot(ax), cb = b.center.dot(ax);
            best.axis = (cb >= ca) ? ax : -ax;
        }
    }
    return best;
}

std::optional<double> ray_obb(const Vec2& origin, const Vec2& dir_unit, double max_len,
                              const Obb& box) {
    // Slab test in the box frame.
    Vec2 rel = origin - box.center;
    Vec2 f = box.axis_forward();
    Vec2 r = box.axis_right();
    double ox = rel.dot(r), oz = rel.dot(f);
    double dx = dir_unit.dot(r), dz = dir_unit.dot(f);

    double t0 = 0.0, t1 = max_len;
    const double half[2] = {box.hx, box.hz};
    const double o[2] = {ox, oz};
    const double d[2] = {dx, dz};
    for (int i = 0; i < 2; ++i) {
        if (std::abs(d[i]) < 1e-12) {
            if (o[i] < -half[i] || o[i] > half[i]) return std::nullopt;
        } else {
            double ta = (-half[i] - o[i]) / d[i];
            double tb = (half[i] - o[i]) / d[i];
            if (ta > tb) std::swap(ta, tb);
            t0 = std::max(t0, ta);
            t1 = std::min(t1, tb);
            if (t0 > t1) return std::nullopt;
        }
    }
    return t0;  // 0 when the origin starts inside the box
}

}  // namespace trafficlab
