#include <doctest.h>

#include <cmath>

#include "trafficlab/collision.hpp"
#include "trafficlab/dynamics.hpp"
#include "trafficlab/sensing.hpp"

using namespace trafficlab;

namespace {

// A unit-depth wall straddling the +z axis at the given frontal distance from
// a probe vehicle at the origin facing +z (front at z = 2.25).
SenseTarget wall_ahead(double frontal_distance, double half_width = 8.0) {
    const double near_face = 2.25 + frontal_distance;
    return SenseTarget{Obb{{0.0, near_face + 0.5}, half_width, 0.5, 0.0}, RayTarget::Obstacle, 0};
}

}  // namespace

TEST_CASE("every vehicle is sampled exactly once per four-tick rotation") {
    for (std::uint32_t id : {0u, 1u, 2u, 3u, 4u, 17u, 1023u}) {
        for (std::uint64_t window = 0; window < 3; ++window) {
            int samples = 0;
            for (std::uint64_t t = window * 4; t < window * 4 + 4; ++t) {
                if (sensing_frame(t, id)) ++samples;
            }
            CHECK(samples == 1);
        }
    }
}

TEST_CASE("center ray reports frontal distance; hits convert to brake demand") {
    VehicleState v;  // origin, facing +z, steer 0

    SUBCASE("hit at half range demands half scale") {
        const auto hits = cast_rays(v, {wall_ahead(3.0)});
        CHECK(hits[kRayCenter].target == RayTarget::Obstacle);
        CHECK(hits[kRayCenter].distance == doctest::Approx(3.0));
        CHECK(brake_factor_from_hits(hits) == doctest::Approx(3000.0));
    }
    SUBCASE("contact at the origin of the ray demands the full scale") {
        // Wall face exactly at the vehicle front: distance 0.
        const auto hits = cast_rays(v, {wall_ahead(0.0)});
        CHECK(hits[kRayCenter].distance == doctest::Approx(0.0));
        CHECK(brake_factor_from_hits(hits) == doctest::Approx(6000.0));
    }
    SUBCASE("beyond range is no hit and no demand") {
        const auto hits = cast_rays(v, {wall_ahead(6.5)});
        CHECK(hits[kRayCenter].target == RayTarget::None);
        CHECK(brake_factor_from_hits(hits) == doctest::Approx(0.0));
    }
    SUBCASE("demand decreases monotonically with distance") {
        double prev = 7000.0;
        for (double d = 0.0; d <= 6.0; d += 0.25) {
            const double f = brake_factor_from_hits(cast_rays(v, {wall_ahead(d)}));
            CHECK(f <= prev + 1e-9);
            prev = f;
        }
    }
}

TEST_CASE("center ray follows the steered heading") {
    VehicleState v;
    v.steer_angle = 30.0;
    // A small box 4 units along the steered direction from the front.
    const Vec2 origin = v.front();
    const Vec2 at = origin + heading_dir(30.0) * 4.0;
    const SenseTarget box{Obb{at, 0.4, 0.4, 30.0}, RayTarget::Vehicle, 9};
    const auto hits = cast_rays(v, {box});
    CHECK(hits[kRayCenter].target == RayTarget::Vehicle);
    CHECK(hits[kRayCenter].distance == doctest::Approx(3.6));  // 4 - box half depth
    // Without steer the same box is missed.
    v.steer_angle = 0.0;
    CHECK(cast_rays(v, {box})[kRayCenter].target == RayTarget::None);
}

TEST_CASE("flank rays are short and angled") {
    VehicleState v;
    const Vec2 origin = v.front();

    // A box 4 units out on the right flank direction: beyond the 2-unit reach.
    const Vec2 far_right = origin + heading_dir(37.0) * 4.0;
    auto hits = cast_rays(v, {SenseTarget{Obb{far_right, 0.3, 0.3, 37.0}, RayTarget::Vehicle, 1}});
    CHECK(hits[kRayRight].target == RayTarget::None);
    CHECK(hits[kRayCenter].target == RayTarget::None);

    // The same shape just 1 unit out is caught by the right ray only.
    const Vec2 near_right = origin + heading_dir(37.0) * 1.0;
    hits = cast_rays(v, {SenseTarget{Obb{near_right, 0.3, 0.3, 37.0}, RayTarget::Vehicle, 1}});
    CHECK(hits[kRayRight].target == RayTarget::Vehicle);
    CHECK(hits[kRayRight].distance == doctest::Approx(0.7));
    CHECK(hits[kRayLeft].target == RayTarget::None);

    // Mirror on the left.
    const Vec2 near_left = origin + heading_dir(-37.0) * 1.0;
    hits = cast_rays(v, {SenseTarget{Obb{near_left, 0.3, 0.3, -37.0}, RayTarget::Vehicle, 1}});
    CHECK(hits[kRayLeft].target == RayTarget::Vehicle);
    CHECK(hits[kRayRight].target == RayTarget::None);

    // A short-range hit demands proportionally against the short range.
    const double f = brake_factor_from_hits(hits);
    CHECK(f == doctest::Approx(6000.0 * (1.0 - 0.7 / 2.0)));
}

TEST_CASE("disabled flank rays report nothing while the center ray still works") {
    VehicleState v;
    v.severity.side_rays_disabled = true;
    const Vec2 origin = v.front();
    const Vec2 near_right = origin + heading_dir(37.0) * 1.0;
    const auto hits = cast_rays(v, {SenseTarget{Obb{near_right, 0.3, 0.3, 37.0},
                                                RayTarget::Vehicle, 1},
                                    wall_ahead(3.0)});
    CHECK(hits[kRayRight].target == RayTarget::None);
    CHECK(hits[kRayLeft].target == RayTarget::None);
    CHECK(hits[kRayCenter].target == RayTarget::Obstacle);
}

TEST_CASE("nearest of several targets wins") {
    VehicleState v;
    const auto hits = cast_rays(v, {wall_ahead(5.0), wall_ahead(2.0), wall_ahead(4.0)});
    CHECK(hits[kRayCenter].distance == doctest::Approx(2.0));
}

TEST_CASE("speed limit excess demands at least the enforcement floor") {
    CHECK(speed_limit_brake(29.0, 30.0) == doctest::Approx(0.0));
    CHECK(speed_limit_brake(30.0, 30.0) == doctest::Approx(0.0));
    CHECK(speed_limit_brake(31.0, 30.0) == doctest::Approx(1000.0));
    // Combined with an obstacle demand by the max rule.
    VehicleState v;
    const auto hits = cast_rays(v, {wall_ahead(0.0)});
    const double combined = std::max(brake_factor_from_hits(hits), speed_limit_brake(31.0, 30.0));
    CHECK(combined == doctest::Approx(6000.0));
}

TEST_CASE("a vehicle sensing a wall from six units at fifteen stops short of it") {
    VehicleState v;
    v.speed = 15.0;
    VehicleParams p;
    const SenseTarget wall = wall_ahead(6.0);  // near face 6 from the front

    double min_gap = 1e9;
    for (int i = 0; i < 3000; ++i) {
        v.rays = cast_rays(v, {wall});
        v.brake_factor = brake_factor_from_hits(v.rays);
        step_vehicle(v, p, 30.0, kDt);
        const SatResult sat = sat_obb(v.footprint(), wall.box);
        min_gap = std::min(min_gap, sat.separation);
        if (v.speed == 0.0) break;
    }
    CHECK(v.speed == 0.0);
    CHECK(min_gap > 0.0);  // never touched the wall
}
