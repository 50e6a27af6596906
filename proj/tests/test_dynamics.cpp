#include <doctest.h>

#include <cmath>

#include "trafficlab/dynamics.hpp"
#include "trafficlab/errors.hpp"
#include "trafficlab/network.hpp"

using namespace trafficlab;

namespace {

Network two_chained_containers() {
    Network net;
    PathContainer a;
    a.id = 0;
    a.kind = PathKind::Road;
    a.waypoints = {Waypoint{{0, 0}, 0}, Waypoint{{0, 20}, 0}, Waypoint{{0, 40}, 0}};
    PathContainer b;
    b.id = 1;
    b.kind = PathKind::Road;
    b.waypoints = {Waypoint{{0, 60}, 0}, Waypoint{{0, 80}, 0}};
    net.containers = {a, b};
    orient_waypoints(net.containers[0]);
    orient_waypoints(net.containers[1]);
    infer_next_ways(net.containers);
    net.recompute_bounds();
    REQUIRE(net.containers[0].next_ways == std::vector<std::uint32_t>{1});
    REQUIRE(net.containers[1].next_ways.empty());
    return net;
}

}  // namespace

TEST_CASE("steering authority shrinks with wheelbase and clamps") {
    CHECK(derive_max_steer(2.8) == doctest::Approx(49.0));
    CHECK(derive_max_steer(3.5) == doctest::Approx(35.0));
    CHECK(derive_max_steer(1.0) == doctest::Approx(72.0));   // upper clamp
    CHECK(derive_max_steer(5.0) == doctest::Approx(35.0));   // lower clamp
    CHECK(derive_max_steer(0.1) == doctest::Approx(72.0));
}

TEST_CASE("steering command follows the target's lateral share") {
    // Target ahead-right at 45 degrees in local frame: lateral share 1/sqrt(2).
    const double steer = steering_angle({0, 0}, 0.0, {1, 1}, 40.0);
    CHECK(steer == doctest::Approx(28.284271247461902).epsilon(1e-12));

    // Dead ahead: no lateral component.
    CHECK(steering_angle({0, 0}, 0.0, {0, 10}, 49.0) == doctest::Approx(0.0));

    // Right of the vehicle: positive and at the limit.
    CHECK(steering_angle({0, 0}, 0.0, {5, 0}, 49.0) == doctest::Approx(49.0));
    // Left: negative.
    CHECK(steering_angle({0, 0}, 0.0, {-5, 0}, 49.0) == doctest::Approx(-49.0));

    // The local frame rotates with the vehicle: a target north of a vehicle
    // facing east lies to its left.
    CHECK(steering_angle({0, 0}, 90.0, {0, 10}, 49.0) == doctest::Approx(-49.0));

    CHECK_THROWS_AS(steering_angle({3, 4}, 17.0, {3, 4}, 49.0), DegenerateTarget);
    CHECK_THROWS_AS(steering_angle({3, 4}, 17.0, {3, 4 + 1e-10}, 49.0), DegenerateTarget);
}

TEST_CASE("motor torque scales with headroom below the speed limit") {
    CHECK(motor_torque(0.0, 120.0, 30.0) == doctest::Approx(3600.0));
    CHECK(motor_torque(15.0, 120.0, 30.0) == doctest::Approx(1800.0));
    CHECK(motor_torque(30.0, 120.0, 30.0) == doctest::Approx(0.0));
    CHECK(motor_torque(35.0, 120.0, 30.0) == doctest::Approx(0.0));  // never negative
    CHECK(motor_torque(0.0, 200.0, 30.0) == doctest::Approx(6000.0));
}

TEST_CASE("brake torque is brake power times the demanded factor") {
    CHECK(brake_torque(6000.0, 8.0) == doctest::Approx(48000.0));
    CHECK(brake_torque(3000.0, 5.0) == doctest::Approx(15000.0));
    CHECK(brake_torque(0.0, 8.0) == doctest::Approx(0.0));
}

TEST_CASE("a vehicle at the limit with no brake coasts exactly") {
    VehicleState v;
    v.pos = {2, 3};
    v.yaw = 0.0;
    v.speed = 10.0;
    VehicleParams p;
    p.speed_limit = 10.0;
    for (int i = 0; i < 5; ++i) step_vehicle(v, p, 10.0, kDt);
    CHECK(v.speed == 10.0);  // exactly preserved: zero net force
    CHECK(v.pos.x == doctest::Approx(2.0));
    CHECK(v.pos.z == doctest::Approx(3.0 + 5 * 0.2));  // +0.2 per step
    CHECK(v.yaw == doctest::Approx(0.0));
}

TEST_CASE("acceleration from rest follows motor force over mass") {
    VehicleState v;
    VehicleParams p;  // car_power 120, wheel radius 0.35, mass 4000
    step_vehicle(v, p, 30.0, kDt);
    // 2 * 3600 / 0.35 / 4000 * 0.02
    CHECK(v.speed == doctest::Approx(0.10285714285714286).epsilon(1e-12));
    CHECK(v.pos.z == doctest::Approx(v.speed * kDt).epsilon(1e-12));
}

TEST_CASE("brakes cut the motor, oppose motion, and never reverse") {
    VehicleState v;
    v.speed = 0.0;
    v.brake_factor = 6000.0;
    VehicleParams p;
    step_vehicle(v, p, 30.0, kDt);
    CHECK(v.speed == 0.0);  // full brake at rest holds the vehicle
    CHECK(v.pos.z == 0.0);

    v.speed = 0.05;  // one tick of full braking would remove ~2.7 units/s
    step_vehicle(v, p, 30.0, kDt);
    CHECK(v.speed == 0.0);  // clamped, not reversed

    v.speed = 20.0;
    v.brake_factor = 6000.0;
    const double before = v.speed;
    step_vehicle(v, p, 30.0, kDt);
    // decel = 4 * 8 * 6000 / 0.35 / 4000 * 0.02 = 2.742857...
    CHECK(v.speed == doctest::Approx(before - 2.7428571428571429).epsilon(1e-12));
}

TEST_CASE("zero steer keeps the heading; heading drives the motion direction") {
    VehicleState v;
    v.yaw = 90.0;  // facing +x
    v.speed = 10.0;
    VehicleParams p;
    p.speed_limit = 10.0;
    for (int i = 0; i < 50; ++i) step_vehicle(v, p, 10.0, kDt);
    CHECK(v.yaw == doctest::Approx(90.0));
    CHECK(v.pos.x == doctest::Approx(10.0));
    CHECK(std::abs(v.pos.z) < 1e-9);
}

TEST_CASE("closed-loop turning radius matches wheelbase over tan(steer)") {
    VehicleState v;
    v.speed = 10.0;
    v.steer_angle = 20.0;
    VehicleParams p;
    p.speed_limit = 10.0;  // zero net force: constant speed
    const double expected_radius = p.wheelbase / std::tan(deg2rad(20.0));

    double min_x = v.pos.x, max_x = v.pos.x, min_z = v.pos.z, max_z = v.pos.z;
    double yaw_total = 0.0;
    double prev_yaw = v.yaw;
    while (yaw_total < 360.0) {
        step_vehicle(v, p, 10.0, kDt);
        yaw_total += norm_deg(v.yaw - prev_yaw);
        prev_yaw = v.yaw;
        min_x = std::min(min_x, v.pos.x);
        max_x = std::max(max_x, v.pos.x);
        min_z = std::min(min_z, v.pos.z);
        max_z = std::max(max_z, v.pos.z);
    }
    const double radius_est = (max_x - min_x + max_z - min_z) / 4.0;
    CHECK(radius_est == doctest::Approx(expected_radius).epsilon(0.01));
}

TEST_CASE("positive steer turns clockwise, negative counterclockwise") {
    VehicleState right;
    right.speed = 10.0;
    right.steer_angle = 15.0;
    VehicleState left = right;
    left.steer_angle = -15.0;
    VehicleParams p;
    p.speed_limit = 10.0;
    for (int i = 0; i < 10; ++i) {
        step_vehicle(right, p, 10.0, kDt);
        step_vehicle(left, p, 10.0, kDt);
    }
    CHECK(right.yaw > 0.0);
    CHECK(right.yaw < 180.0);
    CHECK(left.yaw > 180.0);  // normalized negative turn
    CHECK(right.pos.x > 0.0);
    CHECK(left.pos.x < 0.0);
}

TEST_CASE("stopped timer accrues below the threshold and resets above") {
    VehicleState v;
    v.brake_factor = 6000.0;  // held at rest
    VehicleParams p;
    for (int i = 0; i < 10; ++i) step_vehicle(v, p, 30.0, kDt);
    CHECK(v.stopped_timer == doctest::Approx(0.2));

    v.brake_factor = 0.0;  // release: motor pulls it above the threshold
    step_vehicle(v, p, 30.0, kDt);
    CHECK(v.speed > kStoppedSpeed);
    CHECK(v.stopped_timer == 0.0);  // reset the same step it crossed

    // A single slow step below the threshold counts again.
    v.speed = 0.0;
    v.brake_factor = 6000.0;
    step_vehicle(v, p, 30.0, kDt);
    CHECK(v.stopped_timer == doctest::Approx(kDt));
}

TEST_CASE("navigation advances within reach and not before") {
    Network net = two_chained_containers();
    VehicleParams p;
    RngStream paths(7);

    VehicleState v;
    v.path_id = 0;
    v.waypoint_index = 1;  // target (0, 20)

    v.pos = {0, 20.0 - 5.1};
    CHECK_FALSE(advance_navigation(v, net, p, paths).advanced);
    CHECK(v.waypoint_index == 1);

    v.pos = {0, 20.0 - 4.9};
    const NavResult r = advance_navigation(v, net, p, paths);
    CHECK(r.advanced);
    CHECK_FALSE(r.left_container);
    CHECK(v.waypoint_index == 2);
    // Steering recomputed toward the new target (0, 40), dead ahead.
    CHECK(v.steer_angle == doctest::Approx(0.0));
}

TEST_CASE("finishing a container hops to a linked container") {
    Network net = two_chained_containers();
    VehicleParams p;
    RngStream paths(7);
    RngStream untouched(7);

    VehicleState v;
    v.path_id = 0;
    v.waypoint_index = 2;  // target the final waypoint (0, 40)
    v.pos = {0, 36.0};

    const NavResult r = advance_navigation(v, net, p, paths);
    CHECK(r.advanced);
    CHECK(r.left_container);
    CHECK(r.prev_container == 0);
    CHECK_FALSE(r.respawned);
    CHECK(v.path_id == 1);
    CHECK(v.waypoint_index == 0);
    // A single successor consumes no randomness.
    CHECK(paths.next_u64() == untouched.next_u64());
}

TEST_CASE("a dead end respawns the vehicle at the container entry") {
    Network net = two_chained_containers();
    VehicleParams p;
    RngStream paths(7);

    VehicleState v;
    v.path_id = 1;  // (0,60) -> (0,80), no successors
    v.waypoint_index = 1;
    v.pos = {0, 78.0};
    v.yaw = 0.0;

    const NavResult r = advance_navigation(v, net, p, paths);
    CHECK(r.left_container);
    CHECK(r.respawned);
    CHECK(v.path_id == 1);
    CHECK(v.waypoint_index == 1);
    CHECK(v.pos.x == 0.0);
    CHECK(v.pos.z == 60.0);
    CHECK(v.yaw == 0.0);
}

TEST_CASE("successor choice is uniform over the links") {
    // One container with three successors at valid offsets.
    Network net;
    PathContainer a;
    a.id = 0;
    a.waypoints = {Waypoint{{0, 0}, 0}, Waypoint{{0, 20}, 0}};
    net.containers.push_back(a);
    for (int k = 0; k < 3; ++k) {
        PathContainer b;
        b.id = static_cast<std::uint32_t>(1 + k);
        const double x = -10.0 + 10.0 * k;  // within distance, small lateral spread
        b.waypoints = {Waypoint{{x, 40}, 0}, Waypoint{{x, 60}, 0}};
        net.containers.push_back(b);
    }
    for (auto& c : net.containers) orient_waypoints(c);
    infer_next_ways(net.containers);
    net.recompute_bounds();
    REQUIRE(net.containers[0].next_ways.size() == 3);

    VehicleParams p;
    RngStream paths(123);
    int picks[3] = {0, 0, 0};
    for (int trial = 0; trial < 300; ++trial) {
        VehicleState v;
        v.path_id = 0;
        v.waypoint_index = 1;
        v.pos = {0, 19.0};
        advance_navigation(v, net, p, paths);
        REQUIRE(v.path_id >= 1);
        REQUIRE(v.path_id <= 3);
        ++picks[v.path_id - 1];
    }
    for (int k = 0; k < 3; ++k) {
        CHECK(picks[k] > 60);  // roughly uniform thirds of 300
        CHECK(picks[k] < 140);
    }
}

TEST_CASE("vehicle steered at waypoints traverses a container chain") {
    Network net = two_chained_containers();
    VehicleParams p;
    RngStream paths(7);

    VehicleState v;
    v.path_id = 0;
    v.waypoint_index = 1;
    v.pos = {0.5, 2.0};  // slightly off-axis
    v.yaw = 5.0;

    bool reached_second = false;
    for (int i = 0; i < 4000 && !reached_second; ++i) {
        const Vec2 target = net.containers[v.path_id].waypoints[v.waypoint_index].pos;
        if ((target - v.pos).norm() >= 1e-9) {
            v.steer_angle = steering_angle(v.pos, v.yaw, target, p.max_steer);
        }
        step_vehicle(v, p, 30.0, kDt);
        advance_navigation(v, net, p, paths);
        if (v.path_id == 1 && v.waypoint_index >= 1) reached_second = true;
    }
    CHECK(reached_second);
}
