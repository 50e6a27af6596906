#pragma once
#include "trafficlab/network.hpp"
#include "trafficlab/rng.hpp"
#include "trafficlab/vehicle.hpp"

namespace trafficlab {

// Steering command toward a world-space target: the target's lateral share of
// its local direction, scaled by the steering limit. Positive steers right.
// Throws DegenerateTarget when the target coincides with the vehicle.
double steering_angle(const Vec2& vehicle_pos, double vehicle_yaw, const Vec2& target,
                      double max_steer_deg);

// Drive torque: proportional to power and to the remaining headroom below the
// speed limit; zero at or above the limit. Does not know about braking — the
// integrator cuts motor torque whenever a brake demand is present.
double motor_torque(double speed, double car_power, double speed_limit);

// Brake torque commanded by a 0..6000 brake factor.
double brake_torque(double brake_factor, double brake_power);

// Advance one vehicle by dt: longitudinal forces first (new speed, clamped at
// zero so brakes never reverse), then yaw by the kinematic bicycle model using
// the new speed, then position along the new heading at the new speed.
void step_vehicle(VehicleState& v, const VehicleParams& p, double speed_limit, double dt);

// Result of a navigation update.
struct NavResult {
    bool advanced = false;          // target waypoint index moved
    bool left_container = false;    // finished the container this tick
    std::uint32_t prev_container = 0;  // container departed (valid when left_container)
    bool respawned = false;         // dead end: vehicle snapped back to the entry
};

// Move the waypoint target forward when the vehicle is within reach of it.
// Finishing a container picks the next one uniformly from its links (consuming
// `paths`); a dead end teleports the vehicle back to the container entry.
// Recomputes steer_angle whenever the target changed.
NavResult advance_navigation(VehicleState& v, const Network& net, const VehicleParams& p,
                             RngStream& paths);

// Distance at which the target waypoint counts as reached.
inline constexpr double kWaypointReach = 5.0;

}  // namespace trafficlab
