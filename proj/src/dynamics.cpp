#include "trafficlab/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "trafficlab/errors.hpp"

namespace trafficlab {

double steering_angle(const Vec2& vehicle_pos, double vehicle_yaw, const Vec2& target,
                      double max_steer_deg) {
    const Vec2 local = to_local(target - vehicle_pos, vehicle_yaw);
    const double n = local.norm();
    if (n < 1e-9) {
        throw DegenerateTarget("steering target coincides with vehicle position");
    }
    return std::clamp(local.x / n, -1.0, 1.0) * max_steer_deg;
}

double motor_torque(double speed, double car_power, double speed_limit) {
    const double headroom = std::max(0.0, 1.0 - speed / speed_limit);
    return car_power * 30.0 * headroom;
}

double brake_torque(double brake_factor, double brake_power) {
    return brake_power * brake_factor;
}

void step_vehicle(VehicleState& v, const VehicleParams& p, double speed_limit, double dt) {
    // Longitudinal: motor is cut while any brake demand is active; brake force
    // opposes motion and may not push the vehicle backwards within a step.
    const double motor = v.brake_factor > 0.0 ? 0.0 : motor_torque(v.speed, p.car_power, speed_limit);
    const double tractive_force = 2.0 * motor / p.wheel_radius;
    const double brake_force =
        v.speed > 0.0 ? 4.0 * brake_torque(v.brake_factor, p.brake_power) / p.wheel_radius : 0.0;
    const double accel = (tractive_force - brake_force) / p.mass;
    const double new_speed = std::max(0.0, v.speed + accel * dt);

    // Yaw: kinematic bicycle on the updated speed.
    const double yaw_rate = new_speed / p.wheelbase * std::tan(deg2rad(v.steer_angle));
    const double new_yaw = norm_deg(v.yaw + rad2deg(yaw_rate) * dt);

    // Position: along the updated heading at the updated speed.
    v.pos += heading_dir(new_yaw) * (new_speed * dt);
    v.yaw = new_yaw;
    v.speed = new_speed;

    if (v.speed < kStoppedSpeed) {
        v.stopped_timer += dt;
    } else {
        v.stopped_timer = 0.0;
    }
}

NavResult advance_navigation(VehicleState& v, const Network& net, const VehicleParams& p,
                             RngStream& paths) {
    NavResult out;
    const PathContainer* c = &net.containers[v.path_id];
    const std::size_t count = c->waypoints.size();

    if (v.waypoint_index < count &&
        (c->waypoints[v.waypoint_index].pos - v.pos).norm() < kWaypointReach) {
        ++v.waypoint_index;
        out.advanced = true;
    }

    if (v.waypoint_index >= count) {
        out.left_container = true;
        out.prev_container = v.path_id;
        if (c->next_ways.empty()) {
            // Dead end: snap back to this container's entry and run it again.
            out.respawned = true;
            v.pos = c->waypoints.front().pos;
            v.yaw = c->waypoints.front().heading;
            v.waypoint_index = 1;
        } else {
            const std::size_t pick =
                c->next_ways.size() == 1
                    ? 0
                    : static_cast<std::size_t>(paths.uniform_int(
                          static_cast<std::uint64_t>(c->next_ways.size())));
            v.path_id = c->next_ways[pick];
            v.waypoint_index = 0;
            c = &net.containers[v.path_id];
        }
    }

    if (out.advanced || out.left_container) {
        const Vec2 target = c->waypoints[v.waypoint_index].pos;
        if ((target - v.pos).norm() >= 1e-9) {
            v.steer_angle = steering_angle(v.pos, v.yaw, target, p.max_steer);
        }
    }
    return out;
}

}  // namespace trafficlab
