#pragma once
#include <algorithm>
#include <array>
#include <cstdint>

#include "trafficlab/geom.hpp"

namespace trafficlab {

// Fixed simulation step, seconds.
inline constexpr double kDt = 0.02;

// Vehicle footprint, ground-plane box aligned with the heading.
inline constexpr double kVehicleLength = 4.5;
inline constexpr double kVehicleWidth = 1.9;

// Speeds below this count as "stopped" for timers and speed-time bins.
inline constexpr double kStoppedSpeed = 0.1;

// Brake directives live on a shared 0..6000 scale; 6000 is a full stop demand.
inline constexpr double kBrakeScaleMax = 6000.0;

// Steering authority shrinks as the wheelbase grows, clamped to [35, 72] deg.
inline double derive_max_steer(double wheelbase) {
    return std::clamp(35.0 + (3.5 - wheelbase) * 20.0, 35.0, 72.0);
}

struct VehicleParams {
    double mass = 4000.0;          // kg
    double wheel_radius = 0.35;    // units
    double wheelbase = 2.8;        // units between axles
    double car_power = 120.0;      // motor torque scale, 60..200
    double brake_power = 8.0;      // brake torque scale, 5..10
    double speed_limit = 30.0;     // cruise target, 20..35 units/s
    double max_steer = derive_max_steer(2.8);  // degrees

    // Recorded tuning values for a suspension model the point-mass integrator
    // does not simulate; kept so scenario files round-trip losslessly.
    double com_y_offset = -0.05;
    double suspension_spring = 25000.0;
    double suspension_damper = 1500.0;
    double suspension_distance = 0.05;
    double wheel_mass = 1500.0;
};

enum class CollisionKind : std::uint8_t { None = 0, VehicleVehicle, VehicleNonVehicle };

// Per-vehicle collision-episode state machine. An episode opens on first
// overlap, persists while the vehicle stays in (or within a hair of) contact,
// and escalates on time spent stopped inside it.
struct SeverityState {
    bool in_collision = false;
    CollisionKind kind = CollisionKind::None;
    double episode_seconds = 0.0;           // time since the episode opened
    double stopped_during_collision = 0.0;  // accrues while stopped; pauses while moving
    bool side_rays_disabled = false;        // tripped after 7 s stopped-in-collision
    bool serious = false;                   // tripped after 30 s
    bool removed = false;                   // tripped after 60 s; vehicle leaves the world
    std::uint32_t partner = 0;              // first partner of the current episode
    bool partner_is_obstacle = false;

    void reset_episode() {
        in_collision = false;
        kind = CollisionKind::None;
        episode_seconds = 0.0;
        stopped_during_collision = 0.0;
        side_rays_disabled = false;
        partner = 0;
        partner_is_obstacle = false;
        // `serious` and `removed` latch for the life of the vehicle.
    }
};

enum class RayTarget : std::uint8_t { None = 0, Vehicle, Obstacle };

struct RayHit {
    double distance = 0.0;
    RayTarget target = RayTarget::None;
};

// Ray slots; side rays fan out at a fixed angle either side of the heading.
enum RaySlot : int { kRayCenter = 0, kRayLeft = 1, kRayRight = 2 };

struct VehicleState {
    std::uint32_t id = 0;
    Vec2 pos;                        // ground-plane position
    double yaw = 0.0;                // degrees clockwise from +z
    double speed = 0.0;              // units/s, never negative
    std::uint32_t path_id = 0;       // current path container
    std::uint32_t waypoint_index = 0;  // waypoint currently steered toward
    double steer_angle = 0.0;        // degrees, positive steers right
    double brake_factor = 0.0;       // 0..6000 demanded this tick
    double stopped_timer = 0.0;      // consecutive seconds below the stopped threshold
    bool alive = true;
    SeverityState severity;
    std::array<RayHit, 3> rays{};    // latest sensing results; persist between
                                     // sampling frames of the stagger cycle

    Obb footprint() const {
        return Obb{pos, kVehicleWidth / 2.0, kVehicleLength / 2.0, yaw};
    }
    // Mid-front of the footprint; ray origin and stop-line reference point.
    Vec2 front() const { return pos + heading_dir(yaw) * (kVehicleLength / 2.0); }
};

}  // namespace trafficlab
