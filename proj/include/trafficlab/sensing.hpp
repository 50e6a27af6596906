#pragma once
#include <cstdint>
#include <vector>

#include "trafficlab/vehicle.hpp"

namespace trafficlab {

// Forward-sensing geometry: one long ray along the steered heading plus two
// short flank rays. Vehicles are re-sampled in a four-frame rotation; results
// persist between sampling frames.
struct RayConfig {
    double center_range = 6.0;
    double side_range = 2.0;
    double side_angle_deg = 37.0;
    int frame_cycle = 4;
};

// Something a ray can strike: a footprint or obstacle box.
struct SenseTarget {
    Obb box;
    RayTarget kind = RayTarget::Obstacle;
    std::uint32_t id = 0;
};

// True when `tick_index` is the vehicle's sampling frame in the rotation.
inline bool sensing_frame(std::uint64_t tick_index, std::uint32_t vehicle_id, int frame_cycle = 4) {
    const std::uint64_t cycle = static_cast<std::uint64_t>(frame_cycle);
    return tick_index % cycle == vehicle_id % cycle;
}

// Cast the three rays from the vehicle's front. The center ray follows
// yaw + steer of the current frame; flank rays sit at +/- side_angle off the
// yaw. Targets must not include the vehicle's own footprint. Flank rays report
// no hit while the vehicle's severity state has them disabled.
std::array<RayHit, 3> cast_rays(const VehicleState& v,
                                const std::vector<SenseTarget>& targets,
                                const RayConfig& cfg = {});

// Brake demand from ray hits: each hit contributes linearly from 0 at full
// range to the full scale at zero distance; misses contribute nothing; the
// strongest contribution wins.
double brake_factor_from_hits(const std::array<RayHit, 3>& hits, const RayConfig& cfg = {});

// Speed-limit enforcement: a brake demand of at least 1000 while above the
// limit, zero otherwise. Combined with other demands by taking the maximum.
double speed_limit_brake(double speed, double speed_limit);

}  // namespace trafficlab
