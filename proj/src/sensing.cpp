#include "trafficlab/sensing.hpp"

#include <algorithm>
#include <optional>

namespace trafficlab {

namespace {

RayHit cast_one(const Vec2& origin, double heading_deg, double range,
                const std::vector<SenseTarget>& targets) {
    const Vec2 dir = heading_dir(heading_deg);
    RayHit best;  // target None, distance 0
    bool found = false;
    for (const SenseTarget& t : targets) {
        const std::optional<double> d = ray_obb(origin, dir, range, t.box);
        if (!d) continue;
        if (!found || *d < best.distance) {
            best.distance = *d;
            best.target = t.kind;
            found = true;
        }
    }
    return best;
}

}  // namespace

std::array<RayHit, 3> cast_rays(const VehicleState& v, const std::vector<SenseTarget>& targets,
                                const RayConfig& cfg) {
    const Vec2 origin = v.front();
    std::array<RayHit, 3> out{};
    out[kRayCenter] = cast_one(origin, v.yaw + v.steer_angle, cfg.center_range, targets);
    if (!v.severity.side_rays_disabled) {
        out[kRayLeft] = cast_one(origin, v.yaw - cfg.side_angle_deg, cfg.side_range, targets);
        out[kRayRight] = cast_one(origin, v.yaw + cfg.side_angle_deg, cfg.side_range, targets);
    }
    return out;
}

double brake_factor_from_hits(const std::array<RayHit, 3>& hits, const RayConfig& cfg) {
    const double ranges[3] = {cfg.center_range, cfg.side_range, cfg.side_range};
    double factor = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (hits[i].target == RayTarget::None) continue;
        const double f =
            std::clamp(kBrakeScaleMax * (1.0 - hits[i].distance / ranges[i]), 0.0, kBrakeScaleMax);
        factor = std::max(factor, f);
    }
    return factor;
}

double speed_limit_brake(double speed, double speed_limit) {
    return speed > speed_limit ? 1000.0 : 0.0;
}

}  // namespace trafficlab
