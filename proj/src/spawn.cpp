#include <vector>

#include "trafficlab/network.hpp"

namespace trafficlab {

// One placement sweep over all containers in id order. A point is usable
// when no existing vehicle (or earlier placement from the same sweep) sits
// within one vehicle length of it. With intense traffic enabled, containers
// whose first segment is longer than min_gap_distance receive a second
// vehicle partway down that segment.
std::vector<SpawnPlacement> spawn_cycle(const Network& net, const SpawnConfig& cfg,
                                        const std::vector<Vec2>& occupied,
                                        double vehicle_length) {
    std::vector<SpawnPlacement> placements;
    std::vector<Vec2> blocked = occupied;
    const double min_dist2 = vehicle_length * vehicle_length;

    auto is_free = [&](const Vec2& p) {
        for (const auto& q : blocked)
            if ((p - q).norm2() < min_dist2) return false;
        return true;
    };
    auto place = [&](std::uint32_t container, const Vec2& pos, double heading) {
        if (!is_free(pos)) return;
        placements.push_back({container, pos, heading, 1});
        blocked.push_back(pos);
    };

    for (const auto& c : net.containers) {
        if (c.waypoints.size() < 2) continue;
        place(c.id, c.waypoints[0].pos, c.waypoints[0].heading);
        if (cfg.intense_traffic && c.first_segment_length() > cfg.min_gap_distance) {
            const Vec2 extra = c.waypoints[0].pos +
                               (c.waypoints[1].pos - c.waypoints[0].pos) * cfg.extra_spawn_fraction;
            place(c.id, extra, c.waypoints[0].heading);
        }
    }
    return placements;
}

}  // namespace trafficlab
