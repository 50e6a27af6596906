#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "trafficlab/geom.hpp"
#include "trafficlab/rng.hpp"

namespace trafficlab {

// ---------------------------------------------------------------------------
// Road graph types
// ---------------------------------------------------------------------------

struct Waypoint {
    Vec2 pos;
    double heading = 0.0;  // degrees, clockwise from +z
};

enum class PathKind : std::uint8_t { Road, Link };

// One directed road segment: an ordered polyline plus the set of containers a
// vehicle may continue onto from the final waypoint.
struct PathContainer {
    std::uint32_t id = 0;
    PathKind kind = PathKind::Road;
    std::vector<Waypoint> waypoints;          // 2..12 entries
    std::vector<std::uint32_t> next_ways;     // ids; empty = dead end (validation flags)

    double length() const;
    double first_segment_length() const;
};

enum class ObstacleKind : std::uint8_t { Curb, Building, Boundary };

struct NetObstacle {
    std::uint32_t id = 0;
    ObstacleKind kind = ObstacleKind::Curb;
    Obb box;
};

// Static description of a signalized intersection. Group A gates the
// north-south street's inbound containers, group B the east-west street's.
struct SignalSite {
    std::uint32_t id = 0;
    Vec2 pos;
    std::vector<std::uint32_t> approaches_a;
    std::vector<std::uint32_t> approaches_b;
};

struct Network {
    std::vector<PathContainer> containers;  // sorted by id; id == index
    std::vector<NetObstacle> obstacles;     // sorted by id; id == index
    std::vector<SignalSite> signals;        // sorted by id; id == index
    Vec2 center;                            // world center (observation normalization)
    Vec2 half_extent;                       // per-axis half extents

    void recompute_bounds();
    const PathContainer& container(std::uint32_t id) const { return containers.at(id); }
};

// ---------------------------------------------------------------------------
// Construction operations
// ---------------------------------------------------------------------------

// Point every waypoint at its successor; the last keeps its predecessor's
// heading. Throws CoincidentWaypoints when consecutive points are closer
// than 1e-9.
void orient_waypoints(PathContainer& container);

// Connectivity acceptance rule between a container's final waypoint f and a
// candidate container's first waypoint w: 8 <= |w - f| <= 35 and the relative
// heading (w minus f, normalized to [0, 360)) lies in [340, 360) U [0, 80].
constexpr double kLinkMinDist = 8.0;
constexpr double kLinkMaxDist = 35.0;
bool link_angle_ok(double relative_heading_deg);
bool link_allowed(const PathContainer& from, const PathContainer& to);

// Rebuild every container's next_ways by literal predicate filtering (self
// excluded). Quadratic by design; networks stay small.
void infer_next_ways(std::vector<PathContainer>& containers);

struct ValidationReport {
    std::size_t container_count = 0;
    std::size_t signal_count = 0;
    std::size_t obstacle_count = 0;
    std::vector<std::uint32_t> dead_ends;   // flagged, not fatal
    bool strongly_connected = false;
    std::vector<std::string> problems;      // hard violations
    bool ok() const { return problems.empty(); }
};

ValidationReport validate_network(const Network& net);

// ---------------------------------------------------------------------------
// City generation
// ---------------------------------------------------------------------------

enum class CityScale : std::uint8_t { VerySmall, Small, Medium, Large };

struct CityGenConfig {
    CityScale scale = CityScale::Small;
    int layout_index = 0;        // -1 draws one of the per-scale patterns from seed
    std::uint64_t seed = 0;
    double dist_center = 0.0;    // 0 = derive from scale (150/200/300/350)
};

double scale_dist_center(CityScale scale);
int scale_layout_count(CityScale scale);  // 1, 2, 4, 4
std::vector<Vec2> scale_block_layout(CityScale scale, int layout_index, double dist_center);

Network generate_city(const CityGenConfig& config);

// ---------------------------------------------------------------------------
// Spawning (single placement cycle; the engine interleaves cycles with
// warm-up simulation so spawn points drain between cycles)
// ---------------------------------------------------------------------------

struct SpawnConfig {
    bool intense_traffic = false;
    std::uint32_t cycles = 50;
    double extra_spawn_fraction = 0.40;  // position of the extra vehicle on long first segments
    double min_gap_distance = 50.0;      // first-segment length that triggers the extra
    double warmup_seconds = 1.0;         // simulated time between cycles
};

struct SpawnPlacement {
    std::uint32_t container = 0;
    Vec2 pos;
    double heading = 0.0;
    std::uint32_t target_waypoint = 1;
};

// Positions in `occupied` (plus earlier placements of the same cycle) block a
// placement within one vehicle length.
std::vector<SpawnPlacement> spawn_cycle(const Network& net, const SpawnConfig& cfg,
                                        const std::vector<Vec2>& occupied,
                                        double vehicle_length = 4.5);

// ---------------------------------------------------------------------------
// Serialization: line-based text, stable ordering, bit-exact round trip
// ---------------------------------------------------------------------------

std::string serialize_network(const Network& net);
Network parse_network(const std::string& text);
void save_network(const Network& net, const std::string& path);
Network load_network(const std::string& path);

}  // namespace trafficlab
