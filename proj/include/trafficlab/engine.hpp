#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "trafficlab/collision.hpp"
#include "trafficlab/dynamics.hpp"
#include "trafficlab/metrics.hpp"
#include "trafficlab/network.hpp"
#include "trafficlab/rng.hpp"
#include "trafficlab/sensing.hpp"
#include "trafficlab/signals.hpp"
#include "trafficlab/vehicle.hpp"

namespace trafficlab {

// Fixed-step clock; simulated time is always tick_index * dt and is the only
// clock the simulation knows about.
struct SimClock {
    std::uint64_t tick_index = 0;
    double dt = kDt;
    double time_scale = 20.0;  // advisory, logging only

    double sim_time() const { return static_cast<double>(tick_index) * dt; }
};

// Uniform-grid broad phase over the network extent. Static obstacle cells are
// filled once; vehicle cells are rebuilt every tick.
class SpatialGrid {
  public:
    void reset(const Bounds& bounds, double cell_size);
    void insert_static(const std::vector<NetObstacle>& obstacles);
    void rebuild(const std::vector<VehicleState>& vehicles);
    // Candidate ids whose grid cells intersect the disc; deduplicated,
    // ascending. A superset of the exact answer — callers narrow-check.
    void gather(const Vec2& pos, double radius, std::vector<std::uint32_t>& vehicles_out,
                std::vector<std::uint32_t>& obstacles_out) const;

  private:
    void cells_for(const Vec2& lo, const Vec2& hi, int& ix0, int& ix1, int& iz0, int& iz1) const;

    Vec2 origin_{0.0, 0.0};
    double cell_ = 12.0;
    int nx_ = 1;
    int nz_ = 1;
    std::vector<std::vector<std::uint32_t>> static_cells_;
    std::vector<std::vector<std::uint32_t>> dynamic_cells_;
};

struct SpatialQueryResult {
    std::vector<std::uint32_t> vehicle_ids;
    std::vector<std::uint32_t> obstacle_ids;
};

struct EngineConfig {
    SpawnConfig spawn;
    double initial_green = 30.0;  // both groups of every signal at start
    FuelCo2Params fuel;
    RayConfig rays;
    double restitution = 0.1;
    double position_correction = 0.8;
    double grid_cell = 12.0;
    // Parameter profiles drawn uniformly per spawned vehicle.
    std::vector<double> power_profiles = {90.0, 120.0, 150.0, 200.0};
};

// Cumulative tallies the reward function differences across a decision window.
struct RewardInputs {
    double stopped_sum = 0.0;    // seconds stopped, summed over vehicles
    double distance_sum = 0.0;   // distance, summed over vehicles
    double bin5_sum = 0.0;       // seconds in the 25-30 speed band
    std::uint64_t pass_throughs = 0;
    std::uint64_t serious = 0;
    std::uint64_t vv_episodes = 0;
};

// The deterministic world: network, vehicles, signals, metrics, and the tick
// pipeline binding them. Single-threaded; identical (network, seed, config,
// inputs) reproduce identical state bit-for-bit.
class World {
  public:
    World(Network net, std::uint64_t seed, EngineConfig cfg = {});

    // Fill the world with traffic: placement sweeps interleaved with warm-up
    // ticks, then metrics, logs, counters, signals, and the clock rebaseline
    // to a fresh t = 0.
    void populate();
    // Scripted scenario setup: append one vehicle in an exact state (id is
    // assigned and returned). Counters update as for a normal spawn.
    std::uint32_t add_scripted_vehicle(VehicleState v, const VehicleParams& params);
    // Drop all vehicles and populate again (streams keep advancing, so
    // successive populations differ while the whole history stays a function
    // of the construction seed).
    void repopulate();

    void tick();
    void run_ticks(std::uint64_t n);

    // Global inputs.
    void set_global_speed_limit(double limit);
    double global_speed_limit() const { return global_speed_limit_; }
    // Schedule both green durations of one signal (effective at next onsets).
    void schedule_green(std::size_t signal_index, double seconds);

    // Views.
    const Network& network() const { return net_; }
    const SimClock& clock() const { return clock_; }
    const std::vector<VehicleState>& vehicles() const { return vehicles_; }
    const std::vector<VehicleParams>& vehicle_params() const { return params_; }
    const std::vector<VehicleMetrics>& metrics() const { return vmetrics_; }
    const std::vector<SignalController>& signals() const { return signals_; }
    const GlobalMetrics& global_metrics() const { return gmetrics_; }
    const std::vector<SeverityEvent>& collision_log() const { return collision_log_; }
    RngStreams& streams() { return streams_; }
    std::uint64_t alive_count() const;
    std::vector<std::uint32_t> alive_ids() const;
    RewardInputs reward_inputs() const;

    // Exact set of alive vehicles / obstacles whose footprints intersect the
    // disc (radius 0: those containing the point).
    SpatialQueryResult spatial_query(const Vec2& pos, double radius) const;

    // Order-sensitive digest of the full dynamic state.
    std::uint64_t world_hash() const;

    // Close still-open collision episodes into the log (end of run).
    void finalize_log();

    // CSV outputs. The vehicle-metrics writer refreshes derived fuel fields.
    std::string vehicle_metrics_csv(double capture_time);
    std::string vehicle_metrics_rows(double capture_time);
    std::string collision_log_csv() const;
    std::string signal_log_csv(double capture_time) const;
    std::string signal_log_rows(double capture_time) const;

  private:
    void add_vehicle(const SpawnPlacement& p);
    void spawn_sweep();
    void rebaseline();
    void reset_signal(SignalController& s) const;
    // Remaining along-path distance from the vehicle to its container's final
    // waypoint (stop line of a signal approach).
    double remaining_path_distance(const VehicleState& v) const;

    Network net_;
    EngineConfig cfg_;
    RngStreams streams_;
    SimClock clock_;
    std::vector<VehicleState> vehicles_;
    std::vector<VehicleParams> params_;
    std::vector<VehicleMetrics> vmetrics_;
    std::vector<SignalController> signals_;
    GlobalMetrics gmetrics_;
    std::vector<SeverityEvent> collision_log_;
    double global_speed_limit_ = 30.0;

    // container id -> (signal index, is group A), or -1 when not an approach.
    struct ApproachRef {
        std::int32_t signal = -1;
        bool group_a = false;
    };
    std::vector<ApproachRef> approach_of_;

    SpatialGrid grid_;
    // Per-tick scratch (kept to avoid reallocation).
    std::vector<double> gate_scratch_;
    std::vector<Vec2> vel_scratch_;
    std::vector<Vec2> shift_scratch_;
    std::vector<ContactSummary> summary_scratch_;
    std::vector<char> touched_scratch_;
    mutable std::vector<std::uint32_t> cand_vehicles_;
    mutable std::vector<std::uint32_t> cand_obstacles_;
    std::vector<SenseTarget> target_scratch_;
};

}  // namespace trafficlab
