#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trafficlab/collision.hpp"
#include "trafficlab/vehicle.hpp"

namespace trafficlab {

// Seven 5-unit/s speed-time bins; the top bin is closed at 35 and absorbs
// anything faster.
inline constexpr int kSpeedBinCount = 7;
int speed_bin(double speed);

struct FuelCo2Params {
    double idle_gallons_per_hour = 0.3;
    double move_gallons_per_mile = 0.04;
    double units_per_mile = 1609.34;
    double co2_grams_per_gallon = 8887.0;
};

struct FuelCo2 {
    double fuel_gallons = 0.0;
    double co2_grams = 0.0;
};

struct VehicleMetrics {
    double distance_total = 0.0;           // units
    double stopped_total = 0.0;            // seconds below the stopped threshold
    double stopped_current_streak = 0.0;   // consecutive stopped seconds
    std::array<double, kSpeedBinCount> speed_time = {};  // seconds per bin
    // Derived at capture time from the fields above.
    double fuel_gallons = 0.0;
    double co2_grams = 0.0;

    double speed_time_sum() const;
};

// One tick of accounting for an alive vehicle.
void record_tick(VehicleMetrics& m, double speed, double dt);

// Total fuel burned: idle burn over stopped time plus per-mile burn over
// distance; CO2 follows from fuel. Defined even for a vehicle that never moved.
FuelCo2 estimate_fuel_co2(const VehicleMetrics& m, const FuelCo2Params& p = {});

// Per-mile intensities. Throws ZeroDistance when the vehicle never moved
// (absolute totals from estimate_fuel_co2 remain valid).
FuelCo2 fuel_co2_per_mile(const VehicleMetrics& m, const FuelCo2Params& p = {});

struct GlobalMetrics {
    std::uint64_t vv_collisions = 0;       // vehicle-vehicle episodes entered
    std::uint64_t vnv_collisions = 0;      // vehicle-vs-world episodes entered
    std::uint64_t serious_collisions = 0;  // episodes that crossed the serious bar
    std::uint64_t pass_throughs = 0;       // green-light stop-line crossings
    std::uint64_t removed_vehicles = 0;
    std::uint64_t active_vehicles = 0;
    std::uint64_t spawned_vehicles = 0;

    std::uint64_t total_collisions() const { return vv_collisions + vnv_collisions; }
};

// CSV emission. Floats print with six decimals; rows are ordered by vehicle id.
std::string vehicle_metrics_csv_header();
std::string vehicle_metrics_csv_row(double time, const VehicleState& v, const VehicleMetrics& m);

std::string collision_log_csv_header();
std::string collision_log_csv_row(const SeverityEvent& e);

std::string format_fixed(double value);  // six-decimal fixed-point

}  // namespace trafficlab
