#include "trafficlab/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "trafficlab/errors.hpp"

namespace trafficlab {

int speed_bin(double speed) {
    const int idx = static_cast<int>(std::floor(speed / 5.0));
    return std::clamp(idx, 0, kSpeedBinCount - 1);
}

double VehicleMetrics::speed_time_sum() const {
    double s = 0.0;
    for (double t : speed_time) s += t;
    return s;
}

void record_tick(VehicleMetrics& m, double speed, double dt) {
    m.distance_total += speed * dt;
    m.speed_time[speed_bin(speed)] += dt;
    if (speed < kStoppedSpeed) {
        m.stopped_total += dt;
        m.stopped_current_streak += dt;
    } else {
        m.stopped_current_streak = 0.0;
    }
}

FuelCo2 estimate_fuel_co2(const VehicleMetrics& m, const FuelCo2Params& p) {
    const double miles = m.distance_total / p.units_per_mile;
    FuelCo2 out;
    out.fuel_gallons = p.idle_gallons_per_hour * (m.stopped_total / 3600.0) +
                       p.move_gallons_per_mile * miles;
    out.co2_grams = out.fuel_gallons * p.co2_grams_per_gallon;
    return out;
}

FuelCo2 fuel_co2_per_mile(const VehicleMetrics& m, const FuelCo2Params& p) {
    if (m.distance_total <= 0.0) {
        throw ZeroDistance("per-mile fuel/CO2 undefined for a vehicle with zero distance");
    }
    const double miles = m.distance_total / p.units_per_mile;
    const FuelCo2 abs = estimate_fuel_co2(m, p);
    return FuelCo2{abs.fuel_gallons / miles, abs.co2_grams / miles};
}

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string vehicle_metrics_csv_header() {
    return "time,vehicle_id,alive,distance_total,stopped_total,stopped_current_streak,"
           "speed_time_0_5,speed_time_5_10,speed_time_10_15,speed_time_15_20,"
           "speed_time_20_25,speed_time_25_30,speed_time_30_35,fuel_gallons,co2_grams";
}

std::string vehicle_metrics_csv_row(double time, const VehicleState& v, const VehicleMetrics& m) {
    std::string row = format_fixed(time);
    row += ',';
    row += std::to_string(v.id);
    row += ',';
    row += v.alive ? '1' : '0';
    row += ',';
    row += format_fixed(m.distance_total);
    row += ',';
    row += format_fixed(m.stopped_total);
    row += ',';
    row += format_fixed(m.stopped_current_streak);
    for (double t : m.speed_time) {
        row += ',';
        row += format_fixed(t);
    }
    row += ',';
    row += format_fixed(m.fuel_gallons);
    row += ',';
    row += format_fixed(m.co2_grams);
    return row;
}

std::string collision_log_csv_header() {
    return "time,vehicle_id,partner,kind,episode_duration,serious,removed";
}

std::string collision_log_csv_row(const SeverityEvent& e) {
    std::string row = format_fixed(e.time);
    row += ',';
    row += std::to_string(e.vehicle);
    row += ',';
    if (e.partner_is_obstacle) {
        row += "obstacle:";
    }
    row += std::to_string(e.partner);
    row += ',';
    row += e.kind == CollisionKind::VehicleVehicle ? "vv" : "vnv";
    row += ',';
    row += format_fixed(e.episode_duration);
    row += ',';
    row += e.serious ? '1' : '0';
    row += ',';
    row += e.removed ? '1' : '0';
    return row;
}

}  // namespace trafficlab
