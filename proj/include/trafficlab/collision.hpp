#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "trafficlab/network.hpp"
#include "trafficlab/vehicle.hpp"

namespace trafficlab {

// Two footprints (or a footprint and an obstacle) in overlap. The normal is
// the minimum-translation axis pointing from `a` toward `b`; penetration is
// the overlap depth along it. relative_speed_along_normal is the closing rate:
// negative while approaching, positive while separating.
struct Contact {
    std::uint32_t a_id = 0;  // always a vehicle
    std::uint32_t b_id = 0;  // vehicle, or obstacle when b_is_obstacle
    bool b_is_obstacle = false;
    Vec2 normal;
    double penetration = 0.0;
    double relative_speed_along_normal = 0.0;
};

// Contacts keep a collision episode alive while the pair stays within this
// separation of touching, even after positional correction has resolved the
// overlap itself.
inline constexpr double kTouchBand = 0.1;

// Narrow phase for one pair. Velocities are the ground-plane velocity vectors.
std::optional<Contact> contact_vehicle_vehicle(const VehicleState& a, const VehicleState& b,
                                               const Vec2& vel_a, const Vec2& vel_b);
std::optional<Contact> contact_vehicle_obstacle(const VehicleState& a, const NetObstacle& o,
                                                const Vec2& vel_a);

// All contacts in a small scene by exhaustive pairing; vehicle pairs appear
// once with a_id < b_id. Reference path for tests and compact scenarios — the
// engine feeds the narrow phase from its broad-phase grid instead.
std::vector<Contact> detect_contacts(const std::vector<VehicleState>& vehicles,
                                     const std::vector<NetObstacle>& obstacles);

// Impulse resolution for one contact between bodies with the given inverse
// masses (0 = immovable). Applies a restitution impulse only to approaching
// contacts; always splits a positional push-out of `correction` * penetration
// across the pair by inverse mass.
struct ImpulseResult {
    Vec2 vel_a, vel_b;       // post-impulse velocities
    Vec2 shift_a, shift_b;   // positional corrections to apply
};
ImpulseResult resolve_impulse(const Contact& c, const Vec2& vel_a, const Vec2& vel_b,
                              double inv_mass_a, double inv_mass_b, double restitution = 0.1,
                              double correction = 0.8);

// Stopped-in-collision thresholds (strict: trips on the tick that exceeds).
inline constexpr double kSideRayCutoff = 7.0;
inline constexpr double kSeriousCutoff = 30.0;
inline constexpr double kRemovalCutoff = 60.0;

// What this tick's contact pass saw for one vehicle, summarized for the
// severity state machine.
struct ContactSummary {
    bool penetrating = false;        // overlap with anything this tick
    bool touching = false;           // within the touch band of anything
    bool vehicle_involved = false;   // some penetrating partner is a vehicle
    std::uint32_t first_partner = 0;
    bool first_partner_is_obstacle = false;
};

// Closed-episode record for the collision event log.
struct SeverityEvent {
    double time = 0.0;  // close time, seconds
    std::uint32_t vehicle = 0;
    std::uint32_t partner = 0;
    bool partner_is_obstacle = false;
    CollisionKind kind = CollisionKind::None;
    double episode_duration = 0.0;
    bool serious = false;
    bool removed = false;
};

// Flags raised by one severity update.
struct SeverityOutcome {
    bool started_vv = false;
    bool started_vnv = false;
    bool became_serious = false;
    bool became_removed = false;
    std::optional<SeverityEvent> closed;
};

// Per-tick severity update. Episodes open on overlap, persist while touching,
// accrue stopped time whenever the vehicle is below the stopped threshold
// (pausing, not resetting, while it moves), trip the side-ray / serious /
// removal thresholds in order, and close one tick after contact ends or
// immediately on removal.
SeverityOutcome severity_tick(VehicleState& v, const ContactSummary& now, double sim_time,
                              double dt);

// Force-close an open episode (end of run) so logs reconcile with counters.
std::optional<SeverityEvent> severity_flush(VehicleState& v, double sim_time);

}  // namespace trafficlab
