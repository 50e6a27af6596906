#include "trafficlab/collision.hpp"

namespace trafficlab {

namespace {

std::optional<Contact> make_contact(const Obb& box_a, const Obb& box_b, const Vec2& vel_a,
                                    const Vec2& vel_b) {
    const SatResult sat = sat_obb(box_a, box_b);
    if (sat.separation >= 0.0) return std::nullopt;
    Contact c;
    c.normal = sat.axis;
    c.penetration = -sat.separation;
    c.relative_speed_along_normal = dot(vel_b - vel_a, sat.axis);
    return c;
}

}  // namespace

std::optional<Contact> contact_vehicle_vehicle(const VehicleState& a, const VehicleState& b,
                                               const Vec2& vel_a, const Vec2& vel_b) {
    std::optional<Contact> c = make_contact(a.footprint(), b.footprint(), vel_a, vel_b);
    if (c) {
        c->a_id = a.id;
        c->b_id = b.id;
        c->b_is_obstacle = false;
    }
    return c;
}

std::optional<Contact> contact_vehicle_obstacle(const VehicleState& a, const NetObstacle& o,
                                                const Vec2& vel_a) {
    std::optional<Contact> c = make_contact(a.footprint(), o.box, vel_a, Vec2{0.0, 0.0});
    if (c) {
        c->a_id = a.id;
        c->b_id = o.id;
        c->b_is_obstacle = true;
    }
    return c;
}

std::vector<Contact> detect_contacts(const std::vector<VehicleState>& vehicles,
                                     const std::vector<NetObstacle>& obstacles) {
    std::vector<Contact> out;
    for (std::size_t i = 0; i < vehicles.size(); ++i) {
        const VehicleState& a = vehicles[i];
        if (!a.alive) continue;
        const Vec2 vel_a = heading_dir(a.yaw) * a.speed;
        for (std::size_t j = i + 1; j < vehicles.size(); ++j) {
            const VehicleState& b = vehicles[j];
            if (!b.alive) continue;
            const Vec2 vel_b = heading_dir(b.yaw) * b.speed;
            if (auto c = contact_vehicle_vehicle(a, b, vel_a, vel_b)) out.push_back(*c);
        }
        for (const NetObstacle& o : obstacles) {
            if (auto c = contact_vehicle_obstacle(a, o, vel_a)) out.push_back(*c);
        }
    }
    return out;
}

ImpulseResult resolve_impulse(const Contact& c, const Vec2& vel_a, const Vec2& vel_b,
                              double inv_mass_a, double inv_mass_b, double restitution,
                              double correction) {
    ImpulseResult r{vel_a, vel_b, Vec2{0, 0}, Vec2{0, 0}};
    const double inv_sum = inv_mass_a + inv_mass_b;
    if (inv_sum <= 0.0) return r;

    const double closing = dot(vel_b - vel_a, c.normal);
    if (closing < 0.0) {  // only approaching pairs exchange an impulse
        const double j = -(1.0 + restitution) * closing / inv_sum;
        r.vel_a -= c.normal * (j * inv_mass_a);
        r.vel_b += c.normal * (j * inv_mass_b);
    }

    const double push = correction * c.penetration / inv_sum;
    r.shift_a = c.normal * (-push * inv_mass_a);
    r.shift_b = c.normal * (push * inv_mass_b);
    return r;
}

SeverityOutcome severity_tick(VehicleState& v, const ContactSummary& now, double sim_time,
                              double dt) {
    SeverityOutcome out;
    SeverityState& s = v.severity;

    if (!s.in_collision) {
        if (!now.penetrating) return out;
        // Episode opens on overlap; the kind is fixed by what it opened with.
        s.in_collision = true;
        s.kind = now.vehicle_involved ? CollisionKind::VehicleVehicle
                                      : CollisionKind::VehicleNonVehicle;
        s.episode_seconds = 0.0;
        s.stopped_during_collision = 0.0;
        s.partner = now.first_partner;
        s.partner_is_obstacle = now.first_partner_is_obstacle;
        if (s.kind == CollisionKind::VehicleVehicle) {
            out.started_vv = true;
        } else {
            out.started_vnv = true;
        }
    } else if (!now.touching) {
        // Contact ended: close and reset the episode state.
        out.closed = severity_flush(v, sim_time);
        return out;
    }

    s.episode_seconds += dt;
    if (v.speed < kStoppedSpeed) {
        s.stopped_during_collision += dt;
    }
    if (s.stopped_during_collision > kSideRayCutoff) {
        s.side_rays_disabled = true;
    }
    if (s.stopped_during_collision > kSeriousCutoff && !s.serious) {
        s.serious = true;
        out.became_serious = true;
    }
    if (s.stopped_during_collision > kRemovalCutoff && !s.removed) {
        s.removed = true;
        v.alive = false;
        out.became_removed = true;
        out.closed = severity_flush(v, sim_time);
    }
    return out;
}

std::optional<SeverityEvent> severity_flush(VehicleState& v, double sim_time) {
    SeverityState& s = v.severity;
    if (!s.in_collision) return std::nullopt;
    SeverityEvent e;
    e.time = sim_time;
    e.vehicle = v.id;
    e.partner = s.partner;
    e.partner_is_obstacle = s.partner_is_obstacle;
    e.kind = s.kind;
    e.episode_duration = s.episode_seconds;
    e.serious = s.serious;
    e.removed = s.removed;
    s.reset_episode();
    return e;
}

}  // namespace trafficlab
