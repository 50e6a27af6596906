#include "trafficlab/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace trafficlab {

// ---------------------------------------------------------------------------
// SpatialGrid
// ---------------------------------------------------------------------------

void SpatialGrid::reset(const Bounds& bounds, double cell_size) {
    cell_ = cell_size;
    origin_ = bounds.lo;
    const double wx = std::max(bounds.hi.x - bounds.lo.x, cell_size);
    const double wz = std::max(bounds.hi.z - bounds.lo.z, cell_size);
    nx_ = static_cast<int>(std::ceil(wx / cell_));
    nz_ = static_cast<int>(std::ceil(wz / cell_));
    static_cells_.assign(static_cast<std::size_t>(nx_) * nz_, {});
    dynamic_cells_.assign(static_cast<std::size_t>(nx_) * nz_, {});
}

void SpatialGrid::cells_for(const Vec2& lo, const Vec2& hi, int& ix0, int& ix1, int& iz0,
                            int& iz1) const {
    ix0 = std::clamp(static_cast<int>(std::floor((lo.x - origin_.x) / cell_)), 0, nx_ - 1);
    ix1 = std::clamp(static_cast<int>(std::floor((hi.x - origin_.x) / cell_)), 0, nx_ - 1);
    iz0 = std::clamp(static_cast<int>(std::floor((lo.z - origin_.z) / cell_)), 0, nz_ - 1);
    iz1 = std::clamp(static_cast<int>(std::floor((hi.z - origin_.z) / cell_)), 0, nz_ - 1);
}

namespace {

Bounds box_bounds(const Obb& box) {
    Bounds b;
    for (const Vec2& c : box.corners()) b.add(c);
    return b;
}

}  // namespace

void SpatialGrid::insert_static(const std::vector<NetObstacle>& obstacles) {
    for (const NetObstacle& o : obstacles) {
        const Bounds b = box_bounds(o.box);
        int ix0, ix1, iz0, iz1;
        cells_for(b.lo, b.hi, ix0, ix1, iz0, iz1);
        for (int iz = iz0; iz <= iz1; ++iz) {
            for (int ix = ix0; ix <= ix1; ++ix) {
                static_cells_[static_cast<std::size_t>(iz) * nx_ + ix].push_back(o.id);
            }
        }
    }
}

void SpatialGrid::rebuild(const std::vector<VehicleState>& vehicles) {
    for (auto& cell : dynamic_cells_) cell.clear();
    for (const VehicleState& v : vehicles) {
        if (!v.alive) continue;
        const Bounds b = box_bounds(v.footprint());
        int ix0, ix1, iz0, iz1;
        cells_for(b.lo, b.hi, ix0, ix1, iz0, iz1);
        for (int iz = iz0; iz <= iz1; ++iz) {
            for (int ix = ix0; ix <= ix1; ++ix) {
                dynamic_cells_[static_cast<std::size_t>(iz) * nx_ + ix].push_back(v.id);
            }
        }
    }
}

void SpatialGrid::gather(const Vec2& pos, double radius, std::vector<std::uint32_t>& vehicles_out,
                         std::vector<std::uint32_t>& obstacles_out) const {
    vehicles_out.clear();
    obstacles_out.clear();
    int ix0, ix1, iz0, iz1;
    cells_for(Vec2{pos.x - radius, pos.z - radius}, Vec2{pos.x + radius, pos.z + radius}, ix0, ix1,
              iz0, iz1);
    for (int iz = iz0; iz <= iz1; ++iz) {
        for (int ix = ix0; ix <= ix1; ++ix) {
            const std::size_t idx = static_cast<std::size_t>(iz) * nx_ + ix;
            vehicles_out.insert(vehicles_out.end(), dynamic_cells_[idx].begin(),
                                dynamic_cells_[idx].end());
            obstacles_out.insert(obstacles_out.end(), static_cells_[idx].begin(),
                                 static_cells_[idx].end());
        }
    }
    std::sort(vehicles_out.begin(), vehicles_out.end());
    vehicles_out.erase(std::unique(vehicles_out.begin(), vehicles_out.end()), vehicles_out.end());
    std::sort(obstacles_out.begin(), obstacles_out.end());
    obstacles_out.erase(std::unique(obstacles_out.begin(), obstacles_out.end()),
                        obstacles_out.end());
}

// ---------------------------------------------------------------------------
// World
// ---------------------------------------------------------------------------

World::World(Network net, std::uint64_t seed, EngineConfig cfg)
    : net_(std::move(net)), cfg_(std::move(cfg)), streams_(seed) {
    signals_.reserve(net_.signals.size());
    for (const SignalSite& site : net_.signals) {
        SignalController s;
        s.id = site.id;
        signals_.push_back(s);
        reset_signal(signals_.back());
    }
    approach_of_.assign(net_.containers.size(), ApproachRef{});
    for (std::size_t i = 0; i < net_.signals.size(); ++i) {
        for (std::uint32_t cid : net_.signals[i].approaches_a) {
            approach_of_[cid] = ApproachRef{static_cast<std::int32_t>(i), true};
        }
        for (std::uint32_t cid : net_.signals[i].approaches_b) {
            approach_of_[cid] = ApproachRef{static_cast<std::int32_t>(i), false};
        }
    }
    Bounds b;
    b.add(net_.center - net_.half_extent);
    b.add(net_.center + net_.half_extent);
    b.pad(cfg_.grid_cell);
    grid_.reset(b, cfg_.grid_cell);
    grid_.insert_static(net_.obstacles);
}

void World::reset_signal(SignalController& s) const {
    const std::uint32_t id = s.id;
    s = SignalController{};
    s.id = id;
    s.green_a = s.green_b = cfg_.initial_green;
    s.pending_green_a = s.pending_green_b = cfg_.initial_green;
}

void World::add_vehicle(const SpawnPlacement& p) {
    VehicleState v;
    v.id = static_cast<std::uint32_t>(vehicles_.size());
    v.pos = p.pos;
    v.yaw = p.heading;
    v.path_id = p.container;
    v.waypoint_index = p.target_waypoint;

    VehicleParams params;
    const std::size_t pick = static_cast<std::size_t>(
        streams_.spawning.uniform_int(static_cast<std::uint64_t>(cfg_.power_profiles.size())));
    params.car_power = cfg_.power_profiles[pick];
    params.max_steer = derive_max_steer(params.wheelbase);

    const Vec2 target = net_.containers[v.path_id].waypoints[v.waypoint_index].pos;
    if ((target - v.pos).norm() >= 1e-9) {
        v.steer_angle = steering_angle(v.pos, v.yaw, target, params.max_steer);
    }

    vehicles_.push_back(v);
    params_.push_back(params);
    vmetrics_.emplace_back();
    ++gmetrics_.spawned_vehicles;
    ++gmetrics_.active_vehicles;
}

std::uint32_t World::add_scripted_vehicle(VehicleState v, const VehicleParams& params) {
    v.id = static_cast<std::uint32_t>(vehicles_.size());
    vehicles_.push_back(v);
    params_.push_back(params);
    vmetrics_.emplace_back();
    ++gmetrics_.spawned_vehicles;
    if (v.alive) ++gmetrics_.active_vehicles;
    return v.id;
}

void World::spawn_sweep() {
    std::vector<Vec2> occupied;
    occupied.reserve(vehicles_.size());
    for (const VehicleState& v : vehicles_) {
        if (v.alive) occupied.push_back(v.pos);
    }
    for (const SpawnPlacement& p : spawn_cycle(net_, cfg_.spawn, occupied, kVehicleLength)) {
        add_vehicle(p);
    }
}

void World::rebaseline() {
    clock_.tick_index = 0;
    for (VehicleState& v : vehicles_) {
        // The measurement epoch starts clean: seeding-phase episodes are
        // forgotten and any vehicle parked out of the world comes back (still
        // mid-pileup, so an episode re-opens naturally on the next tick).
        v.alive = true;
        v.severity = SeverityState{};
        v.stopped_timer = 0.0;
    }
    for (VehicleMetrics& m : vmetrics_) m = VehicleMetrics{};
    collision_log_.clear();
    gmetrics_ = GlobalMetrics{};
    gmetrics_.spawned_vehicles = vehicles_.size();
    gmetrics_.active_vehicles = vehicles_.size();
    for (SignalController& s : signals_) reset_signal(s);
}

void World::populate() {
    const std::uint64_t warm_ticks = static_cast<std::uint64_t>(
        std::llround(cfg_.spawn.warmup_seconds / clock_.dt));
    for (int cycle = 0; cycle < cfg_.spawn.cycles; ++cycle) {
        spawn_sweep();
        if (cycle + 1 < cfg_.spawn.cycles) run_ticks(warm_ticks);
    }
    rebaseline();
}

void World::repopulate() {
    vehicles_.clear();
    params_.clear();
    vmetrics_.clear();
    collision_log_.clear();
    gmetrics_ = GlobalMetrics{};
    global_speed_limit_ = 30.0;
    clock_.tick_index = 0;
    for (SignalController& s : signals_) reset_signal(s);
    populate();
}

void World::set_global_speed_limit(double limit) { global_speed_limit_ = limit; }

void World::schedule_green(std::size_t signal_index, double seconds) {
    set_green_duration(signals_.at(signal_index), true, seconds);
    set_green_duration(signals_.at(signal_index), false, seconds);
}

std::uint64_t World::alive_count() const {
    std::uint64_t n = 0;
    for (const VehicleState& v : vehicles_) n += v.alive ? 1 : 0;
    return n;
}

std::vector<std::uint32_t> World::alive_ids() const {
    std::vector<std::uint32_t> out;
    out.reserve(vehicles_.size());
    for (const VehicleState& v : vehicles_) {
        if (v.alive) out.push_back(v.id);
    }
    return out;
}

RewardInputs World::reward_inputs() const {
    RewardInputs r;
    for (const VehicleMetrics& m : vmetrics_) {
        r.stopped_sum += m.stopped_total;
        r.distance_sum += m.distance_total;
        r.bin5_sum += m.speed_time[5];
    }
    r.pass_throughs = gmetrics_.pass_throughs;
    r.serious = gmetrics_.serious_collisions;
    r.vv_episodes = gmetrics_.vv_collisions;
    return r;
}

double World::remaining_path_distance(const VehicleState& v) const {
    const PathContainer& c = net_.containers[v.path_id];
    double d = (c.waypoints[v.waypoint_index].pos - v.pos).norm();
    for (std::size_t i = v.waypoint_index; i + 1 < c.waypoints.size(); ++i) {
        d += (c.waypoints[i + 1].pos - c.waypoints[i].pos).norm();
    }
    return d;
}

void World::tick() {
    const double dt = clock_.dt;
    const double t_end = static_cast<double>(clock_.tick_index + 1) * dt;
    const std::size_t n = vehicles_.size();

    // (1) Signal phase machines.
    for (SignalController& s : signals_) tick_signal(s, dt);

    // (2) Sensing for this tick's cohort; signal gating for every approach.
    grid_.rebuild(vehicles_);
    for (VehicleState& v : vehicles_) {
        if (!v.alive || !sensing_frame(clock_.tick_index, v.id, cfg_.rays.frame_cycle)) continue;
        const Vec2 origin = v.front();
        grid_.gather(origin, cfg_.rays.center_range + 2.5, cand_vehicles_, cand_obstacles_);
        target_scratch_.clear();
        for (std::uint32_t id : cand_vehicles_) {
            if (id == v.id) continue;
            target_scratch_.push_back(
                SenseTarget{vehicles_[id].footprint(), RayTarget::Vehicle, id});
        }
        for (std::uint32_t id : cand_obstacles_) {
            target_scratch_.push_back(SenseTarget{net_.obstacles[id].box, RayTarget::Obstacle, id});
        }
        v.rays = cast_rays(v, target_scratch_, cfg_.rays);
    }
    gate_scratch_.assign(n, 0.0);
    for (const VehicleState& v : vehicles_) {
        if (!v.alive) continue;
        const ApproachRef ar = approach_of_[v.path_id];
        if (ar.signal < 0) continue;
        const double d = std::max(0.0, remaining_path_distance(v) - kVehicleLength / 2.0);
        gate_scratch_[v.id] = approach_gate(signals_[ar.signal], ar.group_a, d);
    }

    // (3) Per-vehicle control: steering toward the target waypoint; brake
    // demand is the strongest of ray proximity, signal gate, and limit excess.
    for (VehicleState& v : vehicles_) {
        if (!v.alive) continue;
        const Vec2 target = net_.containers[v.path_id].waypoints[v.waypoint_index].pos;
        if ((target - v.pos).norm() >= 1e-9) {
            v.steer_angle = steering_angle(v.pos, v.yaw, target, params_[v.id].max_steer);
        }
        const double demand = std::max({brake_factor_from_hits(v.rays, cfg_.rays),
                                        gate_scratch_[v.id],
                                        speed_limit_brake(v.speed, global_speed_limit_)});
        v.brake_factor = std::min(demand, kBrakeScaleMax);
    }

    // (4) Integration.
    for (VehicleState& v : vehicles_) {
        if (!v.alive) continue;
        step_vehicle(v, params_[v.id], global_speed_limit_, dt);
    }

    // (5) Contact detection and impulse resolution.
    grid_.rebuild(vehicles_);
    summary_scratch_.assign(n, ContactSummary{});
    vel_scratch_.assign(n, Vec2{0.0, 0.0});
    shift_scratch_.assign(n, Vec2{0.0, 0.0});
    touched_scratch_.assign(n, 0);  // bit 0: velocity cached; bit 1: impulsed
    auto vel_of = [&](std::uint32_t id) -> Vec2& {
        if (!(touched_scratch_[id] & 1)) {
            vel_scratch_[id] = heading_dir(vehicles_[id].yaw) * vehicles_[id].speed;
            touched_scratch_[id] |= 1;
        }
        return vel_scratch_[id];
    };
    auto note_pen = [&](std::uint32_t vid, std::uint32_t partner, bool partner_obstacle) {
        ContactSummary& s = summary_scratch_[vid];
        if (!partner_obstacle && !s.vehicle_involved) {
            // A vehicle partner decides the episode kind; remember the first.
            s.first_partner = partner;
            s.first_partner_is_obstacle = false;
            s.vehicle_involved = true;
        } else if (!s.penetrating) {
            s.first_partner = partner;
            s.first_partner_is_obstacle = partner_obstacle;
        }
        s.penetrating = true;
        s.touching = true;
    };

    std::vector<Contact> contacts;
    const double pair_reach = 2.0 * std::hypot(kVehicleWidth / 2.0, kVehicleLength / 2.0) +
                              kTouchBand + 0.5;
    for (const VehicleState& a : vehicles_) {
        if (!a.alive) continue;
        grid_.gather(a.pos, pair_reach, cand_vehicles_, cand_obstacles_);
        const Obb box_a = a.footprint();
        for (std::uint32_t bid : cand_vehicles_) {
            if (bid <= a.id) continue;
            const VehicleState& b = vehicles_[bid];
            const SatResult sat = sat_obb(box_a, b.footprint());
            if (sat.separation <= kTouchBand) {
                summary_scratch_[a.id].touching = true;
                summary_scratch_[bid].touching = true;
            }
            if (sat.separation < 0.0) {
                Contact c;
                c.a_id = a.id;
                c.b_id = bid;
                c.b_is_obstacle = false;
                c.normal = sat.axis;
                c.penetration = -sat.separation;
                c.relative_speed_along_normal = dot(vel_of(bid) - vel_of(a.id), sat.axis);
                contacts.push_back(c);
                note_pen(a.id, bid, false);
                note_pen(bid, a.id, false);
            }
        }
        for (std::uint32_t oid : cand_obstacles_) {
            const SatResult sat = sat_obb(box_a, net_.obstacles[oid].box);
            if (sat.separation <= kTouchBand) summary_scratch_[a.id].touching = true;
            if (sat.separation < 0.0) {
                Contact c;
                c.a_id = a.id;
                c.b_id = oid;
                c.b_is_obstacle = true;
                c.normal = sat.axis;
                c.penetration = -sat.separation;
                c.relative_speed_along_normal = dot(Vec2{0.0, 0.0} - vel_of(a.id), sat.axis);
                contacts.push_back(c);
                note_pen(a.id, oid, true);
            }
        }
    }
    for (const Contact& c : contacts) {
        const double inv_a = 1.0 / params_[c.a_id].mass;
        const double inv_b = c.b_is_obstacle ? 0.0 : 1.0 / params_[c.b_id].mass;
        const Vec2 va = vel_of(c.a_id);
        const Vec2 vb = c.b_is_obstacle ? Vec2{0.0, 0.0} : vel_of(c.b_id);
        const ImpulseResult r = resolve_impulse(c, va, vb, inv_a, inv_b, cfg_.restitution,
                                                cfg_.position_correction);
        if (r.vel_a.x != va.x || r.vel_a.z != va.z) {
            vel_scratch_[c.a_id] = r.vel_a;
            touched_scratch_[c.a_id] |= 2;
        }
        shift_scratch_[c.a_id] += r.shift_a;
        if (!c.b_is_obstacle) {
            if (r.vel_b.x != vb.x || r.vel_b.z != vb.z) {
                vel_scratch_[c.b_id] = r.vel_b;
                touched_scratch_[c.b_id] |= 2;
            }
            shift_scratch_[c.b_id] += r.shift_b;
        }
    }
    for (const Contact& c : contacts) {
        for (int side = 0; side < (c.b_is_obstacle ? 1 : 2); ++side) {
            const std::uint32_t id = side == 0 ? c.a_id : c.b_id;
            VehicleState& v = vehicles_[id];
            v.pos += shift_scratch_[id];
            shift_scratch_[id] = Vec2{0.0, 0.0};  // applied once
            if (touched_scratch_[id] & 2) {
                // Scalar commit: vehicles have no reverse gear and keep their
                // heading; the impulse survives as its along-heading share.
                v.speed = std::max(0.0, dot(vel_scratch_[id], heading_dir(v.yaw)));
                touched_scratch_[id] &= ~2;
            }
        }
    }

    // (6) Collision severity state machines and removals.
    for (VehicleState& v : vehicles_) {
        if (!v.alive) continue;
        const SeverityOutcome o = severity_tick(v, summary_scratch_[v.id], t_end, dt);
        if (o.started_vv) ++gmetrics_.vv_collisions;
        if (o.started_vnv) ++gmetrics_.vnv_collisions;
        if (o.became_serious) ++gmetrics_.serious_collisions;
        if (o.became_removed) {
            ++gmetrics_.removed_vehicles;
            --gmetrics_.active_vehicles;
        }
        if (o.closed) collision_log_.push_back(*o.closed);
    }

    // (7) Navigation advancement; green-light stop-line crossings.
    for (VehicleState& v : vehicles_) {
        if (!v.alive) continue;
        const NavResult nav = advance_navigation(v, net_, params_[v.id], streams_.paths);
        if (nav.left_container && !nav.respawned) {
            const ApproachRef ar = approach_of_[nav.prev_container];
            if (ar.signal >= 0 && group_green(signals_[ar.signal], ar.group_a)) {
                ++signals_[ar.signal].pass_through_count;
                ++gmetrics_.pass_throughs;
            }
        }
    }

    // (8) Metrics.
    for (const VehicleState& v : vehicles_) {
        if (!v.alive) continue;
        record_tick(vmetrics_[v.id], v.speed, dt);
    }

    ++clock_.tick_index;
}

void World::run_ticks(std::uint64_t ticks) {
    for (std::uint64_t i = 0; i < ticks; ++i) tick();
}

SpatialQueryResult World::spatial_query(const Vec2& pos, double radius) const {
    SpatialQueryResult out;
    // Cell coverage of each footprint makes the plain disc AABB sufficient:
    // any footprint intersecting the disc has a covered cell inside it.
    grid_.gather(pos, radius, cand_vehicles_, cand_obstacles_);
    for (std::uint32_t id : cand_vehicles_) {
        if (vehicles_[id].alive && obb_point_distance(pos, vehicles_[id].footprint()) <= radius) {
            out.vehicle_ids.push_back(id);
        }
    }
    for (std::uint32_t id : cand_obstacles_) {
        if (obb_point_distance(pos, net_.obstacles[id].box) <= radius) {
            out.obstacle_ids.push_back(id);
        }
    }
    return out;
}

void World::finalize_log() {
    const double t_now = clock_.sim_time();
    for (VehicleState& v : vehicles_) {
        if (auto e = severity_flush(v, t_now)) collision_log_.push_back(*e);
    }
}

// ---------------------------------------------------------------------------
// Hashing
// ---------------------------------------------------------------------------

namespace {

struct Fnv {
    std::uint64_t h = 1469598103934665603ULL;
    void bytes(const void* data, std::size_t len) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    }
    void f64(double v) {
        const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
        bytes(&bits, sizeof bits);
    }
    void u64(std::uint64_t v) { bytes(&v, sizeof v); }
};

}  // namespace

std::uint64_t World::world_hash() const {
    Fnv fnv;
    fnv.u64(clock_.tick_index);
    for (const VehicleState& v : vehicles_) {
        fnv.u64(v.id);
        fnv.f64(v.pos.x);
        fnv.f64(v.pos.z);
        fnv.f64(v.yaw);
        fnv.f64(v.speed);
        fnv.u64(v.path_id);
        fnv.u64(v.waypoint_index);
        fnv.f64(v.steer_angle);
        fnv.f64(v.brake_factor);
        fnv.f64(v.stopped_timer);
        fnv.u64(v.alive ? 1 : 0);
        fnv.u64(static_cast<std::uint64_t>(v.severity.kind));
        fnv.u64((v.severity.in_collision ? 1 : 0) | (v.severity.side_rays_disabled ? 2 : 0) |
                (v.severity.serious ? 4 : 0) | (v.severity.removed ? 8 : 0));
        fnv.f64(v.severity.episode_seconds);
        fnv.f64(v.severity.stopped_during_collision);
        for (const RayHit& r : v.rays) {
            fnv.f64(r.distance);
            fnv.u64(static_cast<std::uint64_t>(r.target));
        }
    }
    for (const SignalController& s : signals_) {
        fnv.u64(s.id);
        fnv.u64(static_cast<std::uint64_t>(s.phase));
        fnv.f64(s.phase_elapsed);
        fnv.f64(s.green_a);
        fnv.f64(s.green_b);
        fnv.f64(s.pending_green_a);
        fnv.f64(s.pending_green_b);
        fnv.u64(s.pass_through_count);
        for (double t : s.phase_time) fnv.f64(t);
    }
    for (const VehicleMetrics& m : vmetrics_) {
        fnv.f64(m.distance_total);
        fnv.f64(m.stopped_total);
        fnv.f64(m.stopped_current_streak);
        for (double t : m.speed_time) fnv.f64(t);
    }
    fnv.u64(gmetrics_.vv_collisions);
    fnv.u64(gmetrics_.vnv_collisions);
    fnv.u64(gmetrics_.serious_collisions);
    fnv.u64(gmetrics_.pass_throughs);
    fnv.u64(gmetrics_.removed_vehicles);
    fnv.u64(gmetrics_.active_vehicles);
    fnv.u64(gmetrics_.spawned_vehicles);
    fnv.f64(global_speed_limit_);
    return fnv.h;
}

// ---------------------------------------------------------------------------
// CSV output
// ---------------------------------------------------------------------------

std::string World::vehicle_metrics_rows(double capture_time) {
    std::string out;
    for (std::size_t i = 0; i < vehicles_.size(); ++i) {
        const FuelCo2 f = estimate_fuel_co2(vmetrics_[i], cfg_.fuel);
        vmetrics_[i].fuel_gallons = f.fuel_gallons;
        vmetrics_[i].co2_grams = f.co2_grams;
        out += vehicle_metrics_csv_row(capture_time, vehicles_[i], vmetrics_[i]);
        out += '\n';
    }
    return out;
}

std::string World::vehicle_metrics_csv(double capture_time) {
    std::string out = vehicle_metrics_csv_header();
    out += '\n';
    out += vehicle_metrics_rows(capture_time);
    return out;
}

std::string World::collision_log_csv() const {
    std::string out = collision_log_csv_header();
    out += '\n';
    for (const SeverityEvent& e : collision_log_) {
        out += collision_log_csv_row(e);
        out += '\n';
    }
    return out;
}

std::string World::signal_log_rows(double capture_time) const {
    std::string out;
    for (const SignalController& s : signals_) {
        out += format_fixed(capture_time);
        out += ',';
        out += std::to_string(s.id);
        out += ',';
        out += std::to_string(static_cast<int>(s.phase));
        out += ',';
        out += format_fixed(s.green_a);
        out += ',';
        out += format_fixed(s.green_b);
        out += ',';
        out += std::to_string(s.pass_through_count);
        for (double t : s.phase_time) {
            out += ',';
            out += format_fixed(t);
        }
        out += '\n';
    }
    return out;
}

std::string World::signal_log_csv(double capture_time) const {
    std::string out =
        "time,signal_id,phase,green_a,green_b,pass_throughs,"
        "time_green_a,time_yellow_a,time_all_red_a,time_green_b,time_yellow_b,time_all_red_b";
    out += '\n';
    out += signal_log_rows(capture_time);
    return out;
}

}  // namespace trafficlab
