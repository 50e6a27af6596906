#include "trafficlab/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "trafficlab/errors.hpp"

namespace trafficlab {

double PathContainer::length() const {
    double total = 0.0;
    for (std::size_t i = 1; i < waypoints.size(); ++i)
        total += (waypoints[i].pos - waypoints[i - 1].pos).norm();
    return total;
}

double PathContainer::first_segment_length() const {
    if (waypoints.size() < 2) return 0.0;
    return (waypoints[1].pos - waypoints[0].pos).norm();
}

void orient_waypoints(PathContainer& container) {
    auto& wps = container.waypoints;
    for (std::size_t i = 0; i + 1 < wps.size(); ++i) {
        const Vec2 delta = wps[i + 1].pos - wps[i].pos;
        if (delta.norm() < 1e-9)
            throw CoincidentWaypoints("container " + std::to_string(container.id) +
                                      ": waypoints " + std::to_string(i) + " and " +
                                      std::to_string(i + 1) + " coincide");
        wps[i].heading = vec_heading(delta);
    }
    if (wps.size() >= 2) wps.back().heading = wps[wps.size() - 2].heading;
}

bool link_angle_ok(double relative_heading_deg) {
    const double rel = norm_deg(relative_heading_deg);
    return (rel >= 340.0 && rel < 360.0) || rel <= 80.0;
}

bool link_allowed(const PathContainer& from, const PathContainer& to) {
    if (from.id == to.id) return false;
    if (from.waypoints.empty() || to.waypoints.empty()) return false;
    const Waypoint& f = from.waypoints.back();
    const Waypoint& w = to.waypoints.front();
    const double dist = (w.pos - f.pos).norm();
    if (dist < kLinkMinDist || dist > kLinkMaxDist) return false;
    return link_angle_ok(w.heading - f.heading);
}

void infer_next_ways(std::vector<PathContainer>& containers) {
    for (auto& from : containers) {
        from.next_ways.clear();
        for (const auto& to : containers)
            if (link_allowed(from, to)) from.next_ways.push_back(to.id);
    }
}

void Network::recompute_bounds() {
    Bounds b;
    for (const auto& c : containers)
        for (const auto& wp : c.waypoints) b.add(wp.pos);
    for (const auto& o : obstacles) {
        Vec2 corners[4];
        o.box.corners(corners);
        for (const auto& p : corners) b.add(p);
    }
    center = b.center();
    half_extent = b.half_extent();
}

namespace {

// Strong connectivity over containers with next_ways as edges: forward BFS
// from node 0 plus BFS over the reversed graph must both reach everything.
bool strongly_connected(const std::vector<PathContainer>& containers) {
    const std::size_t n = containers.size();
    if (n == 0) return false;
    std::vector<std::vector<std::uint32_t>> rev(n);
    for (const auto& c : containers)
        for (std::uint32_t nxt : c.next_ways)
            if (nxt < n) rev[nxt].push_back(c.id);

    auto bfs = [n](auto&& neighbors) {
        std::vector<char> seen(n, 0);
        std::deque<std::uint32_t> queue{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!queue.empty()) {
            const std::uint32_t cur = queue.front();
            queue.pop_front();
            for (std::uint32_t nxt : neighbors(cur)) {
                if (nxt < n && !seen[nxt]) {
                    seen[nxt] = 1;
                    ++count;
                    queue.push_back(nxt);
                }
            }
        }
        return count == n;
    };

    const bool fwd = bfs([&](std::uint32_t i) -> const std::vector<std::uint32_t>& {
        return containers[i].next_ways;
    });
    const bool bwd = bfs([&](std::uint32_t i) -> const std::vector<std::uint32_t>& {
        return rev[i];
    });
    return fwd && bwd;
}

}  // namespace

ValidationReport validate_network(const Network& net) {
    ValidationReport report;
    report.container_count = net.containers.size();
    report.signal_count = net.signals.size();
    report.obstacle_count = net.obstacles.size();
    auto problem = [&report](std::string msg) { report.problems.push_back(std::move(msg)); };

    const std::size_t n = net.containers.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = net.containers[i];
        const std::string tag = "container " + std::to_string(c.id);
        if (c.id != i) problem(tag + ": id does not match position " + std::to_string(i));
        if (c.waypoints.size() < 2 || c.waypoints.size() > 12)
            problem(tag + ": waypoint count " + std::to_string(c.waypoints.size()) +
                    " outside 2..12");
        for (std::size_t k = 0; k + 1 < c.waypoints.size(); ++k) {
            const Vec2 delta = c.waypoints[k + 1].pos - c.waypoints[k].pos;
            if (delta.norm() < 1e-9) {
                problem(tag + ": coincident waypoints at " + std::to_string(k));
                continue;
            }
            const double want = vec_heading(delta);
            double diff = std::fabs(norm_deg(c.waypoints[k].heading - want));
            diff = std::min(diff, 360.0 - diff);
            if (diff > 1e-6)
                problem(tag + ": waypoint " + std::to_string(k) + " heading off by " +
                        std::to_string(diff) + " deg");
        }
        if (c.waypoints.size() >= 2) {
            double diff = std::fabs(norm_deg(c.waypoints.back().heading -
                                             c.waypoints[c.waypoints.size() - 2].heading));
            diff = std::min(diff, 360.0 - diff);
            if (diff > 1e-6) problem(tag + ": final waypoint heading not inherited");
        }
        for (std::uint32_t nxt : c.next_ways) {
            if (nxt >= n) {
                problem(tag + ": next_ways references missing id " + std::to_string(nxt));
                continue;
            }
            if (nxt == c.id) problem(tag + ": links to itself");
            else if (!link_allowed(c, net.containers[nxt]))
                problem(tag + ": link to " + std::to_string(nxt) +
                        " violates the distance/heading rule");
        }
        if (c.next_ways.empty()) report.dead_ends.push_back(c.id);
    }

    for (std::size_t i = 0; i < net.signals.size(); ++i) {
        const auto& s = net.signals[i];
        if (s.id != i)
            problem("signal " + std::to_string(s.id) + ": id does not match position");
        for (const auto* group : {&s.approaches_a, &s.approaches_b})
            for (std::uint32_t cid : *group)
                if (cid >= n)
                    problem("signal " + std::to_string(s.id) +
                            ": approach references missing container " + std::to_string(cid));
    }
    for (std::size_t i = 0; i < net.obstacles.size(); ++i)
        if (net.obstacles[i].id != i)
            problem("obstacle " + std::to_string(net.obstacles[i].id) +
                    ": id does not match position");

    report.strongly_connected = strongly_connected(net.containers);
    return report;
}

}  // namespace trafficlab
