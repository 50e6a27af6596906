#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "trafficlab/errors.hpp"
#include "trafficlab/network.hpp"

namespace trafficlab {
namespace {

constexpr double kNodeHalf = 15.0;   // intersection box half-size along each street
constexpr double kLinkTrim = 8.5;    // shortening of a turn link's chord at each end
constexpr double kCurbOffset = 6.0;  // lateral curb distance from the centerline
constexpr double kBuildingInset = 8.0;
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

enum class Cardinal : std::uint8_t { N, E, S, W };

Cardinal right_of(Cardinal c) {
    switch (c) {
        case Cardinal::N: return Cardinal::E;
        case Cardinal::E: return Cardinal::S;
        case Cardinal::S: return Cardinal::W;
        default: return Cardinal::N;
    }
}

struct GridSpec {
    std::vector<double> xs, zs;
};

void push_sorted_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [](double a, double b) { return std::fabs(a - b) < 1e-6; }),
            v.end());
}

// Every generated city is a one-way grid. The perimeter runs clockwise (north
// edge eastbound, east edge southbound, and so on); interior streets alternate
// direction so each intersection offers a straight continuation and exactly
// one right turn.
GridSpec layout_grid(CityScale scale, int layout, double d) {
    GridSpec g;
    auto flank = [d](std::vector<double>& v, double c) {
        v.push_back(c - d / 2);
        v.push_back(c + d / 2);
    };
    auto mid = [d](std::vector<double>& v, double c) {
        v.push_back(c - d / 2);
        v.push_back(c);
        v.push_back(c + d / 2);
    };
    auto dense4 = [d](std::vector<double>& v, double c) {
        v.push_back(c - d / 2);
        v.push_back(c - d / 4);
        v.push_back(c + d / 4);
        v.push_back(c + d / 2);
    };
    auto dense6 = [d](std::vector<double>& v, double c) {
        v.push_back(c - d / 2);
        v.push_back(c - d / 6);
        v.push_back(c + d / 6);
        v.push_back(c + d / 2);
    };

    switch (scale) {
        case CityScale::VerySmall:
            flank(g.xs, 0.0);
            flank(g.zs, 0.0);
            break;
        case CityScale::Small:
            // Two blocks, stacked north (layout 0) or east (layout 1).
            if (layout == 0) {
                flank(g.xs, 0.0);
                flank(g.zs, 0.0);
                flank(g.zs, 1.5 * d);
            } else {
                flank(g.xs, 0.0);
                flank(g.xs, 1.5 * d);
                flank(g.zs, 0.0);
            }
            break;
        case CityScale::Medium:
            // Four blocks stacked north at spacing d; the layout index picks
            // which of them is the dense downtown with split cross-streets.
            g.xs = {-d / 2, -d / 4, 0.0, d / 4, d / 2};
            for (int k = 0; k < 4; ++k) {
                if (k == layout) dense4(g.zs, k * d);
                else mid(g.zs, k * d);
            }
            break;
        case CityScale::Large: {
            // Six dense blocks, arranged 2x3, 3x2, 1x6, or 6x1.
            std::vector<double> bx, bz;
            switch (layout) {
                case 0: bx = {0.0, d}; bz = {0.0, d, 2 * d}; break;
                case 1: bx = {0.0, d, 2 * d}; bz = {0.0, d}; break;
                case 2: bx = {0.0}; bz = {0.0, d, 2 * d, 3 * d, 4 * d, 5 * d}; break;
                default: bx = {0.0, d, 2 * d, 3 * d, 4 * d, 5 * d}; bz = {0.0}; break;
            }
            for (double c : bx) dense6(g.xs, c);
            for (double c : bz) dense6(g.zs, c);
            break;
        }
    }
    push_sorted_unique(g.xs);
    push_sorted_unique(g.zs);
    return g;
}

PathContainer make_polyline(std::uint32_t id, PathKind kind, Vec2 start, Vec2 end) {
    const double len = (end - start).norm();
    const int n = std::max(2, 1 + static_cast<int>(std::llround(len / 20.0)));
    PathContainer c;
    c.id = id;
    c.kind = kind;
    c.waypoints.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / (n - 1);
        c.waypoints[static_cast<std::size_t>(k)].pos = start + (end - start) * t;
    }
    orient_waypoints(c);
    return c;
}

}  // namespace

double scale_dist_center(CityScale scale) {
    switch (scale) {
        case CityScale::VerySmall: return 150.0;
        case CityScale::Small: return 200.0;
        case CityScale::Medium: return 300.0;
        default: return 350.0;
    }
}

int scale_layout_count(CityScale scale) {
    switch (scale) {
        case CityScale::VerySmall: return 1;
        case CityScale::Small: return 2;
        case CityScale::Medium: return 4;
        default: return 4;
    }
}

std::vector<Vec2> scale_block_layout(CityScale scale, int layout_index, double dist_center) {
    const double d = dist_center > 0 ? dist_center : scale_dist_center(scale);
    switch (scale) {
        case CityScale::VerySmall: return {{0.0, 0.0}};
        case CityScale::Small:
            return layout_index == 0 ? std::vector<Vec2>{{0.0, 0.0}, {0.0, 1.5 * d}}
                                     : std::vector<Vec2>{{0.0, 0.0}, {1.5 * d, 0.0}};
        case CityScale::Medium:
            return {{0.0, 0.0}, {0.0, d}, {0.0, 2 * d}, {0.0, 3 * d}};
        default:
            switch (layout_index) {
                case 0: return {{0, 0}, {d, 0}, {0, d}, {d, d}, {0, 2 * d}, {d, 2 * d}};
                case 1: return {{0, 0}, {d, 0}, {2 * d, 0}, {0, d}, {d, d}, {2 * d, d}};
                case 2: return {{0, 0}, {0, d}, {0, 2 * d}, {0, 3 * d}, {0, 4 * d}, {0, 5 * d}};
                default: return {{0, 0}, {d, 0}, {2 * d, 0}, {3 * d, 0}, {4 * d, 0}, {5 * d, 0}};
            }
    }
}

Network generate_city(const CityGenConfig& config) {
    const double d = config.dist_center > 0 ? config.dist_center : scale_dist_center(config.scale);
    if (std::fabs(d - scale_dist_center(config.scale)) > 1e-9)
        throw OutOfRange("dist_center " + std::to_string(d) + " does not match the scale");

    const int layout_count = scale_layout_count(config.scale);
    int layout = config.layout_index;
    if (layout < 0) {
        RngStream stream(derive_seed(config.seed, "network-gen"));
        layout = static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(layout_count)));
    } else if (layout >= layout_count) {
        throw InvalidLayoutIndex("layout index " + std::to_string(layout) +
                                 " out of range (scale provides " +
                                 std::to_string(layout_count) + ")");
    }

    const GridSpec grid = layout_grid(config.scale, layout, d);
    const std::size_t nx = grid.xs.size(), nz = grid.zs.size();
    auto node_pos = [&](std::size_t i, std::size_t j) { return Vec2{grid.xs[i], grid.zs[j]}; };
    auto node_index = [&](std::size_t i, std::size_t j) { return j * nx + i; };
    auto col_dir = [&](std::size_t i) {
        if (i == 0) return Cardinal::N;
        if (i == nx - 1) return Cardinal::S;
        return (i % 2 == 1) ? Cardinal::S : Cardinal::N;
    };
    auto row_dir = [&](std::size_t j) {
        if (j == 0) return Cardinal::W;
        if (j == nz - 1) return Cardinal::E;
        return (j % 2 == 1) ? Cardinal::E : Cardinal::W;
    };

    Network net;
    std::vector<std::uint32_t> col_in(nx * nz, kNone), col_out(nx * nz, kNone);
    std::vector<std::uint32_t> row_in(nx * nz, kNone), row_out(nx * nz, kNone);
    struct EdgeGeom {
        Vec2 from, to;  // node centers in travel order
    };
    std::vector<EdgeGeom> edge_geoms;

    auto add_edge = [&](Vec2 na, Vec2 nb, std::size_t out_node, std::size_t in_node,
                        std::vector<std::uint32_t>& outs, std::vector<std::uint32_t>& ins) {
        const Vec2 u = (nb - na) * (1.0 / (nb - na).norm());
        const std::uint32_t id = static_cast<std::uint32_t>(net.containers.size());
        net.containers.push_back(
            make_polyline(id, PathKind::Road, na + u * kNodeHalf, nb - u * kNodeHalf));
        outs[out_node] = id;
        ins[in_node] = id;
        edge_geoms.push_back({na, nb});
    };

    // Vertical street segments, column by column.
    for (std::size_t i = 0; i < nx; ++i) {
        const Cardinal dir = col_dir(i);
        for (std::size_t j = 0; j + 1 < nz; ++j) {
            if (dir == Cardinal::N)
                add_edge(node_pos(i, j), node_pos(i, j + 1), node_index(i, j),
                         node_index(i, j + 1), col_out, col_in);
            else
                add_edge(node_pos(i, j + 1), node_pos(i, j), node_index(i, j + 1),
                         node_index(i, j), col_out, col_in);
        }
    }
    // Horizontal street segments, row by row.
    for (std::size_t j = 0; j < nz; ++j) {
        const Cardinal dir = row_dir(j);
        for (std::size_t i = 0; i + 1 < nx; ++i) {
            if (dir == Cardinal::E)
                add_edge(node_pos(i, j), node_pos(i + 1, j), node_index(i, j),
                         node_index(i + 1, j), row_out, row_in);
            else
                add_edge(node_pos(i + 1, j), node_pos(i, j), node_index(i + 1, j),
                         node_index(i, j), row_out, row_in);
        }
    }

    // One right-turn link per intersection. With one-way streets exactly one
    // of (column turns onto row, row turns onto column) is a right turn.
    for (std::size_t j = 0; j < nz; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const std::size_t node = node_index(i, j);
            const Cardinal cd = col_dir(i), rd = row_dir(j);
            std::uint32_t in_id = kNone, out_id = kNone;
            if (right_of(cd) == rd) {
                in_id = col_in[node];
                out_id = row_out[node];
            } else {
                in_id = row_in[node];
                out_id = col_out[node];
            }
            if (in_id == kNone || out_id == kNone) continue;
            const Vec2 f = net.containers[in_id].waypoints.back().pos;
            const Vec2 w = net.containers[out_id].waypoints.front().pos;
            const Vec2 u = (w - f) * (1.0 / (w - f).norm());
            const std::uint32_t id = static_cast<std::uint32_t>(net.containers.size());
            net.containers.push_back(
                make_polyline(id, PathKind::Link, f + u * kLinkTrim, w - u * kLinkTrim));
        }
    }

    infer_next_ways(net.containers);

    // Curbs flank every street segment, stopping at the intersection boxes.
    for (const auto& eg : edge_geoms) {
        const Vec2 u = (eg.to - eg.from) * (1.0 / (eg.to - eg.from).norm());
        const Vec2 perp{u.z, -u.x};
        const Vec2 mid = (eg.from + eg.to) * 0.5;
        const double half_len = ((eg.to - eg.from).norm() - 2 * kNodeHalf) / 2.0;
        const double yaw = vec_heading(u);
        for (const double side : {+1.0, -1.0}) {
            NetObstacle o;
            o.id = static_cast<std::uint32_t>(net.obstacles.size());
            o.kind = ObstacleKind::Curb;
            o.box = Obb{mid + perp * (side * kCurbOffset), 0.5, half_len, yaw};
            net.obstacles.push_back(o);
        }
    }
    // One building footprint per city cell, inset from the surrounding streets.
    for (std::size_t j = 0; j + 1 < nz; ++j) {
        for (std::size_t i = 0; i + 1 < nx; ++i) {
            const double hx = (grid.xs[i + 1] - grid.xs[i]) / 2.0 - kBuildingInset;
            const double hz = (grid.zs[j + 1] - grid.zs[j]) / 2.0 - kBuildingInset;
            if (hx <= 0 || hz <= 0) continue;
            NetObstacle o;
            o.id = static_cast<std::uint32_t>(net.obstacles.size());
            o.kind = ObstacleKind::Building;
            o.box = Obb{{(grid.xs[i] + grid.xs[i + 1]) / 2, (grid.zs[j] + grid.zs[j + 1]) / 2},
                        hx, hz, 0.0};
            net.obstacles.push_back(o);
        }
    }
    // Four boundary walls just outside the perimeter streets.
    {
        const double x0 = grid.xs.front(), x1 = grid.xs.back();
        const double z0 = grid.zs.front(), z1 = grid.zs.back();
        const double mx = (x0 + x1) / 2, mz = (z0 + z1) / 2;
        const double hzspan = (z1 - z0) / 2 + kNodeHalf, hxspan = (x1 - x0) / 2 + kNodeHalf;
        const Obb walls[4] = {
            {{x0 - kCurbOffset, mz}, 0.5, hzspan, 0.0},   // west
            {{x1 + kCurbOffset, mz}, 0.5, hzspan, 0.0},   // east
            {{mx, z0 - kCurbOffset}, 0.5, hxspan, 90.0},  // south
            {{mx, z1 + kCurbOffset}, 0.5, hxspan, 90.0},  // north
        };
        for (const auto& w : walls) {
            NetObstacle o;
            o.id = static_cast<std::uint32_t>(net.obstacles.size());
            o.kind = ObstacleKind::Boundary;
            o.box = w;
            net.obstacles.push_back(o);
        }
    }

    // Signals at every T and X intersection (corners stay uncontrolled).
    // Group A gates the north-south street, group B the east-west street.
    for (std::size_t j = 0; j < nz; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const bool x_rail = (i == 0 || i == nx - 1);
            const bool z_rail = (j == 0 || j == nz - 1);
            if (x_rail && z_rail) continue;
            const std::size_t node = node_index(i, j);
            SignalSite s;
            s.id = static_cast<std::uint32_t>(net.signals.size());
            s.pos = node_pos(i, j);
            if (col_in[node] != kNone) s.approaches_a.push_back(col_in[node]);
            if (row_in[node] != kNone) s.approaches_b.push_back(row_in[node]);
            net.signals.push_back(s);
        }
    }

    net.recompute_bounds();
    return net;
}

}  // namespace trafficlab
