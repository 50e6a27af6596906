#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "trafficlab/errors.hpp"
#include "trafficlab/network.hpp"

namespace trafficlab {
namespace {

void put_num(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

const char* kind_name(PathKind k) { return k == PathKind::Road ? "road" : "link"; }
const char* kind_name(ObstacleKind k) {
    switch (k) {
        case ObstacleKind::Curb: return "curb";
        case ObstacleKind::Building: return "building";
        default: return "boundary";
    }
}

// Sequential whitespace-token reader; the line layout is cosmetic.
class TokenReader {
  public:
    explicit TokenReader(const std::string& text) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) tokens_.push_back(tok);
    }
    const std::string& next(const char* what) {
        if (pos_ >= tokens_.size())
            throw IoError(std::string("network text ended while reading ") + what);
        return tokens_[pos_++];
    }
    void expect(const char* literal) {
        const std::string& tok = next(literal);
        if (tok != literal)
            throw IoError("expected '" + std::string(literal) + "', found '" + tok + "'");
    }
    double num(const char* what) {
        const std::string& tok = next(what);
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw IoError("bad number '" + tok + "' for " + what);
        return v;
    }
    std::uint64_t uint(const char* what) {
        const double v = num(what);
        if (v < 0 || v != static_cast<double>(static_cast<std::uint64_t>(v)))
            throw IoError(std::string("expected a non-negative integer for ") + what);
        return static_cast<std::uint64_t>(v);
    }
    bool done() const { return pos_ == tokens_.size(); }

  private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

void require_zero_y(double y) {
    if (y != 0.0) throw IoError("vertical coordinate must be 0");
}

}  // namespace

std::string serialize_network(const Network& net) {
    std::string out;
    out.reserve(1 << 16);
    out += "trafficlab-net 1\n";
    out += "containers " + std::to_string(net.containers.size()) + "\n";
    for (const auto& c : net.containers) {
        out += "container " + std::to_string(c.id) + " ";
        out += kind_name(c.kind);
        out += " " + std::to_string(c.waypoints.size()) + "\n";
        for (const auto& wp : c.waypoints) {
            out += "wp ";
            put_num(out, wp.pos.x);
            out += " 0 ";
            put_num(out, wp.pos.z);
            out += " ";
            put_num(out, wp.heading);
            out += "\n";
        }
        out += "next " + std::to_string(c.next_ways.size());
        for (std::uint32_t id : c.next_ways) out += " " + std::to_string(id);
        out += "\n";
    }
    out += "obstacles " + std::to_string(net.obstacles.size()) + "\n";
    for (const auto& o : net.obstacles) {
        out += "obstacle " + std::to_string(o.id) + " ";
        out += kind_name(o.kind);
        out += " ";
        put_num(out, o.box.center.x);
        out += " 0 ";
        put_num(out, o.box.center.z);
        out += " ";
        put_num(out, o.box.hx);
        out += " ";
        put_num(out, o.box.hz);
        out += " ";
        put_num(out, o.box.yaw);
        out += "\n";
    }
    out += "signals " + std::to_string(net.signals.size()) + "\n";
    for (const auto& s : net.signals) {
        out += "signal " + std::to_string(s.id) + " ";
        put_num(out, s.pos.x);
        out += " 0 ";
        put_num(out, s.pos.z);
        out += "\n";
        out += "a " + std::to_string(s.approaches_a.size());
        for (std::uint32_t id : s.approaches_a) out += " " + std::to_string(id);
        out += "\nb " + std::to_string(s.approaches_b.size());
        for (std::uint32_t id : s.approaches_b) out += " " + std::to_string(id);
        out += "\n";
    }
    out += "end\n";
    return out;
}

Network parse_network(const std::string& text) {
    TokenReader r(text);
    r.expect("trafficlab-net");
    if (r.uint("format version") != 1) throw IoError("unsupported network format version");

    Network net;
    r.expect("containers");
    const std::uint64_t ncont = r.uint("container count");
    net.containers.reserve(ncont);
    for (std::uint64_t i = 0; i < ncont; ++i) {
        r.expect("container");
        PathContainer c;
        c.id = static_cast<std::uint32_t>(r.uint("container id"));
        const std::string& kind = r.next("container kind");
        if (kind == "road") c.kind = PathKind::Road;
        else if (kind == "link") c.kind = PathKind::Link;
        else throw IoError("unknown container kind '" + kind + "'");
        const std::uint64_t nwp = r.uint("waypoint count");
        c.waypoints.reserve(nwp);
        for (std::uint64_t k = 0; k < nwp; ++k) {
            r.expect("wp");
            Waypoint wp;
            wp.pos.x = r.num("waypoint x");
            require_zero_y(r.num("waypoint y"));
            wp.pos.z = r.num("waypoint z");
            wp.heading = r.num("waypoint heading");
            c.waypoints.push_back(wp);
        }
        r.expect("next");
        const std::uint64_t nn = r.uint("next count");
        c.next_ways.reserve(nn);
        for (std::uint64_t k = 0; k < nn; ++k)
            c.next_ways.push_back(static_cast<std::uint32_t>(r.uint("next id")));
        net.containers.push_back(std::move(c));
    }

    r.expect("obstacles");
    const std::uint64_t nobs = r.uint("obstacle count");
    net.obstacles.reserve(nobs);
    for (std::uint64_t i = 0; i < nobs; ++i) {
        r.expect("obstacle");
        NetObstacle o;
        o.id = static_cast<std::uint32_t>(r.uint("obstacle id"));
        const std::string& kind = r.next("obstacle kind");
        if (kind == "curb") o.kind = ObstacleKind::Curb;
        else if (kind == "building") o.kind = ObstacleKind::Building;
        else if (kind == "boundary") o.kind = ObstacleKind::Boundary;
        else throw IoError("unknown obstacle kind '" + kind + "'");
        o.box.center.x = r.num("obstacle x");
        require_zero_y(r.num("obstacle y"));
        o.box.center.z = r.num("obstacle z");
        o.box.hx = r.num("obstacle half-width");
        o.box.hz = r.num("obstacle half-length");
        o.box.yaw = r.num("obstacle yaw");
        net.obstacles.push_back(o);
    }

    r.expect("signals");
    const std::uint64_t nsig = r.uint("signal count");
    net.signals.reserve(nsig);
    for (std::uint64_t i = 0; i < nsig; ++i) {
        r.expect("signal");
        SignalSite s;
        s.id = static_cast<std::uint32_t>(r.uint("signal id"));
        s.pos.x = r.num("signal x");
        require_zero_y(r.num("signal y"));
        s.pos.z = r.num("signal z");
        r.expect("a");
        const std::uint64_t na = r.uint("group-a approach count");
        for (std::uint64_t k = 0; k < na; ++k)
            s.approaches_a.push_back(static_cast<std::uint32_t>(r.uint("group-a approach id")));
        r.expect("b");
        const std::uint64_t nb = r.uint("group-b approach count");
        for (std::uint64_t k = 0; k < nb; ++k)
            s.approaches_b.push_back(static_cast<std::uint32_t>(r.uint("group-b approach id")));
        net.signals.push_back(std::move(s));
    }
    r.expect("end");
    if (!r.done()) throw IoError("trailing content after network end marker");

    net.recompute_bounds();
    return net;
}

void save_network(const Network& net, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const std::string text = serialize_network(net);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failed for '" + path + "'");
}

Network load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

}  // namespace trafficlab
