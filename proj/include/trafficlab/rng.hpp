#pragma once
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

// Self-contained deterministic RNG. The standard <random> distributions are
// implementation-defined, so every draw here is spelled out explicitly and behaves
// identically on any conforming platform.

namespace trafficlab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ seeded via splitmix64.
class RngStream {
public:
    RngStream() : RngStream(0) {}
    explicit RngStream(std::uint64_t seed) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
        have_spare_ = false;
        spare_ = 0.0;
    }

    std::uint64_t next_u64() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return (next_u64() >> 11) * (1.0 / 9007199254740992.0); }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n), n > 0. Rejection keeps it unbiased.
    std::uint64_t uniform_int(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller (cached spare keeps draws deterministic).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do { u1 = uniform01(); } while (u1 <= 0.0);
        u2 = uniform01();
        double mag = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = mag * std::sin(a);
        have_spare_ = true;
        return mag * std::cos(a);
    }

    // Fisher-Yates partial shuffle: deterministic sample of k indices out of n
    // without replacement.
    std::vector<std::uint32_t> sample_indices(std::uint32_t n, std::uint32_t k);

private:
    std::uint64_t s_[4] = {};
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Named stream derivation: independent substreams from one master seed. The same
// (seed, name) pair always yields the same stream, regardless of creation order.
std::uint64_t derive_seed(std::uint64_t master, const std::string& name);

struct RngStreams {
    std::uint64_t master = 0;
    explicit RngStreams(std::uint64_t seed = 0) { reseed(seed); }
    void reseed(std::uint64_t seed) {
        master = seed;
        network_gen.reseed(derive_seed(seed, "network-gen"));
        spawning.reseed(derive_seed(seed, "spawning"));
        paths.reseed(derive_seed(seed, "paths"));
        episode_reset.reseed(derive_seed(seed, "episode-reset"));
        observation_sampling.reseed(derive_seed(seed, "observation-sampling"));
        policy.reseed(derive_seed(seed, "policy"));
    }
    RngStream network_gen;
    RngStream spawning;
    RngStream paths;
    RngStream episode_reset;
    RngStream observation_sampling;
    RngStream policy;
};

}  // namespace trafficlab
