#include "trafficlab/rng.hpp"

#include <numeric>

namespace trafficlab {

std::uint64_t derive_seed(std::uint64_t master, const std::string& name) {
    // FNV-1a over the name, mixed with the master seed through splitmix64.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::uint64_t st = master ^ h;
    splitmix64(st);
    return splitmix64(st);
}

std::vector<std::uint32_t> RngStream::sample_indices(std::uint32_t n, std::uint32_t k) {
    if (k > n) k = n;
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(uniform_int(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace trafficlab
