#pragma once
#include <stdexcept>
#include <string>

namespace trafficlab {

struct SimError : std::runtime_error {
    explicit SimError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CoincidentWaypoints : SimError {
    explicit CoincidentWaypoints(const std::string& msg) : SimError(msg) {}
};

struct InvalidLayoutIndex : SimError {
    explicit InvalidLayoutIndex(const std::string& msg) : SimError(msg) {}
};

struct DegenerateTarget : SimError {
    explicit DegenerateTarget(const std::string& msg) : SimError(msg) {}
};

struct OutOfRange : SimError {
    explicit OutOfRange(const std::string& msg) : SimError(msg) {}
};

struct LengthMismatch : SimError {
    explicit LengthMismatch(const std::string& msg) : SimError(msg) {}
};

struct EpisodeFinished : SimError {
    explicit EpisodeFinished(const std::string& msg) : SimError(msg) {}
};

struct NonFiniteLoss : SimError {
    explicit NonFiniteLoss(const std::string& msg) : SimError(msg) {}
};

struct SchemaMismatch : SimError {
    explicit SchemaMismatch(const std::string& msg) : SimError(msg) {}
};

struct IoError : SimError {
    explicit IoError(const std::string& msg) : SimError(msg) {}
};

struct ZeroDistance : SimError {
    explicit ZeroDistance(const std::string& msg) : SimError(msg) {}
};

}  // namespace trafficlab
