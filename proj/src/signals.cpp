#include "trafficlab/signals.hpp"

#include <algorithm>

#include "trafficlab/errors.hpp"

namespace trafficlab {

double phase_duration(const SignalController& s) {
    switch (s.phase) {
        case SignalPhase::GreenA: return s.green_a;
        case SignalPhase::YellowA: return kYellowSeconds;
        case SignalPhase::AllRedA: return kAllRedSeconds;
        case SignalPhase::GreenB: return s.green_b;
        case SignalPhase::YellowB: return kYellowSeconds;
        case SignalPhase::AllRedB: return kAllRedSeconds;
    }
    return s.green_a;
}

namespace {

SignalPhase next_phase(SignalPhase p) {
    switch (p) {
        case SignalPhase::GreenA: return SignalPhase::YellowA;
        case SignalPhase::YellowA: return SignalPhase::AllRedA;
        case SignalPhase::AllRedA: return SignalPhase::GreenB;
        case SignalPhase::GreenB: return SignalPhase::YellowB;
        case SignalPhase::YellowB: return SignalPhase::AllRedB;
        case SignalPhase::AllRedB: return SignalPhase::GreenA;
    }
    return SignalPhase::GreenA;
}

}  // namespace

void tick_signal(SignalController& s, double dt) {
    s.phase_elapsed += dt;
    s.phase_time[static_cast<int>(s.phase)] += dt;
    // Durations are far larger than a tick, but loop for robustness.
    while (s.phase_elapsed >= phase_duration(s)) {
        s.phase_elapsed -= phase_duration(s);
        s.phase = next_phase(s.phase);
        if (s.phase == SignalPhase::GreenA) {
            s.green_a = s.pending_green_a;  // new duration takes effect at onset
        } else if (s.phase == SignalPhase::GreenB) {
            s.green_b = s.pending_green_b;
        }
    }
}

void set_green_duration(SignalController& s, bool group_a, double seconds) {
    if (!(seconds >= kGreenMin && seconds <= kGreenMax)) {
        throw OutOfRange("green duration " + std::to_string(seconds) + " outside [" +
                         std::to_string(kGreenMin) + ", " + std::to_string(kGreenMax) + "]");
    }
    if (group_a) {
        s.pending_green_a = seconds;
    } else {
        s.pending_green_b = seconds;
    }
}

bool group_green(const SignalController& s, bool group_a) {
    return group_a ? s.phase == SignalPhase::GreenA : s.phase == SignalPhase::GreenB;
}

bool group_non_red(const SignalController& s, bool group_a) {
    if (group_a) {
        return s.phase == SignalPhase::GreenA || s.phase == SignalPhase::YellowA;
    }
    return s.phase == SignalPhase::GreenB || s.phase == SignalPhase::YellowB;
}

int phase_code(const SignalController& s) {
    switch (s.phase) {
        case SignalPhase::GreenA: return 0;
        case SignalPhase::GreenB: return 2;
        default: return 1;
    }
}

double current_family_green(const SignalController& s) {
    switch (s.phase) {
        case SignalPhase::GreenA:
        case SignalPhase::YellowA:
        case SignalPhase::AllRedA:
            return s.green_a;
        default:
            return s.green_b;
    }
}

double gate_factor(double distance) {
    if (distance > kGateDistance) return 0.0;
    return 6000.0 * std::clamp(1.0 - distance / kGateDistance, 0.0, 1.0);
}

double approach_gate(const SignalController& s, bool group_a, double distance) {
    if (group_green(s, group_a)) return 0.0;
    const bool yellow = group_a ? s.phase == SignalPhase::YellowA : s.phase == SignalPhase::YellowB;
    if (yellow && distance <= kYellowExemptDistance) return 0.0;
    return gate_factor(distance);
}

}  // namespace trafficlab
